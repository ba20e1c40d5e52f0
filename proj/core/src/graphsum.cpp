#include "motgraph/graphsum.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace motg {

GraphSum GraphSum::of(const Rational& c, const Graph& g, const CanonicalOptions& opts) {
  GraphSum s;
  s.add_term(c, g, opts);
  return s;
}

void GraphSum::add_term(const Rational& c, const Graph& g, const CanonicalOptions& opts) {
  if (c == 0) return;
  CanonicalTerm t = canonical_form(c, g, opts);
  if (t.zero) return;
  add_canonical(t.key, t.coeff, t.representative);
}

void GraphSum::add_canonical(const std::string& key, const Rational& c, const Graph& rep) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{c, rep});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

GraphSum GraphSum::operator+(const GraphSum& o) const {
  GraphSum r = *this;
  for (const auto& [key, term] : o.terms_) r.add_canonical(key, term.coeff, term.rep);
  return r;
}

GraphSum GraphSum::operator-(const GraphSum& o) const {
  GraphSum r = *this;
  for (const auto& [key, term] : o.terms_) r.add_canonical(key, -term.coeff, term.rep);
  return r;
}

GraphSum GraphSum::operator*(const Rational& q) const {
  GraphSum r;
  if (q == 0) return r;
  for (const auto& [key, term] : terms_) r.add_canonical(key, term.coeff * q, term.rep);
  return r;
}

bool GraphSum::operator==(const GraphSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
  return true;
}

GraphSum GraphSum::product(const GraphSum& o, const CanonicalOptions& opts) const {
  GraphSum r;
  for (const auto& [ka, ta] : terms_)
    for (const auto& [kb, tb] : o.terms_)
      r.add_term(ta.coeff * tb.coeff, concat(ta.rep, tb.rep), opts);
  return r;
}

GraphSum GraphSum::connected_part() const {
  GraphSum r;
  for (const auto& [key, term] : terms_)
    if (betti0(term.rep) <= 1) r.add_canonical(key, term.coeff, term.rep);
  return r;
}

GraphSum GraphSum::disconnected_part() const {
  GraphSum r;
  for (const auto& [key, term] : terms_)
    if (betti0(term.rep) > 1) r.add_canonical(key, term.coeff, term.rep);
  return r;
}

std::string GraphSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, term] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << term.coeff.str() << ")*[" << key << "]";
  }
  return os.str();
}

std::string graphsum_to_json(const GraphSum& s) {
  nlohmann::json j;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, term] : s.terms()) {
    nlohmann::json t;
    t["key"] = key_to_hex(key);
    t["coeff"] = {numerator(term.coeff).str(), denominator(term.coeff).str()};
    t["graph"] = nlohmann::json::parse(graph_to_json(term.rep));
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump(2);
}

}  // namespace motg
