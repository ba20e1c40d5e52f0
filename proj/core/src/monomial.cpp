#include "motgraph/monomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace motg {

std::optional<int> simplex_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 't') return std::nullopt;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  return std::stoi(name.substr(1));
}

std::string simplex_name(int index) { return "t" + std::to_string(index); }

Monomial::Monomial(Rational c) : coeff_(std::move(c)) {
  if (coeff_ == 0) throw Error("Monomial: zero coefficient");
}

Monomial::Monomial(Rational c, std::map<std::string, int> exps)
    : coeff_(std::move(c)), exps_(std::move(exps)) {
  if (coeff_ == 0) throw Error("Monomial: zero coefficient");
  for (auto it = exps_.begin(); it != exps_.end();) {
    if (it->second == 0)
      it = exps_.erase(it);
    else
      ++it;
  }
}

Monomial Monomial::symbol(const std::string& name, int exp) {
  Monomial m;
  if (exp != 0) m.exps_[name] = exp;
  return m;
}

int Monomial::exponent(const std::string& name) const {
  auto it = exps_.find(name);
  return it == exps_.end() ? 0 : it->second;
}

namespace {
int checked_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s > INT32_MAX || s < INT32_MIN) throw Error("Monomial: exponent overflow");
  return static_cast<int>(s);
}
}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.coeff_ = coeff_ * o.coeff_;
  r.exps_ = exps_;
  for (const auto& [name, e] : o.exps_) {
    int ne = checked_add(r.exponent(name), e);
    if (ne == 0)
      r.exps_.erase(name);
    else
      r.exps_[name] = ne;
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  r.coeff_ = Rational(1) / coeff_;
  for (const auto& [name, e] : exps_) r.exps_[name] = -e;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return Monomial();
  Monomial r;
  r.coeff_ = 1;
  Rational base = coeff_;
  int n = k >= 0 ? k : -k;
  for (int i = 0; i < n; ++i) r.coeff_ *= base;
  if (k < 0) r.coeff_ = Rational(1) / r.coeff_;
  for (const auto& [name, e] : exps_) {
    long long ne = static_cast<long long>(e) * k;
    if (ne > INT32_MAX || ne < INT32_MIN) throw Error("Monomial: exponent overflow");
    if (ne != 0) r.exps_[name] = static_cast<int>(ne);
  }
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  if (exps_ != o.exps_) return exps_ < o.exps_;
  return coeff_ < o.coeff_;
}

bool Monomial::has_simplex_coordinate() const {
  for (const auto& [name, e] : exps_)
    if (simplex_index(name)) return true;
  return false;
}

int Monomial::max_simplex_index() const {
  int mx = -1;
  for (const auto& [name, e] : exps_)
    if (auto idx = simplex_index(name)) mx = std::max(mx, *idx);
  return mx;
}

std::string Monomial::str() const {
  std::ostringstream os;
  os << coeff_.str();
  for (const auto& [name, e] : exps_) {
    os << '*' << name;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

ExtLabel substitute(const Monomial& m, const SubstRule& rule) {
  Monomial out(m.coeff());
  int zero_net = 0;
  bool touched_zero = false;
  for (const auto& [name, e] : m.exps()) {
    auto it = rule.find(name);
    if (it == rule.end()) {
      out = out * Monomial::symbol(name, e);
      continue;
    }
    switch (it->second.kind) {
      case ExtLabel::Kind::Regular:
        out = out * it->second.value.pow(e);
        break;
      case ExtLabel::Kind::Zero:
        touched_zero = true;
        zero_net += e;
        break;
      case ExtLabel::Kind::Infinity:
        touched_zero = true;
        zero_net -= e;
        break;
    }
  }
  if (touched_zero) {
    if (zero_net > 0) return ExtLabel::zero();
    if (zero_net < 0) return ExtLabel::infinity();
    throw IndeterminateForm("substitute: net zero exponent for a 0-valued symbol in " + m.str());
  }
  return ExtLabel::regular(out);
}

double evaluate(const Monomial& m, const std::map<std::string, double>& assignment) {
  double v = static_cast<double>(m.coeff());
  for (const auto& [name, e] : m.exps()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw MissingAssignment("evaluate: no value for " + name);
    if (it->second == 0.0) throw ZeroAssignment("evaluate: zero value for " + name);
    v *= std::pow(it->second, e);
  }
  return v;
}

// Accepts products of factors "num", "num/den", "sym", "sym^k" joined by '*'
// and at most one '/' splitting numerator and denominator groups,
// e.g. "2*a0*b^2/(3*c)" or "r2*r5/r4".
namespace {
struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Monomial parse_factor() {
    skip_ws();
    if (eat('(')) {
      Monomial m = parse_product();
      if (!eat(')')) throw Error("parse_monomial: expected ')'");
      return m;
    }
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) {
      size_t j = i;
      if (s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Rational c(s.substr(i, j - i));
      i = j;
      return Monomial(c);
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string name = s.substr(i, j - i);
      i = j;
      int exp = 1;
      if (eat('^')) {
        skip_ws();
        size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw Error("parse_monomial: bad exponent");
        exp = std::stoi(s.substr(i, k - i));
        i = k;
      }
      return Monomial::symbol(name, exp);
    }
    throw Error("parse_monomial: unexpected character in '" + s + "'");
  }
  Monomial parse_product() {
    Monomial m = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        m = m * parse_factor();
      } else if (eat('/')) {
        m = m * parse_factor().inverse();
      } else {
        break;
      }
    }
    return m;
  }
};
}  // namespace

Monomial parse_monomial(const std::string& text) {
  Parser p(text);
  Monomial m = p.parse_product();
  p.skip_ws();
  if (p.i != text.size()) throw Error("parse_monomial: trailing input in '" + text + "'");
  return m;
}

}  // namespace motg
