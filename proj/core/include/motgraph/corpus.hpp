#ifndef MOTGRAPH_CORPUS_HPP
#define MOTGRAPH_CORPUS_HPP

#include "motgraph/graphsum.hpp"

namespace motg {

/// The worked weight-4 sums and the running 5-edge example, as data.
namespace corpus {

/// The 3-vertex, 5-edge example graph with labels r1..r5.
Graph five_edge_example();

/// The five summands of the example differential of five_edge_example(),
/// in contraction order, with their signs (+,-,+,-,+).
std::vector<std::pair<Rational, Graph>> five_edge_differential_terms();

std::vector<std::string> example_names();
bool has_example(const std::string& name);

/// A named decomposable sum from the worked examples.
GraphSum example_sum(const std::string& name, const CanonicalOptions& opts = {});

/// The individual summands (sign, graph) before canonicalization.
std::vector<std::pair<Rational, Graph>> example_terms(const std::string& name);

}  // namespace corpus

}  // namespace motg

#endif
