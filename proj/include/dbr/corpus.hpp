#ifndef DBR_CORPUS_HPP
#define DBR_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "dbr/graph.hpp"

namespace dbr {

struct FamilySpec {
    std::string name;
    std::vector<int> params;
};

/// Deterministic generators. Supported families:
///   delorme                    32-vertex regular bipartite graph with
///                              Shrikhande halves (checked against its
///                              published spectrum and diameter on build)
///   cay_d8                     order-16 dihedral Cayley graph with
///                              connection set {sr, sr^2, sr^4} (spectrum
///                              gate likewise)
///   hypercube n, cycle n, complete_bipartite m n, subdivision_k4, heawood
Graph generate(const FamilySpec& spec);

Graph generate(const std::string& name, std::vector<int> params = {});

std::vector<std::string> known_families();

/// Streams connected bipartite graphs with 2..max_n vertices. Labeled
/// duplicates of the same isomorphism class may appear; every class is
/// covered. Deterministic order.
void enumerate_small_bipartite(int max_n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_small_bipartite(int max_n);

}  // namespace dbr

#endif  // DBR_CORPUS_HPP
