#ifndef DBR_TESTS_FIXTURES_HPP
#define DBR_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "dbr/corpus.hpp"
#include "dbr/graph.hpp"

namespace fixtures {

inline dbr::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, 5 + i);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return dbr::Graph(10, std::move(edges));
}

// Star K_{1,4} with an extra pendant hanging off leaf 1.
inline dbr::Graph star_with_pendant() {
    return dbr::Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}});
}

inline dbr::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return dbr::Graph(n, std::move(edges));
}

// C6 plus the chord {0,3}: bipartite but not semiregular.
inline dbr::Graph c6_with_chord() {
    return dbr::Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
}

/// The named graphs every suite sweeps over.
inline std::vector<dbr::Graph> corpus() {
    std::vector<dbr::Graph> graphs;
    graphs.push_back(dbr::generate("delorme"));
    graphs.push_back(dbr::generate("cay_d8"));
    graphs.push_back(dbr::generate("cycle", {6}));
    graphs.push_back(dbr::generate("cycle", {4}));
    graphs.push_back(dbr::generate("hypercube", {3}));
    graphs.push_back(dbr::generate("complete_bipartite", {2, 3}));
    graphs.push_back(dbr::generate("complete_bipartite", {1, 4}));
    graphs.push_back(dbr::generate("complete_bipartite", {3, 3}));
    graphs.push_back(dbr::generate("subdivision_k4"));
    graphs.push_back(dbr::generate("heawood"));
    graphs.push_back(petersen());
    return graphs;
}

/// Random connected graph, edge probability in [0.3, 0.6].
inline dbr::Graph random_connected(std::mt19937_64& rng, int max_n = 12) {
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> prob(0.3, 0.6);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        int n = size(rng);
        double p = prob(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        try {
            return dbr::Graph(n, std::move(edges));
        } catch (...) {
            // disconnected; retry
        }
    }
}

/// Random connected bipartite graph.
inline dbr::Graph random_connected_bipartite(std::mt19937_64& rng, int max_n = 12) {
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> prob(0.3, 0.6);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        int n = size(rng);
        int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
        double p = prob(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = a; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        try {
            return dbr::Graph(n, std::move(edges));
        } catch (...) {
        }
    }
}

}  // namespace fixtures

#endif  // DBR_TESTS_FIXTURES_HPP
