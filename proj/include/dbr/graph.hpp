#ifndef DBR_GRAPH_HPP
#define DBR_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dbr {

/// Immutable simple undirected connected graph on vertices 0..n-1.
class Graph {
public:
    /// Builds from an edge list. Rejects loops, collapses duplicate
    /// edges, and requires the result to be connected (isolated ids
    /// created by gaps in the numbering count as disconnection).
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges as sorted (u,v) pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool adjacent(int u, int v) const;

    bool is_regular() const;
    int min_degree() const;
    int max_degree() const;

    /// Dense 0/1 adjacency matrix.
    Eigen::MatrixXd adjacency() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Two-coloring of a bipartite graph. Side B always comes first; when
/// the graph is semiregular with distinct degrees k < ell, B is the
/// side of smaller degree (so |B| >= |C|), otherwise B is the side
/// containing vertex 0.
struct Bipartition {
    std::vector<int> side_b;
    std::vector<int> side_c;
    std::vector<char> in_b;  // indicator per vertex
    std::optional<int> k;    // common degree on B, set by semiregular_profile
    std::optional<int> ell;  // common degree on C
};

/// All-pairs BFS data: metric, eccentricities, diameter, spheres.
class DistanceData {
public:
    explicit DistanceData(const Graph& g);

    int diameter() const { return diameter_; }
    int distance(int u, int v) const { return dist_(u, v); }
    int eccentricity(int u) const { return ecc_[u]; }
    const Eigen::MatrixXi& distance_matrix() const { return dist_; }

    /// Vertices at distance exactly i from u (empty for i > ecc(u)).
    const std::vector<int>& sphere(int u, int i) const;

    /// Vertices at distance at most k from u.
    std::vector<int> ball(int u, int k) const;

    /// 0/1 indicator matrix of the distance-i relation.
    Eigen::MatrixXd distance_indicator(int i) const;

private:
    Eigen::MatrixXi dist_;
    std::vector<int> ecc_;
    int diameter_;
    std::vector<std::vector<std::vector<int>>> spheres_;  // [u][i]
    std::vector<int> empty_;
};

/// Halved graphs of a bipartite semiregular graph, with the fitted
/// scalars of the walk-count relations NN^T = r A(H_B) + k I and
/// N^T N = s A(H_C) + ell I (absent when no scalar fits exactly).
struct HalvedPair {
    Graph h_b;
    Graph h_c;
    std::vector<int> b_vertices;  // h_b index -> original vertex id
    std::vector<int> c_vertices;
    std::optional<long long> r;
    std::optional<long long> s;
};

Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

DistanceData distance_data(const Graph& g);

/// Throws NotBipartite with an odd-cycle witness in detail["odd_cycle"].
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Common degrees (k, ell) of the two sides; fills part.k / part.ell.
/// Throws NotSemiregular with a same-side witness pair of distinct degree.
std::pair<int, int> semiregular_profile(const Graph& g, Bipartition& part);

HalvedPair halved_graphs(const Graph& g, const Bipartition& part);

/// Length of a shortest cycle; nullopt for trees.
std::optional<int> girth(const Graph& g);

}  // namespace dbr

#endif  // DBR_GRAPH_HPP
