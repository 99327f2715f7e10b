#include "dbr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "dbr/error.hpp"

namespace dbr {

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n <= 0) throw Error(ErrorKind::BadArgument, "graph needs at least one vertex");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::BadArgument, "vertex id out of range",
                        {{"u", u}, {"v", v}, {"n", n}});
        if (u == v)
            throw Error(ErrorKind::LoopEdge, "loop edge rejected", {{"vertex", u}});
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    auto dist = bfs_distances(*this, 0);
    for (int u = 0; u < n_; ++u) {
        if (dist[u] < 0)
            throw Error(ErrorKind::Disconnected, "graph is not connected",
                        {{"unreachable_vertex", u}});
    }
}

bool Graph::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

int Graph::min_degree() const {
    int d = n_;
    for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u))
            throw Error(ErrorKind::MalformedLine, "expected two nonnegative integers",
                        {{"line", line_no}, {"text", line}});
        std::string trailing;
        if (!(fields >> v) || (fields >> trailing) || u < 0 || v < 0)
            throw Error(ErrorKind::MalformedLine, "expected two nonnegative integers",
                        {{"line", line_no}, {"text", line}});
        if (u == v)
            throw Error(ErrorKind::LoopEdge, "loop edge rejected",
                        {{"line", line_no}, {"vertex", u}});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (max_id < 0)
        throw Error(ErrorKind::MalformedLine, "no edges in input");
    return Graph(max_id + 1, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

DistanceData::DistanceData(const Graph& g) {
    int n = g.vertex_count();
    dist_.resize(n, n);
    ecc_.assign(n, 0);
    spheres_.resize(n);
    diameter_ = 0;
    for (int u = 0; u < n; ++u) {
        auto d = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
            dist_(u, v) = d[v];
            ecc_[u] = std::max(ecc_[u], d[v]);
        }
        diameter_ = std::max(diameter_, ecc_[u]);
        spheres_[u].resize(ecc_[u] + 1);
        for (int v = 0; v < n; ++v) spheres_[u][d[v]].push_back(v);
    }
}

const std::vector<int>& DistanceData::sphere(int u, int i) const {
    if (i < 0 || i >= static_cast<int>(spheres_[u].size())) return empty_;
    return spheres_[u][i];
}

std::vector<int> DistanceData::ball(int u, int k) const {
    std::vector<int> out;
    for (int i = 0; i <= std::min(k, ecc_[u]); ++i)
        out.insert(out.end(), spheres_[u][i].begin(), spheres_[u][i].end());
    std::sort(out.begin(), out.end());
    return out;
}

Eigen::MatrixXd DistanceData::distance_indicator(int i) const {
    int n = dist_.rows();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (dist_(u, v) == i) a(u, v) = 1.0;
    return a;
}

DistanceData distance_data(const Graph& g) { return DistanceData(g); }

namespace {

struct TwoColoring {
    bool ok = false;
    std::vector<char> color;
    std::vector<int> odd_cycle;
};

TwoColoring two_color(const Graph& g) {
    int n = g.vertex_count();
    TwoColoring out;
    out.color.assign(n, -1);
    std::vector<int> parent(n, -1);
    std::deque<int> queue{0};
    out.color[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (out.color[v] < 0) {
                out.color[v] = 1 - out.color[u];
                parent[v] = u;
                queue.push_back(v);
            } else if (out.color[v] == out.color[u]) {
                // Odd cycle: join the two BFS-tree paths at their meeting point.
                std::vector<int> pu{u}, pv{v};
                int a = u, b = v;
                auto depth = [&](int x) {
                    int d = 0;
                    for (int y = x; parent[y] >= 0; y = parent[y]) ++d;
                    return d;
                };
                int da = depth(a), db = depth(b);
                while (da > db) { a = parent[a]; pu.push_back(a); --da; }
                while (db > da) { b = parent[b]; pv.push_back(b); --db; }
                while (a != b) {
                    a = parent[a];
                    b = parent[b];
                    pu.push_back(a);
                    pv.push_back(b);
                }
                out.odd_cycle = pu;
                for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
                    out.odd_cycle.push_back(*it);
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

std::optional<int> common_degree(const Graph& g, const std::vector<int>& side) {
    int d = g.degree(side.front());
    for (int u : side)
        if (g.degree(u) != d) return std::nullopt;
    return d;
}

}  // namespace

bool is_bipartite(const Graph& g) { return two_color(g).ok; }

Bipartition bipartition(const Graph& g) {
    auto coloring = two_color(g);
    if (!coloring.ok)
        throw Error(ErrorKind::NotBipartite, "odd cycle found",
                    {{"odd_cycle", coloring.odd_cycle}});
    std::vector<int> side0, side1;
    for (int u = 0; u < g.vertex_count(); ++u)
        (coloring.color[u] == 0 ? side0 : side1).push_back(u);

    bool swap_sides = false;
    if (!side1.empty()) {
        auto d0 = common_degree(g, side0);
        auto d1 = common_degree(g, side1);
        // With a (k, ell)-semiregular profile and k < ell, side B is the
        // smaller-degree (hence larger) side.
        if (d0 && d1 && *d1 < *d0) swap_sides = true;
    }
    if (swap_sides) std::swap(side0, side1);

    Bipartition part;
    part.side_b = std::move(side0);
    part.side_c = std::move(side1);
    part.in_b.assign(g.vertex_count(), 0);
    for (int u : part.side_b) part.in_b[u] = 1;
    return part;
}

std::pair<int, int> semiregular_profile(const Graph& g, Bipartition& part) {
    for (const auto* side : {&part.side_b, &part.side_c}) {
        if (side->empty()) continue;
        int d = g.degree(side->front());
        for (int u : *side) {
            if (g.degree(u) != d)
                throw Error(ErrorKind::NotSemiregular,
                            "two same-side vertices with distinct degrees",
                            {{"witness", {side->front(), u}},
                             {"degrees", {d, g.degree(u)}}});
        }
    }
    int k = g.degree(part.side_b.front());
    int ell = part.side_c.empty() ? 0 : g.degree(part.side_c.front());
    part.k = k;
    part.ell = ell;
    return {k, ell};
}

HalvedPair halved_graphs(const Graph& g, const Bipartition& part) {
    DistanceData dd(g);
    auto build_half = [&](const std::vector<int>& side) {
        std::vector<int> index(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(side.size()); ++i) index[side[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < static_cast<int>(side.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(side.size()); ++j)
                if (dd.distance(side[i], side[j]) == 2) edges.emplace_back(i, j);
        return Graph(static_cast<int>(side.size()), std::move(edges));
    };
    Graph h_b = build_half(part.side_b);
    Graph h_c = build_half(part.side_c);

    // Walk counts (NN^T)_{uv} = |common neighbors| are integers, so the
    // scalar fit is exact: all entries on half-graph edges must agree.
    auto fit_scalar = [&](const Graph& half,
                          const std::vector<int>& side) -> std::optional<long long> {
        std::optional<long long> r;
        for (auto [i, j] : half.edges()) {
            long long walks = 0;
            for (int w : g.neighbors(side[i]))
                if (g.adjacent(w, side[j])) ++walks;
            if (!r) r = walks;
            else if (*r != walks) return std::nullopt;
        }
        return r ? r : std::optional<long long>(0);
    };

    HalvedPair out{std::move(h_b), std::move(h_c), part.side_b, part.side_c,
                   std::nullopt, std::nullopt};
    out.r = fit_scalar(out.h_b, part.side_b);
    out.s = fit_scalar(out.h_c, part.side_c);
    return out;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == n - 1) return std::nullopt;  // connected tree
    int best = 2 * n + 1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace dbr
