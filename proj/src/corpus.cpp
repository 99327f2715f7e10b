#include "dbr/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "dbr/error.hpp"
#include "dbr/spectral.hpp"

namespace dbr {

namespace {

void require_params(const FamilySpec& spec, size_t count) {
    if (spec.params.size() != count)
        throw Error(ErrorKind::BadParams, "family " + spec.name + " expects " +
                                              std::to_string(count) + " parameter(s)");
}

Graph make_delorme() {
    // Black (x,y) -> 4x + y, white (x,y) -> 16 + 4x + y, x, y in Z_4.
    // White (x,y) is adjacent to black (x,y), (x+1,y), (x+1,y+1).
    auto black = [](int x, int y) { return 4 * ((x + 8) % 4) + (y + 8) % 4; };
    auto white = [](int x, int y) { return 16 + 4 * ((x + 8) % 4) + (y + 8) % 4; };
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            edges.emplace_back(white(x, y), black(x, y));
            edges.emplace_back(white(x, y), black(x + 1, y));
            edges.emplace_back(white(x, y), black(x + 1, y + 1));
        }
    return Graph(32, std::move(edges));
}

Graph make_cay_d8() {
    // Dihedral group of order 16: rotations r^i -> i, reflections s r^i -> 8+i.
    // Connection set {sr, sr^2, sr^4}: r^a ~ s r^b iff a + b in {1,2,4} mod 8.
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 8; ++a)
        for (int j : {1, 2, 4}) edges.emplace_back(a, 8 + ((j - a) % 8 + 8) % 8);
    return Graph(16, std::move(edges));
}

Graph make_hypercube(int dim) {
    if (dim < 1 || dim > 11)
        throw Error(ErrorKind::BadParams, "hypercube dimension must be in [1, 11]");
    int n = 1 << dim;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < dim; ++bit)
            if (int v = u ^ (1 << bit); u < v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw Error(ErrorKind::BadParams, "complete_bipartite needs positive sides");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph(m + n, std::move(edges));
}

Graph make_subdivision_k4() {
    const std::pair<int, int> k4_edges[] = {{0, 1}, {0, 2}, {0, 3},
                                            {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::pair<int, int>> edges;
    int mid = 4;
    for (auto [u, v] : k4_edges) {
        edges.emplace_back(u, mid);
        edges.emplace_back(mid, v);
        ++mid;
    }
    return Graph(10, std::move(edges));
}

Graph make_heawood() {
    // Incidence graph of the Fano plane: points 0..6, lines 7..13 where
    // line j contains points {j, j+1, j+3} mod 7.
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 7; ++j)
        for (int d : {0, 1, 3}) edges.emplace_back((j + d) % 7, 7 + j);
    return Graph(14, std::move(edges));
}

void gate_spectrum(const Graph& g, const std::string& family,
                   const std::vector<std::pair<double, int>>& expected) {
    auto dec = decompose(g);
    bool ok = dec.count() == static_cast<int>(expected.size());
    for (int r = 0; ok && r < dec.count(); ++r)
        ok = std::abs(dec.eigenvalue(r) - expected[r].first) <= 1e-8 &&
             dec.multiplicity(r) == expected[r].second;
    if (!ok) {
        nlohmann::json got = nlohmann::json::array();
        for (int r = 0; r < dec.count(); ++r)
            got.push_back({dec.eigenvalue(r), dec.multiplicity(r)});
        throw Error(ErrorKind::FixtureGateFailed,
                    family + " generator spectrum gate failed", {{"spectrum", got}});
    }
}

void gate_delorme(const Graph& g) {
    const double s5 = std::sqrt(5.0);
    gate_spectrum(g, "delorme",
                  {{3, 1}, {s5, 6}, {1, 9}, {-1, 9}, {-s5, 6}, {-3, 1}});
    DistanceData dd(g);
    if (dd.diameter() != 5)
        throw Error(ErrorKind::FixtureGateFailed, "delorme diameter gate failed",
                    {{"diameter", dd.diameter()}});
    // Walk-count witness: some vertex sees two distance-3 neighbors reached
    // by two and by one walk of length three respectively.
    Eigen::MatrixXd a = g.adjacency();
    Eigen::MatrixXd a3 = a * a * a;
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool two = false, one = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dd.distance(u, v) != 3) continue;
            long long walks = std::llround(a3(u, v));
            two = two || walks == 2;
            one = one || walks == 1;
        }
        if (two && one) return;
    }
    throw Error(ErrorKind::FixtureGateFailed,
                "delorme walk-count witness not found");
}

void gate_cay_d8(const Graph& g) {
    const double s3 = std::sqrt(3.0);
    gate_spectrum(g, "cay_d8",
                  {{3, 1}, {s3, 4}, {1, 3}, {-1, 3}, {-s3, 4}, {-3, 1}});
    DistanceData dd(g);
    if (dd.diameter() != 4)
        throw Error(ErrorKind::FixtureGateFailed, "cay_d8 diameter gate failed",
                    {{"diameter", dd.diameter()}});
    auto part = bipartition(g);
    auto halves = halved_graphs(g, part);
    for (const Graph* half : {&halves.h_b, &halves.h_c})
        gate_spectrum(*half, "cay_d8 halved", {{6, 1}, {0, 4}, {-2, 3}});
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    if (spec.name == "delorme") {
        require_params(spec, 0);
        Graph g = make_delorme();
        gate_delorme(g);
        return g;
    }
    if (spec.name == "cay_d8") {
        require_params(spec, 0);
        Graph g = make_cay_d8();
        gate_cay_d8(g);
        return g;
    }
    if (spec.name == "hypercube") {
        require_params(spec, 1);
        return make_hypercube(spec.params[0]);
    }
    if (spec.name == "cycle") {
        require_params(spec, 1);
        return make_cycle(spec.params[0]);
    }
    if (spec.name == "complete_bipartite") {
        require_params(spec, 2);
        return make_complete_bipartite(spec.params[0], spec.params[1]);
    }
    if (spec.name == "subdivision_k4") {
        require_params(spec, 0);
        return make_subdivision_k4();
    }
    if (spec.name == "heawood") {
        require_params(spec, 0);
        return make_heawood();
    }
    throw Error(ErrorKind::UnknownFamily, "unknown family " + spec.name);
}

Graph generate(const std::string& name, std::vector<int> params) {
    return generate(FamilySpec{name, std::move(params)});
}

std::vector<std::string> known_families() {
    return {"delorme",  "cay_d8",          "hypercube", "cycle",
            "complete_bipartite", "subdivision_k4", "heawood"};
}

namespace {

using RowMask = std::uint32_t;

bool biadjacency_connected(const std::vector<RowMask>& rows, int b) {
    RowMask seen_cols = 0;
    std::vector<char> seen_row(rows.size(), 0);
    seen_row[0] = 1;
    RowMask frontier_cols = rows[0];
    seen_cols = frontier_cols;
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!seen_row[i] && (rows[i] & seen_cols)) {
                seen_row[i] = 1;
                RowMask fresh = rows[i] & ~seen_cols;
                seen_cols |= fresh;
                grew = true;
            }
        }
    }
    if (seen_cols != (RowMask(1) << b) - 1) return false;
    for (char s : seen_row)
        if (!s) return false;
    return true;
}

std::vector<RowMask> normal_form(std::vector<RowMask> rows, int b) {
    // Alternate descending row/column sorts until stable (bounded); an
    // imperfect canonical form is fine, duplicates are allowed downstream.
    int a = static_cast<int>(rows.size());
    for (int iter = 0; iter < 16; ++iter) {
        bool changed = false;
        std::vector<RowMask> sorted = rows;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted != rows) {
            rows = std::move(sorted);
            changed = true;
        }
        std::vector<RowMask> cols(b, 0);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rows[i] >> j & 1) cols[j] |= RowMask(1) << i;
        std::vector<RowMask> csorted = cols;
        std::sort(csorted.begin(), csorted.end(), std::greater<>());
        if (csorted != cols) {
            std::vector<RowMask> rebuilt(a, 0);
            for (int j = 0; j < b; ++j)
                for (int i = 0; i < a; ++i)
                    if (csorted[j] >> i & 1) rebuilt[i] |= RowMask(1) << j;
            rows = std::move(rebuilt);
            changed = true;
        }
        if (!changed) break;
    }
    return rows;
}

std::vector<RowMask> transpose_rows(const std::vector<RowMask>& rows, int b) {
    std::vector<RowMask> cols(b, 0);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < b; ++j)
            if (rows[i] >> j & 1) cols[j] |= RowMask(1) << i;
    return cols;
}

std::string form_key(int a, int b, const std::vector<RowMask>& rows) {
    std::string key;
    key.push_back(static_cast<char>(a));
    key.push_back(static_cast<char>(b));
    for (RowMask r : rows) {
        key.push_back(static_cast<char>(r & 0xff));
        key.push_back(static_cast<char>(r >> 8 & 0xff));
    }
    return key;
}

}  // namespace

void enumerate_small_bipartite(int max_n,
                               const std::function<void(const Graph&)>& visit) {
    if (max_n > 12)
        throw Error(ErrorKind::BadParams, "enumeration supported up to 12 vertices");
    std::unordered_set<std::string> seen;
    for (int n = 2; n <= max_n; ++n) {
        for (int a = 1; 2 * a <= n; ++a) {
            int b = n - a;
            RowMask full = (RowMask(1) << b) - 1;
            std::vector<RowMask> rows(a);
            // Rows are chosen non-increasing as integers, which fixes one
            // representative per row permutation.
            auto emit = [&]() {
                RowMask covered = 0;
                for (RowMask r : rows) covered |= r;
                if (covered != full) return;
                if (!biadjacency_connected(rows, b)) return;
                auto form = normal_form(rows, b);
                if (a == b) {
                    auto tform = normal_form(transpose_rows(rows, b), b);
                    if (tform < form) form = tform;
                }
                if (!seen.insert(form_key(a, b, form)).second) return;
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        if (form[i] >> j & 1) edges.emplace_back(i, a + j);
                visit(Graph(n, std::move(edges)));
            };
            std::function<void(int, RowMask)> rec = [&](int i, RowMask limit) {
                if (i == a) {
                    emit();
                    return;
                }
                for (RowMask r = limit; r >= 1; --r) {
                    rows[i] = r;
                    rec(i + 1, r);
                }
            };
            rec(0, full);
        }
    }
}

std::vector<Graph> enumerate_small_bipartite(int max_n) {
    std::vector<Graph> out;
    enumerate_small_bipartite(max_n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace dbr
