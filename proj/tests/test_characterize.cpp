#include <doctest.h>

#include <cmath>
#include <random>

#include "dbr/characterize.hpp"
#include "dbr/corpus.hpp"
#include "dbr/error.hpp"
#include "fixtures.hpp"

using namespace dbr;

namespace {

struct Workspace {
    Graph g;
    DistanceData dd;
    SpectralDecomposition dec;
    PerronVector per;

    explicit Workspace(Graph graph)
        : g(std::move(graph)), dd(g), dec(decompose(g)), per(perron(g, dec)) {}
};

}  // namespace

TEST_CASE("locally distance-regular oracle") {
    Workspace q3(generate("hypercube", {3}));
    for (int u = 0; u < 8; ++u) {
        auto local = locally_distance_regular(q3.g, q3.dd, u);
        REQUIRE(local.regular);
        REQUIRE(local.numbers.rows.size() == 4);
        for (int i = 0; i <= 3; ++i) {
            CHECK(local.numbers.rows[i].toward == i);
            CHECK(local.numbers.rows[i].within == 0);
            CHECK(local.numbers.rows[i].away == 3 - i);
        }
    }

    Workspace k23(generate("complete_bipartite", {2, 3}));
    for (int u = 0; u < 5; ++u)
        CHECK(locally_distance_regular(k23.g, k23.dd, u).regular);

    // Row sums equal the degree of the vertices on that sphere.
    for (const auto& g : fixtures::corpus()) {
        DistanceData dd(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto local = locally_distance_regular(g, dd, u);
            if (!local.regular) continue;
            for (size_t i = 0; i < local.numbers.rows.size(); ++i) {
                const auto& row = local.numbers.rows[i];
                for (int v : dd.sphere(u, static_cast<int>(i)))
                    CHECK(row.toward + row.within + row.away == g.degree(v));
            }
        }
    }

    // Delorme: black (2,2) = vertex 10 fails via the distance-3 walk counts.
    Workspace delorme(generate("delorme"));
    auto local = locally_distance_regular(delorme.g, delorme.dd, 10);
    CHECK(!local.regular);
    bool some_fail = false;
    for (int u = 0; u < 32; ++u)
        some_fail =
            some_fail || !locally_distance_regular(delorme.g, delorme.dd, u).regular;
    CHECK(some_fail);
}

TEST_CASE("pseudo-distance-regular vertices") {
    Workspace c6(generate("cycle", {6}));
    for (int u = 0; u < 6; ++u)
        CHECK(pseudo_dr_vertex(c6.dec, c6.per, c6.dd, u, 1e-8).passed());

    Workspace sub(generate("subdivision_k4"));
    for (int u = 0; u < 10; ++u)
        CHECK(pseudo_dr_vertex(sub.dec, sub.per, sub.dd, u, 1e-8).passed());

    // Spectrally extremal everywhere, yet the Q-equality fails.
    Workspace delorme(generate("delorme"));
    for (int u = 0; u < 32; ++u) {
        Verdict v = pseudo_dr_vertex(delorme.dec, delorme.per, delorme.dd, u, 1e-8);
        CHECK(v.outcome == Outcome::Fail);
        CHECK(v.reason == "ExcessBoundGap");
    }
}

TEST_CASE("pseudo_dr_vertex matches the oracle at every corpus vertex") {
    std::mt19937_64 rng(20240815);
    auto graphs = fixtures::corpus();
    for (int i = 0; i < 15; ++i) graphs.push_back(fixtures::random_connected(rng, 10));
    for (const auto& g : graphs) {
        Workspace w(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto local = locally_distance_regular(w.g, w.dd, u);
            bool extremal =
                static_cast<int>(eigenvalue_support(w.dec, u, w.dec.tol()).size()) ==
                w.dd.eccentricity(u) + 1;
            Verdict v = pseudo_dr_vertex(w.dec, w.per, w.dd, u, 1e-8);
            CHECK(v.passed() == (local.regular && extremal));
        }
    }
}

TEST_CASE("pseudo-distance-regular sets") {
    Workspace c6(generate("cycle", {6}));
    std::vector<int> all6 = {0, 1, 2, 3, 4, 5};
    CHECK(pseudo_dr_set(c6.dec, c6.per, c6.dd, all6, 1e-8).passed());

    Workspace sub(generate("subdivision_k4"));
    Bipartition part = bipartition(sub.g);
    CHECK(pseudo_dr_set(sub.dec, sub.per, sub.dd, part.side_b, 1e-8).passed());
    // Side C has smaller eccentricity but is itself pseudo-distance-regular.
    CHECK(pseudo_dr_set(sub.dec, sub.per, sub.dd, part.side_c, 1e-8).passed());
    // The whole vertex set mixes eccentricities 3 and 4.
    std::vector<int> all10;
    for (int u = 0; u < 10; ++u) all10.push_back(u);
    Verdict mixed = pseudo_dr_set(sub.dec, sub.per, sub.dd, all10, 1e-8);
    CHECK(mixed.outcome == Outcome::Fail);
    CHECK(mixed.reason == "UnequalEccentricities");

    Workspace delorme(generate("delorme"));
    std::vector<int> all32;
    for (int u = 0; u < 32; ++u) all32.push_back(u);
    CHECK(pseudo_dr_set(delorme.dec, delorme.per, delorme.dd, all32, 1e-8).outcome ==
          Outcome::Fail);
}

TEST_CASE("diametral polynomial characterization") {
    Workspace c6(generate("cycle", {6}));
    Verdict pass = check_drg_diametral(c6.g, c6.dec, c6.dd, 1e-8);
    CHECK(pass.passed());
    CHECK(pass.evidence["p_values"].size() == 4);

    Workspace delorme(generate("delorme"));
    Verdict fail = check_drg_diametral(delorme.g, delorme.dec, delorme.dd, 1e-8);
    CHECK(fail.outcome == Outcome::Fail);
    CHECK(fail.reason == "ResidualExceedsTol");
    CHECK(fail.evidence.contains("witness_entry"));
    CHECK(fail.residual > 1e-3);

    Workspace cay(generate("cay_d8"));
    Verdict mismatch = check_drg_diametral(cay.g, cay.dec, cay.dd, 1e-8);
    CHECK(mismatch.outcome == Outcome::Fail);
    CHECK(mismatch.reason == "EigenvalueCountMismatch");
}

TEST_CASE("two-sided diametral characterization") {
    Workspace k23(generate("complete_bipartite", {2, 3}));
    Bipartition kpart = bipartition(k23.g);
    CHECK(check_dbrg_diametral(k23.g, k23.dec, k23.dd, kpart, 1e-8).passed());

    Workspace sub(generate("subdivision_k4"));
    Bipartition spart = bipartition(sub.g);
    CHECK(check_dbrg_diametral(sub.g, sub.dec, sub.dd, spart, 1e-8).passed());

    Workspace delorme(generate("delorme"));
    Bipartition dpart = bipartition(delorme.g);
    Verdict fail = check_dbrg_diametral(delorme.g, delorme.dec, delorme.dd, dpart, 1e-8);
    CHECK(fail.outcome == Outcome::Fail);
    CHECK(fail.evidence.contains("witness_entry"));
}

TEST_CASE("spectral excess, distance-regular form") {
    Workspace q3(generate("hypercube", {3}));
    auto [v, report] = spectral_excess_drg(q3.g, q3.dec, q3.dd, 1e-8);
    CHECK(v.passed());
    REQUIRE(report.p_global.has_value());
    CHECK(*report.p_global == doctest::Approx(1.0));
    CHECK(report.t == 1);

    Workspace c6(generate("cycle", {6}));
    auto [v6, r6] = spectral_excess_drg(c6.g, c6.dec, c6.dd, 1e-8);
    CHECK(v6.passed());
    CHECK(*r6.p_global == doctest::Approx(1.0));

    Workspace delorme(generate("delorme"));
    auto [vd, rd] = spectral_excess_drg(delorme.g, delorme.dec, delorme.dd, 1e-8);
    CHECK(vd.outcome == Outcome::Fail);

    Workspace k23(generate("complete_bipartite", {2, 3}));
    auto [vk, rk] = spectral_excess_drg(k23.g, k23.dec, k23.dd, 1e-8);
    CHECK(vk.outcome == Outcome::Fail);
    CHECK(vk.reason == "NotRegular");
}

TEST_CASE("spectral excess, distance-biregular form") {
    Workspace sub(generate("subdivision_k4"));
    Bipartition spart = bipartition(sub.g);
    auto [vs, rs] = spectral_excess_dbrg(sub.g, sub.dec, sub.dd, spart, 1e-8);
    CHECK(vs.passed());
    CHECK(vs.evidence["degenerate_c"].get<bool>());
    REQUIRE(rs.p_b.has_value());
    CHECK(*rs.p_b == doctest::Approx(1.0));
    CHECK(*rs.p_c == doctest::Approx(0.0));
    CHECK(rs.t == 1);

    Workspace k23(generate("complete_bipartite", {2, 3}));
    Bipartition kpart = bipartition(k23.g);
    auto [vk, rk] = spectral_excess_dbrg(k23.g, k23.dec, k23.dd, kpart, 1e-8);
    CHECK(vk.passed());
    CHECK(*rk.p_b == doctest::Approx(2.0));
    CHECK(*rk.p_c == doctest::Approx(1.0));

    Workspace delorme(generate("delorme"));
    Bipartition dpart = bipartition(delorme.g);
    auto [vd, rd] =
        spectral_excess_dbrg(delorme.g, delorme.dec, delorme.dd, dpart, 1e-8);
    CHECK(vd.outcome == Outcome::Fail);

    // Bipartite but not semiregular.
    Workspace chord(fixtures::c6_with_chord());
    Bipartition cpart = bipartition(chord.g);
    auto [vc, rc] = spectral_excess_dbrg(chord.g, chord.dec, chord.dd, cpart, 1e-8);
    CHECK(vc.outcome == Outcome::Fail);
    CHECK(vc.reason == "NotSemiregular");
}

TEST_CASE("halved-graph route") {
    Verdict sub = halved_route_dbrg(generate("subdivision_k4"), 1e-8);
    CHECK(sub.passed());
    CHECK(sub.evidence["r"].get<long long>() == 1);
    CHECK(sub.evidence["s"].get<long long>() == 1);

    Verdict star = halved_route_dbrg(generate("complete_bipartite", {1, 4}), 1e-8);
    CHECK(star.passed());

    // Regular inputs: the theorem's k < ell hypothesis fails, and indeed
    // both paper examples have distance-regular halves without being
    // distance-biregular.
    Verdict delorme = halved_route_dbrg(generate("delorme"), 1e-8);
    CHECK(delorme.outcome == Outcome::NotApplicable);
    CHECK(delorme.reason == "RegularInput");
    Verdict cay = halved_route_dbrg(generate("cay_d8"), 1e-8);
    CHECK(cay.outcome == Outcome::NotApplicable);
    CHECK(cay.reason == "RegularInput");
}

TEST_CASE("delorme halves are the Shrikhande graph") {
    Graph delorme = generate("delorme");
    Bipartition part = bipartition(delorme);
    HalvedPair halves = halved_graphs(delorme, part);
    for (const Graph* half : {&halves.h_b, &halves.h_c}) {
        CHECK(half->vertex_count() == 16);
        CHECK(half->is_regular());
        CHECK(half->degree(0) == 6);
        auto dec = decompose(*half);
        REQUIRE(dec.count() == 3);  // strongly regular: {6, 2^6, (-2)^9}
        CHECK(dec.eigenvalue(0) == doctest::Approx(6.0));
        CHECK(dec.eigenvalue(1) == doctest::Approx(2.0));
        CHECK(dec.eigenvalue(2) == doctest::Approx(-2.0));
        CHECK(dec.multiplicity(1) == 6);
        CHECK(dec.multiplicity(2) == 9);
        // Shrikhande rather than the 4x4 rook graph: no vertex whose
        // neighborhood induces two disjoint triangles, i.e. the local graph
        // is a 6-cycle.
        DistanceData dd(*half);
        for (int u = 0; u < 16; ++u) {
            for (int v : half->neighbors(u)) {
                int common = 0;
                for (int w : half->neighbors(u))
                    if (half->adjacent(v, w)) ++common;
                CHECK(common == 2);  // lambda = 2 and local 6-cycle
            }
        }
    }
    REQUIRE(halves.r.has_value());
    CHECK(*halves.r == 1);
}

TEST_CASE("cospectral girth route") {
    Verdict heawood = cospectral_girth_dbrg(generate("heawood"), 1e-8);
    CHECK(heawood.passed());
    CHECK(heawood.evidence["d"].get<int>() == 3);
    CHECK(heawood.evidence["k_d_b"].get<long long>() == 4);
    CHECK(heawood.evidence["k_d_c"].get<long long>() == 4);

    Verdict sub = cospectral_girth_dbrg(generate("subdivision_k4"), 1e-8);
    CHECK(sub.passed());
    CHECK(sub.evidence["d"].get<int>() == 4);
    CHECK(sub.evidence["k_d_b"].get<long long>() == 1);
    CHECK(sub.evidence["k_d_c"].get<long long>() == 0);

    Verdict k23 = cospectral_girth_dbrg(generate("complete_bipartite", {2, 3}), 1e-8);
    CHECK(k23.passed());

    // C6 with a chord is bipartite but not semiregular.
    Verdict chord = cospectral_girth_dbrg(fixtures::c6_with_chord(), 1e-8);
    CHECK(chord.outcome == Outcome::NotApplicable);
    CHECK(chord.reason == "NotSemiregular");

    // Q4 is distance-biregular but its girth 4 < 2d-2 = 6: no conclusion.
    Verdict q4 = cospectral_girth_dbrg(generate("hypercube", {4}), 1e-8);
    CHECK(q4.outcome == Outcome::NotApplicable);
    CHECK(q4.reason == "GirthTooSmall");
}

TEST_CASE("classification of the fixtures") {
    CHECK(classify(generate("hypercube", {3})).classification ==
          Classification::Both);
    CHECK(classify(generate("cycle", {6})).classification == Classification::Both);
    CHECK(classify(generate("complete_bipartite", {2, 3})).classification ==
          Classification::DBRG);
    CHECK(classify(generate("subdivision_k4")).classification ==
          Classification::DBRG);
    CHECK(classify(generate("delorme")).classification == Classification::Neither);
    CHECK(classify(generate("cay_d8")).classification == Classification::Neither);
    // Heawood is a bipartite distance-regular graph, so it is both.
    CHECK(classify(generate("heawood")).classification == Classification::Both);
    CHECK(classify(fixtures::petersen()).classification == Classification::DRG);
    CHECK(classify(fixtures::star_with_pendant()).classification ==
          Classification::Neither);
    CHECK(classify(fixtures::path(4)).classification == Classification::Neither);
}

TEST_CASE("classify does not raise disagreements on random graphs") {
    std::mt19937_64 rng(20240816);
    for (int i = 0; i < 40; ++i) {
        Graph g = i % 2 == 0 ? fixtures::random_connected(rng, 10)
                             : fixtures::random_connected_bipartite(rng, 10);
        CHECK_NOTHROW(classify(g));
    }
}

TEST_CASE("odd diameter with d+1 eigenvalues forces regularity") {
    auto check_lemma = [](const Graph& g) {
        if (!is_bipartite(g)) return;
        Bipartition part = bipartition(g);
        try {
            semiregular_profile(g, part);
        } catch (const Error&) {
            return;
        }
        DistanceData dd(g);
        auto dec = decompose(g);
        if (dd.diameter() % 2 == 1 && dec.count() == dd.diameter() + 1)
            CHECK(g.is_regular());
    };
    for (const auto& g : fixtures::corpus()) check_lemma(g);
    enumerate_small_bipartite(8, check_lemma);
}
