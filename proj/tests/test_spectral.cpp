#include <doctest.h>

#include <cmath>
#include <random>

#include "dbr/corpus.hpp"
#include "dbr/error.hpp"
#include "dbr/spectral.hpp"
#include "fixtures.hpp"

using namespace dbr;

namespace {

void check_spectrum(const SpectralDecomposition& dec,
                    const std::vector<std::pair<double, int>>& expected) {
    REQUIRE(dec.count() == static_cast<int>(expected.size()));
    for (int r = 0; r < dec.count(); ++r) {
        CHECK(dec.eigenvalue(r) == doctest::Approx(expected[r].first).epsilon(1e-8));
        CHECK(dec.multiplicity(r) == expected[r].second);
    }
}

void check_idempotent_suite(const Graph& g, const SpectralDecomposition& dec) {
    double window = 10 * dec.tol() * std::max(1.0, dec.spectral_radius());
    int n = g.vertex_count();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < dec.count(); ++r) {
        Eigen::MatrixXd e = dec.idempotent(r);
        CHECK((e * e - e).cwiseAbs().maxCoeff() <= window);
        CHECK(std::abs(e.trace() - dec.multiplicity(r)) <= window * n);
        for (int s = r + 1; s < dec.count(); ++s)
            CHECK((e * dec.idempotent(s)).cwiseAbs().maxCoeff() <= window);
        sum += e;
        recon += dec.eigenvalue(r) * e;
    }
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= window);
    CHECK((recon - g.adjacency()).cwiseAbs().maxCoeff() <=
          window * (1 + std::abs(dec.eigenvalue(0))));
}

}  // namespace

TEST_CASE("paper spectra") {
    const double s5 = std::sqrt(5.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    check_spectrum(decompose(generate("delorme")),
                   {{3, 1}, {s5, 6}, {1, 9}, {-1, 9}, {-s5, 6}, {-3, 1}});
    check_spectrum(decompose(generate("cay_d8")),
                   {{3, 1}, {s3, 4}, {1, 3}, {-1, 3}, {-s3, 4}, {-3, 1}});
    check_spectrum(decompose(generate("complete_bipartite", {2, 3})),
                   {{s6, 1}, {0, 3}, {-s6, 1}});
}

TEST_CASE("idempotent invariants on corpus and random graphs") {
    std::mt19937_64 rng(20240812);
    auto graphs = fixtures::corpus();
    for (int i = 0; i < 15; ++i) graphs.push_back(fixtures::random_connected(rng));
    for (const auto& g : graphs) check_idempotent_suite(g, decompose(g));
}

TEST_CASE("eigenvalue support bound |Phi_u| >= ecc(u) + 1") {
    std::mt19937_64 rng(20240813);
    auto graphs = fixtures::corpus();
    for (int i = 0; i < 25; ++i) graphs.push_back(fixtures::random_connected(rng));
    for (const auto& g : graphs) {
        auto dec = decompose(g);
        DistanceData dd(g);
        CHECK(dec.count() >= dd.diameter() + 1);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto phi = eigenvalue_support(dec, u, dec.tol());
            CHECK(static_cast<int>(phi.size()) >= dd.eccentricity(u) + 1);
        }
    }
}

TEST_CASE("support specifics") {
    // Every Delorme vertex is spectrally extremal with |Phi_u| = 6.
    Graph delorme = generate("delorme");
    auto dec = decompose(delorme);
    for (int u = 0; u < delorme.vertex_count(); ++u)
        CHECK(eigenvalue_support(dec, u, dec.tol()).size() == 6);

    // The center of K_{1,4} misses the kernel: support {2, -2} only.
    Graph star = generate("complete_bipartite", {1, 4});
    auto sdec = decompose(star);
    auto phi = eigenvalue_support(sdec, 0, sdec.tol());
    REQUIRE(phi.size() == 2);
    CHECK(sdec.eigenvalue(phi[0]) == doctest::Approx(2.0));
    CHECK(sdec.eigenvalue(phi[1]) == doctest::Approx(-2.0));
}

TEST_CASE("perron vector") {
    Graph delorme = generate("delorme");
    auto dec = decompose(delorme);
    auto per = perron(delorme, dec);
    CHECK(per.lambda == doctest::Approx(3.0));
    for (int u = 0; u < 32; ++u)
        CHECK(per.v(u) == doctest::Approx(1.0 / std::sqrt(32.0)));

    Graph k23 = generate("complete_bipartite", {2, 3});
    auto kdec = decompose(k23);
    CHECK(perron(k23, kdec).lambda == doctest::Approx(std::sqrt(6.0)));

    Graph sub = generate("subdivision_k4");
    auto sdec = decompose(sub);
    auto sper = perron(sub, sdec);
    CHECK(sper.lambda == doctest::Approx(std::sqrt(6.0)));
    Eigen::VectorXd residual = sub.adjacency() * sper.v - sper.lambda * sper.v;
    CHECK(residual.cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(sper.v.norm() == doctest::Approx(1.0));
    // Entries proportional to sqrt(3) on branch vertices, sqrt(2) on
    // subdivision vertices.
    CHECK(sper.v(0) / sper.v(4) == doctest::Approx(std::sqrt(3.0 / 2.0)));

    // Non-semiregular, non-regular graph goes through the idempotent column.
    Graph star = fixtures::star_with_pendant();
    auto stdec = decompose(star);
    auto stper = perron(star, stdec);
    CHECK(stper.v.minCoeff() > 0);
    Eigen::VectorXd sres = star.adjacency() * stper.v - stper.lambda * stper.v;
    CHECK(sres.cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("local measures") {
    Graph delorme = generate("delorme");
    auto dec = decompose(delorme);
    Measure global = global_measure(dec);
    std::vector<double> expected = {1. / 32, 6. / 32, 9. / 32, 9. / 32, 6. / 32, 1. / 32};
    REQUIRE(global.weights.size() == expected.size());
    for (size_t r = 0; r < expected.size(); ++r)
        CHECK(global.weights[r] == doctest::Approx(expected[r]));

    // Vertex measures are probability measures.
    for (int u = 0; u < delorme.vertex_count(); ++u) {
        Measure m = local_measure(dec, u);
        double total = 0;
        for (double w : m.weights) total += w;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }

    // Side measures of the subdivision of K4 against the half-trace
    // identities; the B side keeps weight 1/3 at eigenvalue 0.
    Graph sub = generate("subdivision_k4");
    auto sdec = decompose(sub);
    Bipartition part = bipartition(sub);
    Measure mb = local_measure(sdec, part.side_b);
    Measure mc = local_measure(sdec, part.side_c);
    REQUIRE(sdec.count() == 5);
    for (int r = 0; r < sdec.count(); ++r) {
        double tr_b = 0, tr_c = 0;
        Eigen::MatrixXd e = sdec.idempotent(r);
        for (int u : part.side_b) tr_b += e(u, u);
        for (int u : part.side_c) tr_c += e(u, u);
        CHECK(mb.weights[r] == doctest::Approx(tr_b / part.side_b.size()));
        CHECK(mc.weights[r] == doctest::Approx(tr_c / part.side_c.size()));
        if (std::abs(sdec.eigenvalue(r)) > 1e-8) {
            CHECK(mb.weights[r] ==
                  doctest::Approx(0.5 * sdec.multiplicity(r) / part.side_b.size()));
            CHECK(mc.weights[r] ==
                  doctest::Approx(0.5 * sdec.multiplicity(r) / part.side_c.size()));
        }
    }
    CHECK(mb.weights[2] == doctest::Approx(1.0 / 3));  // eigenvalue 0 on side B
    CHECK(mc.weights[2] == doctest::Approx(0.0));
    CHECK(mc.support.size() == 4);
}

TEST_CASE("bipartite block checks") {
    Graph delorme = generate("delorme");
    auto dec = decompose(delorme);
    Bipartition part = bipartition(delorme);
    auto report = bipartite_block_checks(dec, part);
    CHECK(report.spectrum_symmetric);
    CHECK(report.zero_multiplicity == 0);
    CHECK(report.side_difference == 0);
    CHECK(report.pairing_residual <= 1e-7);
    CHECK(report.trace_residual <= 1e-7);

    Graph k23 = generate("complete_bipartite", {2, 3});
    auto kdec = decompose(k23);
    Bipartition kpart = bipartition(k23);
    auto kreport = bipartite_block_checks(kdec, kpart);
    CHECK(kreport.zero_multiplicity == 3);
    CHECK(kreport.side_difference == 1);

    // Guard case: Petersen has no bipartition to hand over.
    CHECK_THROWS_AS(bipartition(fixtures::petersen()), Error);
}

TEST_CASE("bipartite pairing across corpus") {
    std::mt19937_64 rng(99);
    auto graphs = fixtures::corpus();
    for (int i = 0; i < 10; ++i)
        graphs.push_back(fixtures::random_connected_bipartite(rng));
    for (const auto& g : graphs) {
        if (!is_bipartite(g)) continue;
        auto dec = decompose(g);
        auto part = bipartition(g);
        auto report = bipartite_block_checks(dec, part);
        CHECK(report.pairing_residual <= 1e-7);
        CHECK(report.trace_residual <= 1e-7);
    }
}

TEST_CASE("ambiguous clustering guard") {
    // A graph whose spectrum is fine at 1e-8 must trip the guard band when
    // tol is pushed to the scale of a genuine gap.
    Graph c6 = generate("cycle", {6});
    CHECK_THROWS_AS(decompose(c6, 0.2), Error);
    CHECK_THROWS_AS(decompose(c6, -1.0), Error);
}
