#include "dbr/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dbr/error.hpp"

namespace dbr {

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::DRG: return "DRG";
        case Classification::DBRG: return "DBRG";
        case Classification::Both: return "BOTH";
        case Classification::Neither: return "NEITHER";
    }
    return "?";
}

namespace {

Verdict make_verdict(Outcome outcome, std::string theorem, double tol,
                     std::string reason = {}, double residual = 0.0,
                     nlohmann::json evidence = nlohmann::json::object()) {
    Verdict v;
    v.outcome = outcome;
    v.theorem = std::move(theorem);
    v.reason = std::move(reason);
    v.residual = residual;
    v.tol = tol;
    v.evidence = std::move(evidence);
    return v;
}

int side_max_eccentricity(const DistanceData& dd, const std::vector<int>& side) {
    int e = 0;
    for (int u : side) e = std::max(e, dd.eccentricity(u));
    return e;
}

/// Integer-target equality with a tolerance guard on the real side.
bool matches_integer(double value, long long target, double tol) {
    return std::llround(value) == target &&
           std::abs(value - static_cast<double>(target)) <=
               tol * std::max(1.0, std::abs(value));
}

Eigen::MatrixXd selector(int n, const std::vector<int>& cols) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) x(cols[j], j) = 1.0;
    return x;
}

/// Leading coefficient of the interpolant through (x_i, y_i) via divided
/// differences (no monomial expansion, stable for long sequences).
double interpolant_leading_coeff(const std::vector<double>& x,
                                 std::vector<double> y) {
    for (size_t level = 1; level < x.size(); ++level)
        for (size_t i = x.size() - 1; i >= level; --i)
            y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - level]);
    return y.back();
}

}  // namespace

LocalRegularity locally_distance_regular(const Graph& g, const DistanceData& dd,
                                         int u) {
    LocalRegularity out;
    out.regular = true;
    int e = dd.eccentricity(u);
    for (int i = 0; i <= e; ++i) {
        const auto& sphere = dd.sphere(u, i);
        IntersectionRow ref{};
        for (size_t idx = 0; idx < sphere.size(); ++idx) {
            int v = sphere[idx];
            IntersectionRow row{};
            for (int w : g.neighbors(v)) {
                int dw = dd.distance(u, w);
                if (dw == i - 1) ++row.toward;
                else if (dw == i) ++row.within;
                else ++row.away;
            }
            if (idx == 0) {
                ref = row;
            } else if (row.toward != ref.toward || row.within != ref.within ||
                       row.away != ref.away) {
                out.regular = false;
                out.witness = {{"distance", i},
                               {"vertices", {sphere[0], v}},
                               {"counts",
                                {{ref.toward, ref.within, ref.away},
                                 {row.toward, row.within, row.away}}}};
                return out;
            }
        }
        out.numbers.rows.push_back(ref);
    }
    return out;
}

Verdict pseudo_dr_vertex(const SpectralDecomposition& dec, const PerronVector& per,
                         const DistanceData& dd, int u, double tol) {
    const char* kTheorem = "pseudo_dr_vertex";
    int e = dd.eccentricity(u);
    if (e == 0) return make_verdict(Outcome::Pass, kTheorem, tol);
    auto phi = eigenvalue_support(dec, u, tol);
    if (static_cast<int>(phi.size()) != e + 1)
        return make_verdict(Outcome::Fail, kTheorem, tol, "NotSpectrallyExtremal", 0.0,
                            {{"support_size", phi.size()}, {"eccentricity", e}});

    Measure meas = local_measure(dec, u);
    PolySequence seq = orthonormal_sequence(meas);
    double sum_sq = 0.0;
    for (int i = 0; i < e; ++i) sum_sq += seq.at_lambda(i) * seq.at_lambda(i);
    double q_value = std::sqrt(sum_sq);
    double bound = excess_bound(per, dd, u, e - 1);
    double gap = bound - q_value;
    if (std::abs(gap) > tol * std::max(1.0, bound))
        return make_verdict(Outcome::Fail, kTheorem, tol, "ExcessBoundGap", std::abs(gap),
                            {{"q_value", q_value}, {"bound", bound}});

    // Certificate of Theorem pseudoLast: q_e - q_{e-1} hits exactly the
    // eccentricity sphere. q_e = (1/v_u^2) prod (x - theta_r)/(lambda -
    // theta_r) vanishes on the support except at lambda; q_{e-1} is the
    // reproducing kernel sum. Values off the vertex support are zero
    // (those idempotents annihilate e_u), keeping the evaluation in value
    // space at any degree.
    double vu = per.v(u);
    std::vector<double> cert_values(dec.count(), 0.0);
    for (size_t p = 0; p < meas.support.size(); ++p) {
        double kernel = 0.0;
        for (int i = 0; i < e; ++i)
            kernel += seq.at_lambda(i) * seq.at(i, static_cast<int>(p));
        double q_e = p == 0 ? 1.0 / (vu * vu) : 0.0;
        cert_values[meas.support[p]] = q_e - kernel;
    }
    Eigen::MatrixXd col = Eigen::MatrixXd::Zero(dec.vertex_count(), 1);
    col(u, 0) = 1.0;
    Eigen::VectorXd w = dec.apply_function(cert_values, col).col(0);
    double thresh = tol * std::max(1.0, w.cwiseAbs().maxCoeff());
    double worst = 0.0;
    for (int v = 0; v < dec.vertex_count(); ++v) {
        bool expect = dd.distance(u, v) == e;
        bool nonzero = std::abs(w(v)) > thresh;
        if (expect != nonzero)
            throw Error(ErrorKind::SupportMismatch,
                        "certificate polynomial support does not match sphere",
                        {{"vertex", v}, {"entry", w(v)}, {"distance", dd.distance(u, v)},
                         {"eccentricity", e}});
        if (!expect) worst = std::max(worst, std::abs(w(v)));
    }
    nlohmann::json evidence = {{"q_value", q_value}};
    if (e <= 32) {
        Poly q_e_poly{{1.0 / (vu * vu)}};
        for (size_t p = 1; p < meas.support.size(); ++p) {
            double theta = meas.points[meas.support[p]];
            q_e_poly = q_e_poly *
                       Poly{{-theta / (per.lambda - theta), 1.0 / (per.lambda - theta)}};
        }
        Poly kernel{{0.0}};
        for (int i = 0; i < e; ++i)
            kernel = kernel + seq.polys[i].scaled(seq.at_lambda(i));
        evidence["certificate"] = (q_e_poly - kernel).coeffs;
    }
    return make_verdict(Outcome::Pass, kTheorem, tol, {}, worst, evidence);
}

Verdict pseudo_dr_set(const SpectralDecomposition& dec, const PerronVector& per,
                      const DistanceData& dd, const std::vector<int>& set,
                      double tol) {
    const char* kTheorem = "pseudo_dr_set";
    if (set.empty()) throw Error(ErrorKind::BadArgument, "empty vertex set");
    int e = dd.eccentricity(set.front());
    for (int u : set)
        if (dd.eccentricity(u) != e)
            return make_verdict(Outcome::Fail, kTheorem, tol, "UnequalEccentricities",
                                0.0,
                                {{"vertices", {set.front(), u}},
                                 {"eccentricities", {e, dd.eccentricity(u)}}});
    if (e == 0) return make_verdict(Outcome::Pass, kTheorem, tol);

    Measure meas = local_measure(dec, set);
    if (static_cast<int>(meas.support.size()) != e + 1)
        return make_verdict(Outcome::Fail, kTheorem, tol, "SupportSizeMismatch", 0.0,
                            {{"support_size", meas.support.size()},
                             {"eccentricity", e}});

    PolySequence pre = predistance_sequence(meas, per.lambda);
    double sum_sq = 0.0;
    for (int i = 0; i < e; ++i) sum_sq += pre.norms[i];  // = q_i(lambda)^2
    double q_value = std::sqrt(sum_sq);
    double mean_sq = 0.0;
    for (int u : set) {
        double b = excess_bound(per, dd, u, e - 1);
        mean_sq += b * b;
    }
    double bound = std::sqrt(mean_sq / set.size());
    double gap = bound - q_value;
    if (std::abs(gap) > tol * std::max(1.0, bound))
        return make_verdict(Outcome::Fail, kTheorem, tol, "ExcessBoundGap", std::abs(gap),
                            {{"q_value", q_value}, {"bound", bound}});

    // Certificate: the top predistance polynomial, evaluated in value
    // space (zero off the set support, where the idempotents annihilate
    // every column of chi_S).
    std::vector<double> cert_values(dec.count(), 0.0);
    for (size_t p = 0; p < meas.support.size(); ++p)
        cert_values[meas.support[p]] = pre.at(e, static_cast<int>(p));
    Eigen::MatrixXd w = dec.apply_function(cert_values, selector(dec.vertex_count(), set));
    double thresh = tol * std::max(1.0, w.cwiseAbs().maxCoeff());
    double worst = 0.0;
    for (size_t j = 0; j < set.size(); ++j) {
        for (int v = 0; v < dec.vertex_count(); ++v) {
            bool expect = dd.distance(set[j], v) == e;
            bool nonzero = std::abs(w(v, j)) > thresh;
            if (expect != nonzero)
                throw Error(ErrorKind::SupportMismatch,
                            "set certificate support does not match spheres",
                            {{"column_vertex", set[j]}, {"vertex", v},
                             {"entry", w(v, j)}});
            if (!expect) worst = std::max(worst, std::abs(w(v, j)));
        }
    }
    nlohmann::json evidence = {{"q_value", q_value}};
    if (e <= 32) evidence["certificate"] = pre.polys[e].coeffs;
    return make_verdict(Outcome::Pass, kTheorem, tol, {}, worst, evidence);
}

Verdict check_drg_diametral(const Graph& g, const SpectralDecomposition& dec,
                            const DistanceData& dd, double tol) {
    const char* kTheorem = "drg_diametral";
    int d = dd.diameter();
    if (dec.count() != d + 1)
        return make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCountMismatch", 0.0,
                            {{"eigenvalues", dec.count()}, {"diameter", d}});

    Eigen::MatrixXd a_d = dd.distance_indicator(d);
    std::vector<double> values(dec.count());
    for (int r = 0; r < dec.count(); ++r) {
        auto basis = dec.basis(r);
        double numer = (basis.transpose() * a_d * basis).trace();
        values[r] = numer / dec.multiplicity(r);
    }
    Eigen::MatrixXd diff =
        dec.apply_function(values, Eigen::MatrixXd::Identity(g.vertex_count(),
                                                             g.vertex_count())) -
        a_d;
    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    double residual = diff.cwiseAbs().maxCoeff();
    if (residual > tol * scale) {
        int wu = 0, wv = 0;
        diff.cwiseAbs().maxCoeff(&wu, &wv);
        return make_verdict(Outcome::Fail, kTheorem, tol, "ResidualExceedsTol", residual,
                            {{"witness_entry", {wu, wv}},
                             {"interpolated_values", values}});
    }
    nlohmann::json evidence = {{"p_values", values}};
    if (d <= 64) {
        // Divided differences are only meaningful at moderate degree; the
        // residual check already pins p(A) = A_d, which needs degree >= d.
        double lead = interpolant_leading_coeff(dec.eigenvalues(), values);
        if (std::abs(lead) <= tol * scale)
            throw Error(ErrorKind::InvariantViolation,
                        "diametral interpolant degenerates below degree d",
                        {{"leading_coeff", lead}});
        evidence["leading_coeff"] = lead;
    }
    return make_verdict(Outcome::Pass, kTheorem, tol, {}, residual, evidence);
}

Verdict check_dbrg_diametral(const Graph& g, const SpectralDecomposition& dec,
                             const DistanceData& dd, const Bipartition& part,
                             double tol) {
    const char* kTheorem = "dbrg_diametral";
    int d = dd.diameter();
    if (dec.count() != d + 1)
        return make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCountMismatch", 0.0,
                            {{"eigenvalues", dec.count()}, {"diameter", d}});

    Eigen::MatrixXd a_d = dd.distance_indicator(d);
    double residual = 0.0;
    nlohmann::json evidence;
    for (const auto* side : {&part.side_b, &part.side_c}) {
        std::vector<double> values(dec.count(), 0.0);
        for (int r = 0; r < dec.count(); ++r) {
            auto basis = dec.basis(r);
            double denom = 0.0, numer = 0.0;
            Eigen::MatrixXd m = basis.transpose() * a_d;  // m_r x n
            for (int v : *side) {
                denom += basis.row(v).squaredNorm();
                numer += basis.row(v).dot(m.col(v));
            }
            values[r] = denom > tol ? numer / denom : 0.0;
        }
        Eigen::MatrixXd sel = selector(g.vertex_count(), *side);
        Eigen::MatrixXd diff = dec.apply_function(values, sel) - a_d * sel;
        double scale = 1.0;
        for (double v : values) scale = std::max(scale, std::abs(v));
        double side_res = diff.cwiseAbs().maxCoeff();
        const char* key = side == &part.side_b ? "p_b_values" : "p_c_values";
        evidence[key] = values;
        if (side_res > tol * scale) {
            int wu = 0, wv = 0;
            diff.cwiseAbs().maxCoeff(&wu, &wv);
            evidence["witness_entry"] = {wu, (*side)[wv]};
            return make_verdict(Outcome::Fail, kTheorem, tol, "ResidualExceedsTol",
                                side_res, evidence);
        }
        residual = std::max(residual, side_res);
    }
    return make_verdict(Outcome::Pass, kTheorem, tol, {}, residual, evidence);
}

std::pair<Verdict, ExcessReport> spectral_excess_drg(const Graph& g,
                                                     const SpectralDecomposition& dec,
                                                     const DistanceData& dd,
                                                     double tol) {
    const char* kTheorem = "spectral_excess_drg";
    int d = dd.diameter();
    ExcessReport report;
    for (int u = 0; u < g.vertex_count(); ++u)
        report.excess.push_back(static_cast<int>(dd.sphere(u, d).size()));
    if (std::all_of(report.excess.begin(), report.excess.end(),
                    [&](int t) { return t == report.excess[0]; }))
        report.t = report.excess[0];

    if (!g.is_regular())
        return {make_verdict(Outcome::Fail, kTheorem, tol, "NotRegular", 0.0,
                             {{"degrees", {g.min_degree(), g.max_degree()}}}),
                report};
    if (dec.count() != d + 1)
        return {make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCountMismatch",
                             0.0, {{"eigenvalues", dec.count()}, {"diameter", d}}),
                report};

    PolySequence pre = predistance_sequence(global_measure(dec), dec.eigenvalue(0));
    double value = pre.norms[d];
    report.p_global = value;

    long long target = std::llround(value);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!matches_integer(value, report.excess[u], tol))
            return {make_verdict(Outcome::Fail, kTheorem, tol, "ExcessMismatch",
                                 std::abs(value - report.excess[u]),
                                 {{"vertex", u}, {"excess", report.excess[u]},
                                  {"p_value", value}}),
                    report};
    }
    return {make_verdict(Outcome::Pass, kTheorem, tol, {},
                         std::abs(value - static_cast<double>(target)),
                         {{"p_value", value}, {"excess", target}}),
            report};
}

namespace {

struct SideCheck {
    bool pass = false;
    std::string reason;
    double value = 0.0;   // predistance value, 0 in the degenerate case
    double residual = 0.0;
    bool degenerate = false;
};

SideCheck check_side_excess(const SpectralDecomposition& dec, const DistanceData& dd,
                            const std::vector<int>& side, double lambda, int d,
                            double tol,
                            std::optional<long long> predicted = std::nullopt) {
    SideCheck out;
    int side_ecc = side_max_eccentricity(dd, side);
    Measure meas = local_measure(dec, side);

    if (side_ecc < d) {
        // Eccentricity d-1 side: excesses are all zero and the degree-d
        // polynomial must vanish on the side support, which exists exactly
        // when the support has at most d points.
        out.degenerate = true;
        out.value = 0.0;
        if (predicted && *predicted != 0) {
            out.reason = "PredictedExcessNonzero";
            return out;
        }
        if (static_cast<int>(meas.support.size()) > d) {
            out.reason = "SupportTooLargeForZeroSide";
            return out;
        }
        out.pass = true;
        return out;
    }

    if (static_cast<int>(meas.support.size()) != d + 1) {
        out.reason = "SupportSizeMismatch";
        return out;
    }
    PolySequence pre = predistance_sequence(meas, lambda);
    out.value = pre.norms[d];
    long long target = std::llround(out.value);
    if (predicted && target != *predicted) {
        out.reason = "PredictedExcessMismatch";
        out.residual = std::abs(out.value - static_cast<double>(*predicted));
        return out;
    }
    for (int u : side) {
        int excess = static_cast<int>(dd.sphere(u, d).size());
        if (!matches_integer(out.value, excess, tol)) {
            out.reason = "ExcessMismatch";
            out.residual = std::abs(out.value - excess);
            return out;
        }
    }
    out.residual = std::abs(out.value - static_cast<double>(target));
    out.pass = true;
    return out;
}

}  // namespace

std::pair<Verdict, ExcessReport> spectral_excess_dbrg(const Graph& g,
                                                      const SpectralDecomposition& dec,
                                                      const DistanceData& dd,
                                                      const Bipartition& part,
                                                      double tol) {
    const char* kTheorem = "spectral_excess_dbrg";
    int d = dd.diameter();
    ExcessReport report;
    for (int u = 0; u < g.vertex_count(); ++u)
        report.excess.push_back(static_cast<int>(dd.sphere(u, d).size()));

    Bipartition profiled = part;
    try {
        semiregular_profile(g, profiled);
    } catch (const Error& err) {
        return {make_verdict(Outcome::Fail, kTheorem, tol, "NotSemiregular", 0.0,
                             err.detail()),
                report};
    }
    if (dec.count() != d + 1)
        return {make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCountMismatch",
                             0.0, {{"eigenvalues", dec.count()}, {"diameter", d}}),
                report};

    auto b_check = check_side_excess(dec, dd, part.side_b, dec.eigenvalue(0), d, tol);
    auto c_check = check_side_excess(dec, dd, part.side_c, dec.eigenvalue(0), d, tol);
    report.p_b = b_check.value;
    report.p_c = c_check.value;
    int ecc_d_side_excess = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dd.eccentricity(u) == d) {
            ecc_d_side_excess = report.excess[u];
            break;
        }
    if (ecc_d_side_excess >= 0) report.t = ecc_d_side_excess;

    double residual = std::max(b_check.residual, c_check.residual);
    if (!b_check.pass || !c_check.pass) {
        const auto& bad = !b_check.pass ? b_check : c_check;
        return {make_verdict(Outcome::Fail, kTheorem, tol, bad.reason, bad.residual,
                             {{"side", !b_check.pass ? "B" : "C"},
                              {"p_b", b_check.value}, {"p_c", c_check.value}}),
                report};
    }
    return {make_verdict(Outcome::Pass, kTheorem, tol, {}, residual,
                         {{"p_b", b_check.value}, {"p_c", c_check.value},
                          {"degenerate_c", c_check.degenerate}}),
            report};
}

namespace {

bool same_value_sets(std::vector<double> a, std::vector<double> b, double window) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > window) return false;
    return true;
}

std::vector<double> dedup_sorted(std::vector<double> values, double window) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    for (double v : values)
        if (out.empty() || v - out.back() > window) out.push_back(v);
    return out;
}

}  // namespace

Verdict halved_route_dbrg(const Graph& g, double tol) {
    const char* kTheorem = "halved_route_dbrg";
    Bipartition part = bipartition(g);
    try {
        semiregular_profile(g, part);
    } catch (const Error& err) {
        return make_verdict(Outcome::NotApplicable, kTheorem, tol, "NotSemiregular",
                            0.0, err.detail());
    }
    int k = *part.k, ell = *part.ell;
    if (k == ell)
        return make_verdict(Outcome::NotApplicable, kTheorem, tol, "RegularInput", 0.0,
                            {{"k", k}, {"ell", ell}});

    auto halves = halved_graphs(g, part);
    nlohmann::json evidence = {{"k", k}, {"ell", ell}};
    if (halves.r) evidence["r"] = *halves.r;
    if (halves.s) evidence["s"] = *halves.s;
    if (!halves.r || !halves.s)
        return make_verdict(Outcome::Fail, kTheorem, tol, "NoWalkCountRelation", 0.0,
                            evidence);

    auto dec_b = decompose(halves.h_b, tol);
    auto dec_c = decompose(halves.h_c, tol);
    DistanceData dd_b(halves.h_b), dd_c(halves.h_c);
    Verdict drg_b = check_drg_diametral(halves.h_b, dec_b, dd_b, tol);
    Verdict drg_c = check_drg_diametral(halves.h_c, dec_c, dd_c, tol);
    evidence["half_b_drg"] = to_string(drg_b.outcome);
    evidence["half_c_drg"] = to_string(drg_c.outcome);
    if (!drg_b.passed() || !drg_c.passed())
        return make_verdict(Outcome::Fail, kTheorem, tol, "HalvesNotDistanceRegular",
                            0.0, evidence);

    auto dec_g = decompose(g, tol);
    double window = 10 * tol * std::max(1.0, dec_g.spectral_radius());
    std::vector<double> family_b, family_c;
    for (double theta : dec_b.eigenvalues()) {
        double radicand = static_cast<double>(*halves.r) * theta + k;
        if (radicand < -window) {
            return make_verdict(Outcome::Fail, kTheorem, tol,
                                "EigenvalueCorrespondence", -radicand, evidence);
        }
        double root = std::sqrt(std::max(0.0, radicand));
        family_b.push_back(root);
        if (root > window) family_b.push_back(-root);
    }
    for (double tau : dec_c.eigenvalues()) {
        double radicand = static_cast<double>(*halves.s) * tau + ell;
        if (radicand < -window)
            return make_verdict(Outcome::Fail, kTheorem, tol,
                                "EigenvalueCorrespondence", -radicand, evidence);
        double root = std::sqrt(std::max(0.0, radicand));
        family_c.push_back(root);
        if (root > window) family_c.push_back(-root);
    }
    if (part.side_b.size() != part.side_c.size()) family_c.push_back(0.0);

    auto set_g = dedup_sorted(dec_g.eigenvalues(), window);
    auto set_b = dedup_sorted(family_b, window);
    auto set_c = dedup_sorted(family_c, window);
    if (!same_value_sets(set_g, set_b, window) || !same_value_sets(set_g, set_c, window)) {
        evidence["family_b"] = set_b;
        evidence["family_c"] = set_c;
        evidence["spectrum"] = set_g;
        return make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCorrespondence",
                            0.0, evidence);
    }

    // The theorem concludes distance-biregular; cross-assert against the
    // diametral route.
    DistanceData dd_g(g);
    Verdict diametral = check_dbrg_diametral(g, dec_g, dd_g, part, tol);
    if (!diametral.passed())
        throw Error(ErrorKind::RouteDisagreement,
                    "halved route passed but diametral route disagrees",
                    {{"halved_evidence", evidence},
                     {"diametral_reason", diametral.reason}});
    return make_verdict(Outcome::Pass, kTheorem, tol, {}, 0.0, evidence);
}

Verdict cospectral_girth_dbrg(const Graph& g, double tol) {
    const char* kTheorem = "cospectral_girth_dbrg";
    Bipartition part = bipartition(g);
    try {
        semiregular_profile(g, part);
    } catch (const Error& err) {
        return make_verdict(Outcome::NotApplicable, kTheorem, tol, "NotSemiregular",
                            0.0, err.detail());
    }
    long long k = *part.k, ell = *part.ell;

    auto dec = decompose(g, tol);
    DistanceData dd(g);
    int d = dec.count() - 1;  // diameter of the reference distance-biregular graph
    auto cycle = girth(g);
    long long girth_val = cycle ? *cycle : std::numeric_limits<long long>::max();
    nlohmann::json evidence = {{"d", d}, {"girth", cycle ? nlohmann::json(*cycle)
                                                         : nlohmann::json("acyclic")}};
    if (girth_val < 2 * d - 2)
        return make_verdict(Outcome::NotApplicable, kTheorem, tol, "GirthTooSmall", 0.0,
                            evidence);
    if (dd.diameter() == d - 1) {
        if (girth_val == 2 * d - 2) {
            evidence["generalized_polygon"] = true;
            return make_verdict(Outcome::Pass, kTheorem, tol, {}, 0.0, evidence);
        }
        return make_verdict(Outcome::NotApplicable, kTheorem, tol, "DiameterDeficit",
                            0.0, evidence);
    }
    if (dd.diameter() != d)
        return make_verdict(Outcome::Fail, kTheorem, tol, "EigenvalueCountMismatch",
                            0.0, evidence);

    // Non-backtracking walk counts predict every sphere size below d, hence
    // the excesses on both sides.
    long long size_b = static_cast<long long>(part.side_b.size());
    long long size_c = static_cast<long long>(part.side_c.size());
    long long k_d_b, k_d_c;
    if (d % 2 == 1) {
        long long sum_b = 0, sum_c = 0, pow_bc = 1;
        for (int i = 0; i <= (d - 3) / 2; ++i) {
            sum_b += k * pow_bc;
            sum_c += ell * pow_bc;
            pow_bc *= (ell - 1) * (k - 1);
        }
        k_d_b = size_c - sum_b;
        k_d_c = size_b - sum_c;
    } else {
        long long sum_b = 0, sum_c = 0;
        long long pow_b = 1, pow_c = 1;  // (l-1)^i (k-1)^{i-1} and mirrored
        for (int i = 1; i <= d / 2 - 1; ++i) {
            pow_b = pow_b * (ell - 1);
            pow_c = pow_c * (k - 1);
            sum_b += k * pow_b;
            sum_c += ell * pow_c;
            pow_b *= (k - 1);
            pow_c *= (ell - 1);
        }
        k_d_b = size_b - sum_b - 1;
        k_d_c = size_c - sum_c - 1;
    }
    evidence["k_d_b"] = k_d_b;
    evidence["k_d_c"] = k_d_c;
    if (k_d_b < 0 || k_d_c < 0)
        return make_verdict(Outcome::Fail, kTheorem, tol, "NegativePredictedExcess",
                            0.0, evidence);

    auto b_check =
        check_side_excess(dec, dd, part.side_b, dec.eigenvalue(0), d, tol, k_d_b);
    auto c_check =
        check_side_excess(dec, dd, part.side_c, dec.eigenvalue(0), d, tol, k_d_c);
    evidence["p_b"] = b_check.value;
    evidence["p_c"] = c_check.value;
    if (!b_check.pass || !c_check.pass) {
        const auto& bad = !b_check.pass ? b_check : c_check;
        return make_verdict(Outcome::Fail, kTheorem, tol, bad.reason, bad.residual,
                            evidence);
    }
    return make_verdict(Outcome::Pass, kTheorem, tol, {},
                        std::max(b_check.residual, c_check.residual), evidence);
}

ClassifyResult classify(const Graph& g, double tol) {
    ClassifyResult result;
    DistanceData dd(g);
    auto dec = decompose(g, tol);
    auto per = perron(g, dec);

    result.regular = g.is_regular();
    result.bipartite = is_bipartite(g);
    result.oracle_all_pass = true;
    for (int u = 0; u < g.vertex_count() && result.oracle_all_pass; ++u) {
        auto local = locally_distance_regular(g, dd, u);
        if (!local.regular) {
            result.oracle_all_pass = false;
            result.oracle = {{"outcome", "FAIL"}, {"vertex", u},
                             {"witness", local.witness}};
        } else if (u == 0) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : local.numbers.rows)
                rows.push_back({row.toward, row.within, row.away});
            result.oracle = {{"outcome", "PASS"}, {"intersection_numbers", rows}};
        }
    }

    bool is_drg = result.regular && result.oracle_all_pass;
    bool is_dbrg = result.bipartite && result.oracle_all_pass;
    if (is_drg && is_dbrg) result.classification = Classification::Both;
    else if (is_drg) result.classification = Classification::DRG;
    else if (is_dbrg) result.classification = Classification::DBRG;
    else result.classification = Classification::Neither;

    nlohmann::json disagreements = nlohmann::json::array();
    auto expect = [&](const Verdict& v, bool truth) {
        result.verdicts.push_back(v);
        if (v.outcome == Outcome::NotApplicable) return;
        if (v.passed() != truth)
            disagreements.push_back({{"theorem", v.theorem},
                                     {"outcome", to_string(v.outcome)},
                                     {"reason", v.reason},
                                     {"expected_pass", truth},
                                     {"evidence", v.evidence}});
    };

    expect(check_drg_diametral(g, dec, dd, tol), is_drg);
    if (result.regular)
        expect(spectral_excess_drg(g, dec, dd, tol).first, is_drg);
    std::vector<int> all_vertices(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) all_vertices[u] = u;
    Verdict set_v = pseudo_dr_set(dec, per, dd, all_vertices, tol);
    set_v.theorem = "pseudo_dr_set_V";
    expect(set_v, is_drg);

    if (result.bipartite) {
        Bipartition part = bipartition(g);
        expect(check_dbrg_diametral(g, dec, dd, part, tol), is_dbrg);
        expect(spectral_excess_dbrg(g, dec, dd, part, tol).first, is_dbrg);

        Verdict side_b = pseudo_dr_set(dec, per, dd, part.side_b, tol);
        Verdict side_c = pseudo_dr_set(dec, per, dd, part.side_c, tol);
        side_b.theorem = "pseudo_dr_set_B";
        side_c.theorem = "pseudo_dr_set_C";
        result.verdicts.push_back(side_b);
        result.verdicts.push_back(side_c);
        if ((side_b.passed() && side_c.passed()) != is_dbrg)
            disagreements.push_back({{"theorem", "pseudo_dr_sides"},
                                     {"b", to_string(side_b.outcome)},
                                     {"c", to_string(side_c.outcome)},
                                     {"expected_pass", is_dbrg}});

        expect(halved_route_dbrg(g, tol), is_dbrg);
        expect(cospectral_girth_dbrg(g, tol), is_dbrg);

        // Odd-diameter consistency: semiregular with d+1 eigenvalues and d
        // odd forces regularity.
        try {
            Bipartition profiled = part;
            semiregular_profile(g, profiled);
            if (dd.diameter() % 2 == 1 && dec.count() == dd.diameter() + 1 &&
                !result.regular)
                disagreements.push_back(
                    {{"theorem", "bi_regular_odd_diameter"},
                     {"detail", "odd-diameter semiregular graph with d+1 eigenvalues "
                                "must be regular"}});
        } catch (const Error&) {
            // not semiregular; lemma does not apply
        }
    }

    if (!disagreements.empty())
        throw Error(ErrorKind::RouteDisagreement,
                    "characterization routes disagree with the oracle",
                    {{"classification", to_string(result.classification)},
                     {"disagreements", disagreements}});
    return result;
}

}  // namespace dbr
