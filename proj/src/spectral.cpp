#include "dbr/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "dbr/error.hpp"

namespace dbr {

SpectralDecomposition::SpectralDecomposition(std::vector<double> eigs,
                                             std::vector<int> mult,
                                             Eigen::MatrixXd vectors, double tol)
    : eigs_(std::move(eigs)),
      mult_(std::move(mult)),
      vectors_(std::move(vectors)),
      tol_(tol) {
    offset_.push_back(0);
    for (int m : mult_) offset_.push_back(offset_.back() + m);
}

double SpectralDecomposition::spectral_radius() const {
    return std::max(std::abs(eigs_.front()), std::abs(eigs_.back()));
}

Eigen::Ref<const Eigen::MatrixXd> SpectralDecomposition::basis(int r) const {
    return vectors_.middleCols(offset_[r], mult_[r]);
}

Eigen::MatrixXd SpectralDecomposition::idempotent(int r) const {
    auto b = basis(r);
    return b * b.transpose();
}

double SpectralDecomposition::idem_diag(int r, int u) const {
    return basis(r).row(u).squaredNorm();
}

Eigen::MatrixXd SpectralDecomposition::apply(
    int r, const Eigen::Ref<const Eigen::MatrixXd>& x) const {
    auto b = basis(r);
    return b * (b.transpose() * x);
}

Eigen::MatrixXd SpectralDecomposition::apply_function(
    const std::vector<double>& values,
    const Eigen::Ref<const Eigen::MatrixXd>& x) const {
    Eigen::MatrixXd w = vectors_.transpose() * x;
    for (int r = 0; r < count(); ++r)
        w.middleRows(offset_[r], mult_[r]) *= values[r];
    return vectors_ * w;
}

SpectralDecomposition decompose(const Graph& g, double tol) {
    if (tol <= 0) throw Error(ErrorKind::BadArgument, "tol must be positive");
    int n = g.vertex_count();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency());
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::InvariantViolation, "eigensolver failed");

    // Eigen returns ascending order; flip to descending.
    Eigen::VectorXd values = solver.eigenvalues().reverse();
    Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();

    double scale = std::max(1.0, std::max(std::abs(values(0)), std::abs(values(n - 1))));
    double window = tol * scale;

    std::vector<double> eigs;
    std::vector<int> mult;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || values(start) - values(i) > window) {
            // Guard band: a gap inside (window, 10*window] means the
            // clustering depends too delicately on tol.
            if (i < n && values(i - 1) - values(i) <= 10 * window)
                throw Error(ErrorKind::AmbiguousClustering,
                            "eigenvalue gap within guard band; adjust tol",
                            {{"gap", values(i - 1) - values(i)},
                             {"tol_window", window}});
            double mean = 0;
            for (int j = start; j < i; ++j) mean += values(j);
            mean /= (i - start);
            eigs.push_back(mean);
            mult.push_back(i - start);
            start = i;
        }
    }

    SpectralDecomposition dec(std::move(eigs), std::move(mult), std::move(vectors), tol);

    // Invariant suite. Orthonormality of the eigenvector matrix covers
    // E_r^2 = E_r, E_r E_s = 0 and sum E_r = I in one residual.
    double ortho = (dec.basis(0).transpose() * dec.basis(0) -
                    Eigen::MatrixXd::Identity(dec.multiplicity(0), dec.multiplicity(0)))
                       .cwiseAbs()
                       .maxCoeff();
    {
        Eigen::MatrixXd all = Eigen::MatrixXd::Identity(n, n);
        Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
        for (int r = 0; r < dec.count(); ++r) gram += dec.idempotent(r);
        ortho = std::max(ortho, (gram - all).cwiseAbs().maxCoeff());
    }
    if (ortho > 10 * window)
        throw Error(ErrorKind::InvariantViolation, "idempotents do not resolve identity",
                    {{"residual", ortho}});

    std::vector<double> theta(dec.eigenvalues());
    Eigen::MatrixXd recon =
        dec.apply_function(theta, Eigen::MatrixXd::Identity(n, n));
    double recon_res = (recon - g.adjacency()).cwiseAbs().maxCoeff();
    if (recon_res > 10 * window * (1 + dec.spectral_radius()))
        throw Error(ErrorKind::InvariantViolation,
                    "spectral reconstruction of A failed", {{"residual", recon_res}});
    return dec;
}

std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, int u,
                                    double tol) {
    std::vector<int> support;
    for (int r = 0; r < dec.count(); ++r)
        if (dec.idem_diag(r, u) > tol) support.push_back(r);
    return support;
}

PerronVector perron(const Graph& g, const SpectralDecomposition& dec) {
    if (dec.multiplicity(0) != 1)
        throw Error(ErrorKind::InvariantViolation,
                    "largest eigenvalue of a connected graph must be simple");
    int n = g.vertex_count();
    PerronVector out;
    out.lambda = dec.eigenvalue(0);

    if (g.is_regular()) {
        out.v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
        return out;
    }
    if (is_bipartite(g)) {
        auto part = bipartition(g);
        try {
            auto [k, ell] = semiregular_profile(g, part);
            Eigen::VectorXd v(n);
            for (int u = 0; u < n; ++u)
                v(u) = part.in_b[u] ? std::sqrt(double(k)) : std::sqrt(double(ell));
            v /= v.norm();
            out.lambda = std::sqrt(double(k) * double(ell));
            out.v = v;
            return out;
        } catch (const Error&) {
            // fall through to the idempotent column
        }
    }
    Eigen::VectorXd v = dec.basis(0).col(0);
    if (v.sum() < 0) v = -v;
    if (v.minCoeff() <= 0)
        throw Error(ErrorKind::NonPositiveEntry,
                    "Perron vector has a non-positive entry",
                    {{"min_entry", v.minCoeff()}});
    out.v = v;
    return out;
}

namespace {

Measure make_measure(const SpectralDecomposition& dec, MeasureKind kind,
                     std::vector<double> weights) {
    Measure m;
    m.kind = kind;
    m.points = dec.eigenvalues();
    m.weights = std::move(weights);
    m.tol = dec.tol();
    for (int r = 0; r < dec.count(); ++r)
        if (m.weights[r] > m.tol) m.support.push_back(r);
    return m;
}

}  // namespace

Measure local_measure(const SpectralDecomposition& dec, int u) {
    std::vector<double> w(dec.count());
    for (int r = 0; r < dec.count(); ++r) w[r] = dec.idem_diag(r, u);
    return make_measure(dec, MeasureKind::Vertex, std::move(w));
}

Measure local_measure(const SpectralDecomposition& dec, const std::vector<int>& set) {
    if (set.empty()) throw Error(ErrorKind::BadArgument, "set measure needs vertices");
    std::vector<double> w(dec.count(), 0.0);
    for (int r = 0; r < dec.count(); ++r) {
        for (int u : set) w[r] += dec.idem_diag(r, u);
        w[r] /= static_cast<double>(set.size());
    }
    return make_measure(dec, MeasureKind::Set, std::move(w));
}

Measure global_measure(const SpectralDecomposition& dec) {
    std::vector<double> w(dec.count());
    for (int r = 0; r < dec.count(); ++r)
        w[r] = static_cast<double>(dec.multiplicity(r)) / dec.vertex_count();
    return make_measure(dec, MeasureKind::Global, std::move(w));
}

BipartiteBlockReport bipartite_block_checks(const SpectralDecomposition& dec,
                                            const Bipartition& part) {
    double window = dec.tol() * std::max(1.0, dec.spectral_radius());
    BipartiteBlockReport report{};
    report.side_difference = std::abs(static_cast<int>(part.side_b.size()) -
                                      static_cast<int>(part.side_c.size()));

    int m = dec.count();
    report.spectrum_symmetric = true;
    for (int r = 0; r < m; ++r) {
        int mirror = m - 1 - r;
        if (std::abs(dec.eigenvalue(r) + dec.eigenvalue(mirror)) > 10 * window ||
            dec.multiplicity(r) != dec.multiplicity(mirror)) {
            report.spectrum_symmetric = false;
            throw Error(ErrorKind::CheckFailed,
                        "spectrum is not symmetric about zero",
                        {{"eigenvalue", dec.eigenvalue(r)},
                         {"mirror", dec.eigenvalue(mirror)}});
        }
    }

    // Sign pattern sigma_u = +1 on B, -1 on C; E_{-theta} = S E_theta S
    // with S = diag(sigma) flips exactly the off-diagonal blocks.
    int n = dec.vertex_count();
    Eigen::VectorXd sign(n);
    for (int u = 0; u < n; ++u) sign(u) = part.in_b[u] ? 1.0 : -1.0;

    double pairing = 0, trace_res = 0;
    for (int r = 0; r < m; ++r) {
        int mirror = m - 1 - r;
        if (std::abs(dec.eigenvalue(r)) <= 10 * window) continue;  // theta == 0
        Eigen::MatrixXd e = dec.idempotent(r);
        Eigen::MatrixXd flipped = sign.asDiagonal() * e * sign.asDiagonal();
        pairing = std::max(pairing,
                           (dec.idempotent(mirror) - flipped).cwiseAbs().maxCoeff());
        double tr_b = 0, tr_c = 0;
        for (int u : part.side_b) tr_b += e(u, u);
        for (int u : part.side_c) tr_c += e(u, u);
        trace_res = std::max(trace_res, std::abs(tr_b - tr_c));
        trace_res = std::max(trace_res, std::abs(tr_b - 0.5 * dec.multiplicity(r)));
    }
    report.pairing_residual = pairing;
    report.trace_residual = trace_res;
    if (pairing > 10 * window)
        throw Error(ErrorKind::CheckFailed,
                    "paired idempotents do not match after off-diagonal sign flip",
                    {{"residual", pairing}});
    if (trace_res > 10 * window)
        throw Error(ErrorKind::CheckFailed, "half-trace identity violated",
                    {{"residual", trace_res}});

    report.zero_multiplicity = 0;
    for (int r = 0; r < m; ++r)
        if (std::abs(dec.eigenvalue(r)) <= 10 * window)
            report.zero_multiplicity = dec.multiplicity(r);
    if (report.zero_multiplicity < report.side_difference)
        throw Error(ErrorKind::CheckFailed,
                    "kernel multiplicity below side-size difference",
                    {{"zero_multiplicity", report.zero_multiplicity},
                     {"side_difference", report.side_difference}});
    return report;
}

}  // namespace dbr
