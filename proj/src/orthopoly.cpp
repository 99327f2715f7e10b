#include "dbr/orthopoly.hpp"

#include <algorithm>
#include <cmath>

#include "dbr/error.hpp"

namespace dbr {

double Poly::operator()(double x) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& other) const {
    Poly out;
    out.coeffs.resize(std::max(coeffs.size(), other.coeffs.size()), 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < other.coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    return out;
}

Poly Poly::operator-(const Poly& other) const {
    return *this + other.scaled(-1.0);
}

Poly Poly::operator*(const Poly& other) const {
    Poly out;
    out.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < other.coeffs.size(); ++j)
            out.coeffs[i + j] += coeffs[i] * other.coeffs[j];
    return out;
}

Poly Poly::scaled(double factor) const {
    Poly out = *this;
    for (double& c : out.coeffs) c *= factor;
    return out;
}

namespace {

Poly shift_up(const Poly& p) {  // multiply by x
    Poly out;
    out.coeffs.assign(p.coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) out.coeffs[i + 1] = p.coeffs[i];
    return out;
}

/// Three-term coefficients from the value matrix: projections of x p_i
/// onto the sequence under the weighted inner product.
void fill_recurrence(PolySequence& seq) {
    int count = static_cast<int>(seq.norms.size());
    int points = static_cast<int>(seq.support_points.size());
    seq.recurrence.resize(count);
    auto ip_with_x = [&](int i, int j) {
        double acc = 0;
        for (int r = 0; r < points; ++r)
            acc += seq.support_weights[r] * seq.support_points[r] *
                   seq.values(i, r) * seq.values(j, r);
        return acc;
    };
    for (int i = 0; i < count; ++i) {
        seq.recurrence[i].a = ip_with_x(i, i) / seq.norms[i];
        seq.recurrence[i].b = i > 0 ? ip_with_x(i, i - 1) / seq.norms[i - 1] : 0.0;
        seq.recurrence[i].c =
            i + 1 < count ? ip_with_x(i, i + 1) / seq.norms[i + 1] : 0.0;
    }
}

}  // namespace

PolySequence orthonormal_sequence(const Measure& m) {
    if (m.support.empty())
        throw Error(ErrorKind::DegenerateMeasure, "measure has empty support");
    PolySequence seq;
    seq.support_points = m.support_points();
    seq.support_weights = m.support_weights();
    int s = static_cast<int>(seq.support_points.size()) - 1;
    Eigen::VectorXd sqrtw(s + 1);
    for (int j = 0; j <= s; ++j) sqrtw(j) = std::sqrt(seq.support_weights[j]);

    // Gram-Schmidt in value space with re-orthogonalization. The weighted
    // value vectors phi_i are kept exactly orthonormal; the coefficient
    // vectors track the same elimination steps.
    std::vector<Eigen::VectorXd> phi;
    for (int i = 0; i <= s; ++i) {
        Poly cand;
        Eigen::VectorXd val(s + 1);
        if (i == 0) {
            cand = Poly{{1.0}};
            val = sqrtw;
        } else {
            cand = shift_up(seq.polys[i - 1]);
            for (int j = 0; j <= s; ++j)
                val(j) = seq.support_points[j] * phi[i - 1](j);
        }
        double initial = std::max(1.0, val.norm());
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < i; ++j) {
                double c = phi[j].dot(val);
                val -= c * phi[j];
                cand = cand - seq.polys[j].scaled(c);
            }
        }
        double norm = val.norm();
        if (norm < 1e-12 * initial)
            throw Error(ErrorKind::DegenerateMeasure,
                        "moment matrix numerically rank-deficient",
                        {{"degree", i}, {"norm", norm}});
        seq.polys.push_back(cand.scaled(1.0 / norm));
        phi.push_back(val / norm);
    }

    seq.norms.assign(s + 1, 1.0);
    seq.values.resize(s + 1, s + 1);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) seq.values(i, j) = phi[i](j) / sqrtw(j);
    fill_recurrence(seq);
    return seq;
}

PolySequence predistance_sequence(const Measure& m, double lambda) {
    PolySequence seq = orthonormal_sequence(m);
    if (std::abs(lambda - seq.support_points.front()) >
        10 * m.tol * std::max(1.0, std::abs(lambda)))
        throw Error(ErrorKind::BadArgument,
                    "lambda must be the largest supported eigenvalue");

    for (size_t i = 0; i < seq.polys.size(); ++i) {
        double at_lambda = seq.at_lambda(static_cast<int>(i));
        if (std::abs(at_lambda) < 1e-12)
            throw Error(ErrorKind::ZeroAtLambda,
                        "orthogonal polynomial vanishes at lambda", {{"degree", i}});
        seq.polys[i] = seq.polys[i].scaled(at_lambda);
        seq.norms[i] = at_lambda * at_lambda;
        seq.values.row(i) *= at_lambda;
    }
    fill_recurrence(seq);
    return seq;
}

Eigen::MatrixXd apply_poly(const SpectralDecomposition& dec, const Poly& p,
                           const std::vector<int>& cols) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dec.vertex_count(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) x(cols[j], j) = 1.0;
    std::vector<double> values;
    for (double theta : dec.eigenvalues()) values.push_back(p(theta));
    return dec.apply_function(values, x);
}

Eigen::MatrixXd apply_poly(const SpectralDecomposition& dec, const Poly& p) {
    std::vector<double> values;
    for (double theta : dec.eigenvalues()) values.push_back(p(theta));
    return dec.apply_function(
        values, Eigen::MatrixXd::Identity(dec.vertex_count(), dec.vertex_count()));
}

AdjacencyPolynomial adjacency_polynomial(const Measure& m, int k, double lambda) {
    int s = static_cast<int>(m.support.size()) - 1;
    if (k < 0 || k > s)
        throw Error(ErrorKind::BadArgument, "degree exceeds measure support",
                    {{"k", k}, {"support", s + 1}});
    PolySequence q = orthonormal_sequence(m);
    double sum_sq = 0;
    Poly kernel{{0.0}};
    for (int i = 0; i <= k; ++i) {
        double qi = q.at_lambda(i);
        sum_sq += qi * qi;
        kernel = kernel + q.polys[i].scaled(qi);
    }
    AdjacencyPolynomial out;
    out.value = std::sqrt(sum_sq);
    out.q = kernel.scaled(1.0 / out.value);
    return out;
}

double excess_bound(const PerronVector& perron, const DistanceData& dd, int u, int k) {
    if (k < 0 || k > dd.eccentricity(u))
        throw Error(ErrorKind::BadArgument, "k outside [0, ecc(u)]",
                    {{"k", k}, {"ecc", dd.eccentricity(u)}});
    double sum = 0;
    for (int v : dd.ball(u, k)) sum += perron.v(v) * perron.v(v);
    return std::sqrt(sum) / perron.v(u);
}

}  // namespace dbr
