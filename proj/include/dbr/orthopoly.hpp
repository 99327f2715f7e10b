#ifndef DBR_ORTHOPOLY_HPP
#define DBR_ORTHOPOLY_HPP

#include <vector>

#include <Eigen/Dense>

#include "dbr/spectral.hpp"

namespace dbr {

/// Polynomial in the monomial basis, coeffs[i] multiplying x^i.
struct Poly {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(double factor) const;
};

struct RecurrenceRow {
    double a;  // coefficient of p_i in x p_i
    double b;  // coefficient of p_{i-1}
    double c;  // coefficient of p_{i+1} (0 at the top degree)
};

/// Orthogonal sequence over a discrete measure: polys[i] has degree i,
/// norms[i] = <p_i, p_i>, and x p_i = c p_{i+1} + a p_i + b p_{i-1}
/// holds on the measure's support. The value matrix is the sequence's
/// defining representation; the monomial coefficients are a derived view
/// that loses accuracy at high degree.
struct PolySequence {
    std::vector<Poly> polys;
    std::vector<double> norms;
    std::vector<RecurrenceRow> recurrence;
    std::vector<double> support_points;  // descending
    std::vector<double> support_weights;
    Eigen::MatrixXd values;  // values(i, j) = p_i(support_points[j])

    double at(int degree, int point) const { return values(degree, point); }
    /// Value at the largest support point (the Perron eigenvalue for
    /// vertex/set/global measures).
    double at_lambda(int degree) const { return values(degree, 0); }
};

/// Orthonormal polynomials q_0..q_s (s + 1 = |support|) by Gram-Schmidt
/// in value space over the support points, with re-orthogonalization.
PolySequence orthonormal_sequence(const Measure& m);

/// Rescales the orthonormal sequence so that ||p_i||^2 = p_i(lambda) > 0.
/// lambda must be the largest supported point.
PolySequence predistance_sequence(const Measure& m, double lambda);

/// p(A) * columns via spectral evaluation sum_r p(theta_r) E_r.
Eigen::MatrixXd apply_poly(const SpectralDecomposition& dec, const Poly& p,
                           const std::vector<int>& cols);
Eigen::MatrixXd apply_poly(const SpectralDecomposition& dec, const Poly& p);

struct AdjacencyPolynomial {
    Poly q;        // the optimizer, unit norm under the measure
    double value;  // Q_k(lambda) = sqrt(sum_{i<=k} q_i(lambda)^2)
};

/// k-adjacency polynomial: the degree-<=k polynomial of unit local norm
/// maximizing the value at lambda (reproducing-kernel closed form).
AdjacencyPolynomial adjacency_polynomial(const Measure& m, int k, double lambda);

/// Fiol-Garriga bound (1/v_u) sqrt(sum_{v in ball(u,k)} v_v^2).
double excess_bound(const PerronVector& perron, const DistanceData& dd, int u, int k);

}  // namespace dbr

#endif  // DBR_ORTHOPOLY_HPP
