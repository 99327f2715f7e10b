#ifndef DBR_SPECTRAL_HPP
#define DBR_SPECTRAL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dbr/graph.hpp"

namespace dbr {

constexpr double kDefaultTol = 1e-8;

/// Eigendecomposition of the adjacency matrix with eigenvalues clustered
/// at tolerance tol * max(1, spectral radius). Eigenvalues are distinct
/// and sorted descending; idempotents are assembled from the orthonormal
/// eigenvector columns of each cluster.
class SpectralDecomposition {
public:
    SpectralDecomposition(std::vector<double> eigs, std::vector<int> mult,
                          Eigen::MatrixXd vectors, double tol);

    int vertex_count() const { return static_cast<int>(vectors_.rows()); }
    int count() const { return static_cast<int>(eigs_.size()); }
    double eigenvalue(int r) const { return eigs_[r]; }
    int multiplicity(int r) const { return mult_[r]; }
    const std::vector<double>& eigenvalues() const { return eigs_; }
    const std::vector<int>& multiplicities() const { return mult_; }
    double tol() const { return tol_; }
    double spectral_radius() const;

    /// Cluster r's eigenvector block (n x mult(r), orthonormal columns).
    Eigen::Ref<const Eigen::MatrixXd> basis(int r) const;

    /// Materialized idempotent E_r = V_r V_r^T.
    Eigen::MatrixXd idempotent(int r) const;

    double idem_diag(int r, int u) const;

    /// E_r * x without materializing E_r.
    Eigen::MatrixXd apply(int r, const Eigen::Ref<const Eigen::MatrixXd>& x) const;

    /// sum_r f(theta_r) E_r * x  (spectral evaluation of a function of A).
    Eigen::MatrixXd apply_function(const std::vector<double>& values,
                                   const Eigen::Ref<const Eigen::MatrixXd>& x) const;

private:
    std::vector<double> eigs_;
    std::vector<int> mult_;
    Eigen::MatrixXd vectors_;   // columns grouped by cluster, descending eigenvalue
    std::vector<int> offset_;   // column range of cluster r is [offset_[r], offset_[r+1])
    double tol_;
};

struct PerronVector {
    double lambda;
    Eigen::VectorXd v;  // positive entries, unit 2-norm
};

enum class MeasureKind { Vertex, Set, Global };

/// Discrete measure on the distinct eigenvalues; weights are idempotent
/// diagonal averages (vertex/set) or normalized multiplicities (global).
struct Measure {
    MeasureKind kind;
    std::vector<double> points;    // all distinct eigenvalues, descending
    std::vector<double> weights;   // same length as points, >= 0
    std::vector<int> support;      // indices with weight > tol
    double tol;

    std::vector<double> support_points() const {
        std::vector<double> out;
        for (int r : support) out.push_back(points[r]);
        return out;
    }
    std::vector<double> support_weights() const {
        std::vector<double> out;
        for (int r : support) out.push_back(weights[r]);
        return out;
    }
};

struct BipartiteBlockReport {
    double pairing_residual;     // max |E_{-theta} - sign-flip(E_theta)|
    double trace_residual;       // max |tr B_theta - tr C_theta| etc. over theta != 0
    int zero_multiplicity;       // 0 when 0 is not an eigenvalue
    int side_difference;         // ||B| - |C||
    bool spectrum_symmetric;
};

SpectralDecomposition decompose(const Graph& g, double tol = kDefaultTol);

/// Eigenvalue support Phi_u = { r : (E_r)_{uu} > tol }.
std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, int u,
                                    double tol);

PerronVector perron(const Graph& g, const SpectralDecomposition& dec);

Measure local_measure(const SpectralDecomposition& dec, int u);
Measure local_measure(const SpectralDecomposition& dec, const std::vector<int>& set);
Measure global_measure(const SpectralDecomposition& dec);

/// Verifies the +-theta pairing, off-diagonal sign flip, trace identities
/// and kernel bound of a bipartite spectrum. Throws CheckFailed naming the
/// first violated identity.
BipartiteBlockReport bipartite_block_checks(const SpectralDecomposition& dec,
                                            const Bipartition& part);

}  // namespace dbr

#endif  // DBR_SPECTRAL_HPP
