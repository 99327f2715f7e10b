#ifndef DBR_CHARACTERIZE_HPP
#define DBR_CHARACTERIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbr/graph.hpp"
#include "dbr/orthopoly.hpp"
#include "dbr/spectral.hpp"

namespace dbr {

/// Neighbor counts of a vertex at distance i from the root: one step
/// closer, same sphere, one step farther. Constant per sphere exactly
/// when the root is locally distance-regular.
struct IntersectionRow {
    int toward;
    int within;
    int away;
};

struct IntersectionNumbers {
    std::vector<IntersectionRow> rows;  // indexed by distance from the root
};

struct LocalRegularity {
    bool regular;
    IntersectionNumbers numbers;  // populated when regular
    nlohmann::json witness;       // first conflicting pair otherwise
};

enum class Outcome { Pass, Fail, NotApplicable };
const char* to_string(Outcome outcome);

struct Verdict {
    Outcome outcome = Outcome::NotApplicable;
    std::string theorem;
    std::string reason;  // short code on Fail / NotApplicable
    double residual = 0.0;
    double tol = 0.0;
    nlohmann::json evidence = nlohmann::json::object();

    bool passed() const { return outcome == Outcome::Pass; }
};

struct ExcessReport {
    std::vector<int> excess;             // per-vertex |sphere(u, d)|
    std::optional<double> p_global;      // global predistance value p_d(lambda)
    std::optional<double> p_b;           // B-side predistance value
    std::optional<double> p_c;           // C-side predistance value
    std::optional<int> t;                // common excess when constant
    std::optional<long long> k_d_b;      // girth-formula prediction, B side
    std::optional<long long> k_d_c;      // girth-formula prediction, C side
};

enum class Classification { DRG, DBRG, Both, Neither };
const char* to_string(Classification c);

struct ClassifyResult {
    Classification classification = Classification::Neither;
    bool regular = false;
    bool bipartite = false;
    bool oracle_all_pass = false;
    std::vector<Verdict> verdicts;
    nlohmann::json oracle;  // intersection arrays or the first failing witness
};

/// Combinatorial check: neighbor-count triples constant on every sphere
/// around u.
LocalRegularity locally_distance_regular(const Graph& g, const DistanceData& dd,
                                         int u);

/// Pseudo-distance-regularity at a vertex via the local adjacency
/// polynomial equality Q_{e-1}(lambda) = excess bound. On a pass the
/// degree-e certificate polynomial is verified to be supported exactly
/// on the eccentricity sphere (SupportMismatch otherwise).
Verdict pseudo_dr_vertex(const SpectralDecomposition& dec, const PerronVector& per,
                         const DistanceData& dd, int u, double tol);

/// Set analogue over a set of equal-eccentricity vertices.
Verdict pseudo_dr_set(const SpectralDecomposition& dec, const PerronVector& per,
                      const DistanceData& dd, const std::vector<int>& set,
                      double tol);

/// Distance-regularity via the diametral polynomial: d+1 distinct
/// eigenvalues and a degree-d polynomial with p(A) = A_d.
Verdict check_drg_diametral(const Graph& g, const SpectralDecomposition& dec,
                            const DistanceData& dd, double tol);

/// Distance-biregularity via side-restricted diametral polynomials.
Verdict check_dbrg_diametral(const Graph& g, const SpectralDecomposition& dec,
                             const DistanceData& dd, const Bipartition& part,
                             double tol);

/// Spectral excess: per-vertex |sphere(u,d)| must equal the global
/// predistance value p_d(lambda).
std::pair<Verdict, ExcessReport> spectral_excess_drg(const Graph& g,
                                                     const SpectralDecomposition& dec,
                                                     const DistanceData& dd,
                                                     double tol);

/// Two-sided spectral excess for semiregular bipartite graphs; a side of
/// eccentricity d-1 passes through the zero-excess degenerate reading.
std::pair<Verdict, ExcessReport> spectral_excess_dbrg(const Graph& g,
                                                      const SpectralDecomposition& dec,
                                                      const DistanceData& dd,
                                                      const Bipartition& part,
                                                      double tol);

/// Halved-graph route: distance-regular halves, exact walk-count scalars
/// r and s, and the eigenvalue correspondence imply distance-biregular
/// (k < ell only; regular inputs are NotApplicable). A pass is
/// cross-checked against the diametral route.
Verdict halved_route_dbrg(const Graph& g, double tol);

/// Girth route: with d+1 distinct eigenvalues, semiregular valencies and
/// girth >= 2d-2, the non-backtracking walk counts predict the excesses;
/// matching them certifies distance-biregularity.
Verdict cospectral_girth_dbrg(const Graph& g, double tol);

/// Runs the combinatorial oracle and every applicable spectral route,
/// cross-asserting their agreement (RouteDisagreement on any conflict).
ClassifyResult classify(const Graph& g, double tol = kDefaultTol);

}  // namespace dbr

#endif  // DBR_CHARACTERIZE_HPP
