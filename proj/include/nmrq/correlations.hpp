#pragma once

#include "nmrq/qlin.hpp"

namespace nmrq {

/// Local projective measurement bases for parties A and B, each parametrized
/// by Bloch-sphere angles (theta in [0,pi], phi in [0,2pi)).
struct MeasurementBasis {
    double theta_a = 0.0;
    double phi_a = 0.0;
    double theta_b = 0.0;
    double phi_b = 0.0;

    /// Rank-1 projector (I + n.sigma)/2 for outcome 0, (I - n.sigma)/2 for 1.
    Matrix projector(Party p, int outcome) const;
    Eigen::Vector3d bloch(Party p) const;
};

enum class CorrelationUnits { bits, epsilon2_over_ln2_bits };

struct CorrelationTriple {
    double total = 0.0;
    double classical = 0.0;
    double quantum = 0.0;  // total - classical, exactly
    CorrelationUnits units = CorrelationUnits::epsilon2_over_ln2_bits;
    MeasurementBasis basis_argmax;
};

// Deterministic two-stage maximizer: exhaustive coarse grid (first maximizer
// in lexicographic grid order wins ties) followed by Nelder-Mead refinement.
struct OptimizerConfig {
    int grid_points = 24;       // per angle
    double refine_tol = 1e-8;   // objective spread at convergence
    int max_refine_iter = 400;
};

enum class Marginal { none, A, B };

/// Exact von Neumann entropy in bits, -sum lambda log2 lambda.
double von_neumann_entropy(const HermitianMatrix& rho);

/// Second-order entropy in bits: 2(1 - eps^2/ln2 Tr delta^2) for the joint
/// state, 1 - eps^2/ln2 Tr delta_X^2 for a marginal.
double entropy_expansion(const DeviationState& s, Marginal marginal);

/// S(A) + S(B) - S(AB) in bits.
double mutual_information_exact(const HermitianMatrix& rho);

/// Second-order total correlation in eps^2/ln2-bit units:
/// 2 Tr delta^2 - Tr delta_A^2 - Tr delta_B^2.
double mutual_information_expansion(const DeviationState& s);

/// Multiply an eps^2/ln2-bit value into absolute bits.
double expansion_to_bits(double value, double epsilon);

/// Measured state: delta' = sum_ij (Pi_i x Pi_j) delta (Pi_i x Pi_j).
DeviationState measure_state(const DeviationState& s, const MeasurementBasis& m);

struct ClassicalCorrelationResult {
    double value = 0.0;
    MeasurementBasis argmax;
    bool refine_warning = false;  // refinement hit max_refine_iter before tol
};

/// Classical correlation in eps^2/ln2-bit units: maximum of the measured
/// mutual information over product projective bases on A and B.
ClassicalCorrelationResult classical_correlation(const DeviationState& s,
                                                 const OptimizerConfig& opt);

/// Total / classical / quantum triple, quantum = total - classical.
CorrelationTriple quantum_correlation_symmetric(const DeviationState& s,
                                                const OptimizerConfig& opt);

/// Exact one-sided quantum discord in bits, measurement on party B:
/// D = I - max_basis [S(rho_A) - sum_j q_j S(rho_A^j)].
double quantum_discord_onesided(const HermitianMatrix& rho,
                                const OptimizerConfig& opt);

namespace detail {
// Objective of the symmetric measurement maximization, evaluated through the
// diagonal of delta in the measured product basis. Exposed for tests, which
// check it against the measure_state route.
double measured_mutual_info(const Matrix& delta, const MeasurementBasis& m);
}  // namespace detail

}  // namespace nmrq
