#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace nmrq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Thrown when a state or operator fails a physicality check at runtime
// (PSD violation, broken trace, non-unitary product, ...).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Party { A, B };

// Pauli matrices and small identities in the computational basis.
// |0> is the +1 eigenstate of sigma_z; two-qubit index = 2*q_A + q_B.
const Matrix& pauli(int i);  // i = 1,2,3 -> x,y,z
const Matrix& identity2();
const Matrix& identity4();

/// Dense complex square matrix constrained to be hermitian.
/// The constructor validates the defect and stores (m + m^dagger)/2, so the
/// invariant holds exactly on the stored entries.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(Matrix m);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }
    double trace() const { return mat_.trace().real(); }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;

  private:
    Matrix mat_;
};

/// Dense complex square matrix constrained to satisfy U U^dagger = I
/// within 1e-12 elementwise.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Matrix m);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }
    UnitaryMatrix adjoint() const;

  private:
    Matrix mat_;
};

/// High-temperature state (epsilon, Delta rho): rho = I/2^n + epsilon * delta.
/// delta is traceless and the reconstructed density matrix is PSD; both are
/// validated (and the trace exactly zeroed) on construction.
class DeviationState {
  public:
    DeviationState(int n_qubits, double epsilon, HermitianMatrix delta);

    int n_qubits() const { return n_qubits_; }
    double epsilon() const { return epsilon_; }
    const HermitianMatrix& delta() const { return delta_; }
    HermitianMatrix full_density() const;

  private:
    int n_qubits_;
    double epsilon_;
    HermitianMatrix delta_;
};

// Coefficients of m = trace/4 * I + 1/4 sum_i (a_i s_i x I + b_i I x s_i)
//                   + 1/4 sum_ij c_ij s_i x s_j.
// For a density matrix these are expectation values; for a deviation matrix
// they are epsilon-scaled contributions.
struct PauliCoefficients {
    Eigen::Vector3d a;
    Eigen::Vector3d b;
    Eigen::Matrix3d c;
    double trace = 0.0;  // trace of the source matrix (identity coefficient)
};

struct PptResult {
    bool entangled = false;
    double negativity = 0.0;
};

// Kronecker product, subsystem A on the left (slow) index.
// Both dims must be powers of two.
HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Partial trace of a two-qubit operator onto the kept party.
HermitianMatrix partial_trace(const HermitianMatrix& m, Party keep);
Matrix partial_trace_raw(const Matrix& m, Party keep);

PauliCoefficients pauli_decompose(const HermitianMatrix& m);
HermitianMatrix pauli_reconstruct(const PauliCoefficients& p);

/// Bell-diagonal deviation matrix 1/4 sum_i c_i s_i x s_i.
HermitianMatrix bell_diagonal_delta(const Eigen::Vector3d& c);
/// Full Bell-diagonal density matrix I/4 + 1/4 sum_i c_i s_i x s_i.
HermitianMatrix bell_diagonal_state(const Eigen::Vector3d& c);

DeviationState apply_unitary(const DeviationState& s, const UnitaryMatrix& u);

/// Encode |psi><psi| in a deviation matrix: delta = |psi><psi| - I/4,
/// full density (1-eps) I/4 + eps |psi><psi|.
DeviationState pseudo_pure(const Vector& psi, double epsilon);

/// Smallest epsilon at which n-qubit pseudo-pure states can be entangled:
/// 1 / (1 + 2^(2n-1)).
double entanglement_epsilon_bound(int n);

/// Peres-Horodecki test: partial transpose over party B, entangled iff a
/// negative eigenvalue appears. negativity = sum of |negative eigenvalues|.
PptResult is_ppt_entangled(const HermitianMatrix& rho);
Matrix partial_transpose_b(const Matrix& m);

}  // namespace nmrq
