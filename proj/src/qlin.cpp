#include "nmrq/qlin.hpp"

#include <cmath>
#include <string>

namespace nmrq {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kUnitaryTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-12;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

const Matrix& pauli(int i) {
    static const Matrix sx = (Matrix(2, 2) << 0, 1, 1, 0).finished();
    static const Matrix sy =
        (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const Matrix sz = (Matrix(2, 2) << 1, 0, 0, -1).finished();
    switch (i) {
        case 1: return sx;
        case 2: return sy;
        case 3: return sz;
        default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
    }
}

const Matrix& identity2() {
    static const Matrix i2 = Matrix::Identity(2, 2);
    return i2;
}

const Matrix& identity4() {
    static const Matrix i4 = Matrix::Identity(4, 4);
    return i4;
}

HermitianMatrix::HermitianMatrix(Matrix m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("HermitianMatrix: matrix must be square");
    // Tolerance scales with the matrix magnitude; deviation matrices coming
    // out of non-unital channels at small epsilon can be large.
    const double scale = std::max(1.0, max_abs(m));
    const double defect = max_abs(m - m.adjoint());
    if (defect > kHermTol * scale)
        throw std::invalid_argument("HermitianMatrix: hermiticity defect " +
                                    std::to_string(defect));
    mat_ = 0.5 * (m + m.adjoint().eval());
}

Eigen::VectorXd HermitianMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double HermitianMatrix::min_eigenvalue() const { return eigenvalues()(0); }

UnitaryMatrix::UnitaryMatrix(Matrix m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("UnitaryMatrix: matrix must be square");
    const Matrix gram = m * m.adjoint();
    const double defect = max_abs(gram - Matrix::Identity(m.rows(), m.cols()));
    if (defect > kUnitaryTol)
        throw std::invalid_argument("UnitaryMatrix: unitarity defect " +
                                    std::to_string(defect));
    mat_ = std::move(m);
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(mat_.adjoint());
}

DeviationState::DeviationState(int n_qubits, double epsilon, HermitianMatrix delta)
    : n_qubits_(n_qubits), epsilon_(epsilon), delta_(std::move(delta)) {
    if (n_qubits < 1) throw std::invalid_argument("DeviationState: n_qubits >= 1");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("DeviationState: epsilon must be in (0, 1]");
    const int dim = 1 << n_qubits;
    if (delta_.dim() != dim)
        throw std::invalid_argument("DeviationState: delta dim must be 2^n");
    const double scale = std::max(1.0, max_abs(delta_.mat()));
    const double tr = delta_.trace();
    if (std::abs(tr) > kTraceTol * scale * dim)
        throw NumericalError("DeviationState: delta trace " + std::to_string(tr));
    // Store exactly traceless.
    Matrix fixed = delta_.mat();
    fixed.diagonal().array() -= tr / dim;
    delta_ = HermitianMatrix(std::move(fixed));
    const double min_ev = full_density().min_eigenvalue();
    if (min_ev < -kPsdTol)
        throw NumericalError("DeviationState: full density not PSD, min eigenvalue " +
                             std::to_string(min_ev));
}

HermitianMatrix DeviationState::full_density() const {
    const int dim = 1 << n_qubits_;
    return HermitianMatrix(Matrix::Identity(dim, dim) / dim +
                           epsilon_ * delta_.mat());
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    Matrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i)
        for (Eigen::Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

HermitianMatrix tensor(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (!is_power_of_two(a.dim()) || !is_power_of_two(b.dim()))
        throw std::invalid_argument("tensor: dims must be powers of two");
    return HermitianMatrix(kron(a.mat(), b.mat()));
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (!is_power_of_two(a.dim()) || !is_power_of_two(b.dim()))
        throw std::invalid_argument("tensor: dims must be powers of two");
    return UnitaryMatrix(kron(a.mat(), b.mat()));
}

Matrix partial_trace_raw(const Matrix& m, Party keep) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("partial_trace: dim must be 4");
    Matrix out(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Complex sum = 0.0;
            for (int k = 0; k < 2; ++k)
                sum += keep == Party::A ? m(2 * a + k, 2 * b + k)
                                        : m(2 * k + a, 2 * k + b);
            out(a, b) = sum;
        }
    return out;
}

HermitianMatrix partial_trace(const HermitianMatrix& m, Party keep) {
    return HermitianMatrix(partial_trace_raw(m.mat(), keep));
}

PauliCoefficients pauli_decompose(const HermitianMatrix& m) {
    if (m.dim() != 4) throw std::invalid_argument("pauli_decompose: dim must be 4");
    PauliCoefficients out;
    out.trace = m.trace();
    for (int i = 1; i <= 3; ++i) {
        out.a(i - 1) = (m.mat() * kron(pauli(i), identity2())).trace().real();
        out.b(i - 1) = (m.mat() * kron(identity2(), pauli(i))).trace().real();
        for (int j = 1; j <= 3; ++j)
            out.c(i - 1, j - 1) =
                (m.mat() * kron(pauli(i), pauli(j))).trace().real();
    }
    return out;
}

HermitianMatrix pauli_reconstruct(const PauliCoefficients& p) {
    Matrix m = p.trace / 4.0 * identity4();
    for (int i = 1; i <= 3; ++i) {
        m += 0.25 * p.a(i - 1) * kron(pauli(i), identity2());
        m += 0.25 * p.b(i - 1) * kron(identity2(), pauli(i));
        for (int j = 1; j <= 3; ++j)
            m += 0.25 * p.c(i - 1, j - 1) * kron(pauli(i), pauli(j));
    }
    return HermitianMatrix(std::move(m));
}

HermitianMatrix bell_diagonal_delta(const Eigen::Vector3d& c) {
    Matrix m = Matrix::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) m += 0.25 * c(i - 1) * kron(pauli(i), pauli(i));
    return HermitianMatrix(std::move(m));
}

HermitianMatrix bell_diagonal_state(const Eigen::Vector3d& c) {
    return HermitianMatrix(identity4() / 4.0 + bell_diagonal_delta(c).mat());
}

DeviationState apply_unitary(const DeviationState& s, const UnitaryMatrix& u) {
    if (u.dim() != s.delta().dim())
        throw std::invalid_argument("apply_unitary: dim mismatch");
    Matrix rotated = u.mat() * s.delta().mat() * u.mat().adjoint();
    return DeviationState(s.n_qubits(), s.epsilon(),
                          HermitianMatrix(std::move(rotated)));
}

DeviationState pseudo_pure(const Vector& psi, double epsilon) {
    if (psi.size() != 4)
        throw std::invalid_argument("pseudo_pure: psi must be a 4-vector");
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("pseudo_pure: psi must be normalized");
    Matrix delta = psi * psi.adjoint() - identity4() / 4.0;
    return DeviationState(2, epsilon, HermitianMatrix(std::move(delta)));
}

double entanglement_epsilon_bound(int n) {
    if (n < 1) throw std::invalid_argument("entanglement_epsilon_bound: n >= 1");
    return 1.0 / (1.0 + std::pow(2.0, 2 * n - 1));
}

Matrix partial_transpose_b(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("partial_transpose_b: dim must be 4");
    Matrix out(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 2; ++j)
                    out(2 * a + i, 2 * b + j) = m(2 * a + j, 2 * b + i);
    return out;
}

PptResult is_ppt_entangled(const HermitianMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("is_ppt_entangled: dim must be 4");
    if (rho.min_eigenvalue() < -1e-10)
        throw NumericalError("is_ppt_entangled: input is not PSD");
    if (std::abs(rho.trace() - 1.0) > 1e-8)
        throw NumericalError("is_ppt_entangled: input trace differs from 1");
    const HermitianMatrix pt(partial_transpose_b(rho.mat()));
    const Eigen::VectorXd evs = pt.eigenvalues();
    PptResult out;
    for (int k = 0; k < evs.size(); ++k)
        if (evs(k) < 0.0) out.negativity += -evs(k);
    out.entangled = evs(0) < -1e-10;
    return out;
}

}  // namespace nmrq
