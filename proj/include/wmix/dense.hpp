#pragma once

#include "wmix/shape.hpp"
#include "wmix/state.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace wmix {

/// Default refusal threshold for dense embeddings: d^N above this is a capacity error.
inline constexpr std::uint64_t kDefaultDenseBudget = 4096;

/// Operator on the full d^N Hilbert space, party A_1 as the most significant digit.
///
/// This is the brute-force side of every cross-check: it knows nothing about the
/// excitation structure and works by index manipulation and diagonalization only.
class DenseOperator {
public:
	/// Throws ShapeError on a dimension mismatch and InvalidStateError if the matrix is
	/// not Hermitian within 1e-12 (max entry of |M - M^dagger|).
	DenseOperator(SystemShape shape, Eigen::MatrixXcd matrix);

	const SystemShape& shape() const noexcept { return shape_; }
	const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
	Eigen::Index dim() const noexcept { return matrix_.rows(); }

private:
	SystemShape shape_;
	Eigen::MatrixXcd matrix_;
};

/// Computational-basis integer of an excitation: level * d^(position - 1).
std::uint64_t basis_index(const SystemShape& shape, ExcitationLabel label);

/// State vector of a pure family member in the full Hilbert space.
Eigen::VectorXcd dense_vector(const PureGeneralizedW& state, std::uint64_t budget = kDefaultDenseBudget);

DenseOperator embed_dense(const WMixedState& state, std::uint64_t budget = kDefaultDenseBudget);
DenseOperator embed_dense(const PureGeneralizedW& state, std::uint64_t budget = kDefaultDenseBudget);

/// Swaps the row/column digits of every listed party. Applying it twice is the identity.
DenseOperator partial_transpose(const DenseOperator& op, PartySet parties);

/// Contracts the digits of `traced`; the remaining parties are renumbered 1..N'.
/// Tracing down to a single party yields a 1-party operator (shape N=1 is not a
/// SystemShape, so the result is returned as a raw matrix).
DenseOperator partial_trace_dense(const DenseOperator& op, PartySet traced);
Eigen::MatrixXcd partial_trace_dense_matrix(const DenseOperator& op, PartySet traced);

/// Ascending eigenvalues of a Hermitian matrix. Throws ContractViolation if the input
/// deviates from Hermitian by more than 1e-10.
Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& matrix);
Eigen::VectorXd hermitian_spectrum(const DenseOperator& op);

/// Sum of |negative eigenvalues| of the partial transpose on cut.right().
double negativity_dense(const DenseOperator& op, const Bipartition& cut);

/// Smallest eigenvalue of the partial transpose on `parties`.
double min_pt_eigenvalue(const DenseOperator& op, PartySet parties);

/// sqrt(2 (1 - tr rho_A^2)) with rho_A the reduction of the pure state onto cut.left().
double concurrence_pure(const PureGeneralizedW& state, const Bipartition& cut,
                        std::uint64_t budget = kDefaultDenseBudget);
/// Squared form 2 (1 - tr rho_A^2), clamped at zero.
double concurrence_pure_squared(const PureGeneralizedW& state, const Bipartition& cut,
                                std::uint64_t budget = kDefaultDenseBudget);

/// Two-qubit concurrence from the spin-flip construction, max(0, l1 - l2 - l3 - l4).
double concurrence_two_qubit(const Eigen::Matrix4cd& rho);
double concurrence_two_qubit(const DenseOperator& op);

} // namespace wmix
