#include "wmix/dense.hpp"

#include "wmix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace wmix {

namespace {

double hermitian_defect(const Eigen::MatrixXcd& m) {
	if (m.rows() == 0) return 0.0;
	return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void check_budget(const SystemShape& shape, std::uint64_t budget) {
	const std::uint64_t dim = shape.hilbert_dim();
	if (dim > budget) {
		throw CapacityError("dense dimension " + std::to_string(dim) + " exceeds the budget of " +
		                    std::to_string(budget));
	}
}

/// digits[party-1][index] = local level of `party` in basis integer `index`.
std::vector<std::vector<int>> digit_table(const SystemShape& shape, std::uint64_t dim, PartySet parties) {
	std::vector<std::vector<int>> table(static_cast<std::size_t>(shape.n()));
	for (Party p : parties.parties()) {
		const std::uint64_t w = shape.digit_weight(p);
		auto& col = table[static_cast<std::size_t>(p - 1)];
		col.resize(dim);
		for (std::uint64_t i = 0; i < dim; ++i) col[i] = static_cast<int>((i / w) % static_cast<std::uint64_t>(shape.d()));
	}
	return table;
}

/// Offsets of every configuration of `parties` in the full basis integer,
/// enumerated with the lowest-numbered party as the most significant digit.
std::vector<std::uint64_t> subsystem_offsets(const SystemShape& shape, const std::vector<Party>& parties) {
	std::vector<std::uint64_t> offsets{0};
	for (Party p : parties) {
		const std::uint64_t w = shape.digit_weight(p);
		std::vector<std::uint64_t> next;
		next.reserve(offsets.size() * static_cast<std::size_t>(shape.d()));
		for (std::uint64_t base : offsets) {
			for (int j = 0; j < shape.d(); ++j) next.push_back(base + static_cast<std::uint64_t>(j) * w);
		}
		offsets = std::move(next);
	}
	return offsets;
}

} // namespace

DenseOperator::DenseOperator(SystemShape shape, Eigen::MatrixXcd matrix) : shape_(shape), matrix_(std::move(matrix)) {
	const std::uint64_t dim = shape_.hilbert_dim();
	if (static_cast<std::uint64_t>(matrix_.rows()) != dim || matrix_.rows() != matrix_.cols()) {
		throw ShapeError("dense operator must be " + std::to_string(dim) + "x" + std::to_string(dim));
	}
	if (hermitian_defect(matrix_) > 1e-12) throw InvalidStateError("dense operator is not Hermitian");
}

std::uint64_t basis_index(const SystemShape& shape, ExcitationLabel label) {
	shape.label_index(label);
	std::uint64_t w = 1;
	for (int i = 1; i < label.position; ++i) w *= static_cast<std::uint64_t>(shape.d());
	return static_cast<std::uint64_t>(label.level) * w;
}

Eigen::VectorXcd dense_vector(const PureGeneralizedW& state, std::uint64_t budget) {
	const SystemShape& shape = state.shape();
	check_budget(shape, budget);
	Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(shape.hilbert_dim()));
	for (int i = 0; i < shape.label_count(); ++i) {
		psi(static_cast<Eigen::Index>(basis_index(shape, shape.label_at(i)))) = state.amplitudes()(i);
	}
	return psi;
}

DenseOperator embed_dense(const WMixedState& state, std::uint64_t budget) {
	const SystemShape& shape = state.shape();
	check_budget(shape, budget);
	const auto dim = static_cast<Eigen::Index>(shape.hilbert_dim());
	Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
	m(0, 0) = state.vacuum_weight();
	std::vector<Eigen::Index> at(static_cast<std::size_t>(shape.label_count()));
	for (int i = 0; i < shape.label_count(); ++i) {
		at[static_cast<std::size_t>(i)] = static_cast<Eigen::Index>(basis_index(shape, shape.label_at(i)));
	}
	for (int i = 0; i < shape.label_count(); ++i) {
		for (int j = 0; j < shape.label_count(); ++j) {
			m(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]) = state.coeff()(i, j);
		}
	}
	return DenseOperator(shape, std::move(m));
}

DenseOperator embed_dense(const PureGeneralizedW& state, std::uint64_t budget) {
	const Eigen::VectorXcd psi = dense_vector(state, budget);
	return DenseOperator(state.shape(), psi * psi.adjoint());
}

DenseOperator partial_transpose(const DenseOperator& op, PartySet parties) {
	const SystemShape& shape = op.shape();
	parties.check_within(shape.n());
	if (parties.empty()) throw IndexError("partial transpose over an empty party set");

	const auto dim = static_cast<std::uint64_t>(op.dim());
	const auto table = digit_table(shape, dim, parties);
	std::vector<std::int64_t> weights;
	std::vector<const std::vector<int>*> cols;
	for (Party p : parties.parties()) {
		weights.push_back(static_cast<std::int64_t>(shape.digit_weight(p)));
		cols.push_back(&table[static_cast<std::size_t>(p - 1)]);
	}

	Eigen::MatrixXcd out(op.dim(), op.dim());
	const auto& in = op.matrix();
	for (std::uint64_t c = 0; c < dim; ++c) {
		for (std::uint64_t r = 0; r < dim; ++r) {
			auto rr = static_cast<std::int64_t>(r);
			auto cc = static_cast<std::int64_t>(c);
			for (std::size_t k = 0; k < weights.size(); ++k) {
				const std::int64_t shift = ((*cols[k])[c] - (*cols[k])[r]) * weights[k];
				rr += shift;
				cc -= shift;
			}
			out(rr, cc) = in(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
		}
	}
	return DenseOperator(shape, std::move(out));
}

Eigen::MatrixXcd partial_trace_dense_matrix(const DenseOperator& op, PartySet traced) {
	const SystemShape& shape = op.shape();
	traced.check_within(shape.n());
	if (traced.empty()) throw IndexError("partial trace over an empty party set");
	if (traced.size() >= shape.n()) throw IndexError("cannot trace out every party");

	const auto keep = subsystem_offsets(shape, traced.complement(shape.n()).parties());
	const auto env = subsystem_offsets(shape, traced.parties());
	const auto k = static_cast<Eigen::Index>(keep.size());
	Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
	const auto& in = op.matrix();
	for (Eigen::Index a = 0; a < k; ++a) {
		for (Eigen::Index b = 0; b < k; ++b) {
			cplx acc = 0.0;
			for (std::uint64_t t : env) {
				acc += in(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(a)] + t),
				          static_cast<Eigen::Index>(keep[static_cast<std::size_t>(b)] + t));
			}
			out(a, b) = acc;
		}
	}
	return out;
}

DenseOperator partial_trace_dense(const DenseOperator& op, PartySet traced) {
	const int remaining = op.shape().n() - traced.size();
	if (remaining < 2 && traced.size() < op.shape().n()) {
		throw ShapeError("a single remaining party has no SystemShape; use partial_trace_dense_matrix");
	}
	Eigen::MatrixXcd m = partial_trace_dense_matrix(op, traced);
	return DenseOperator(SystemShape(remaining, op.shape().d()), std::move(m));
}

Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& matrix) {
	if (matrix.rows() != matrix.cols()) throw ContractViolation("spectrum requested for a non-square matrix");
	if (hermitian_defect(matrix) > 1e-10) throw ContractViolation("spectrum requested for a non-Hermitian matrix");
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
	if (es.info() != Eigen::Success) throw ContractViolation("Hermitian eigensolver did not converge");
	return es.eigenvalues();
}

Eigen::VectorXd hermitian_spectrum(const DenseOperator& op) { return hermitian_spectrum(op.matrix()); }

double negativity_dense(const DenseOperator& op, const Bipartition& cut) {
	if (cut.n() != op.shape().n()) throw ShapeError("cut and operator have different party counts");
	const double trace = op.matrix().trace().real();
	if (std::abs(trace - 1.0) > 1e-10) throw InvalidStateError("negativity requires a unit-trace state");

	const Eigen::VectorXd spectrum = hermitian_spectrum(partial_transpose(op, cut.right()));
	double negative = 0.0;
	double trace_norm = 0.0;
	for (double lambda : spectrum) {
		if (lambda < 0.0) negative -= lambda;
		trace_norm += std::abs(lambda);
	}
	if (std::abs(0.5 * (trace_norm - 1.0) - negative) > 1e-10) {
		throw ContractViolation("trace-norm identity failed for negativity on cut " + cut.to_string());
	}
	return negative;
}

double min_pt_eigenvalue(const DenseOperator& op, PartySet parties) {
	return hermitian_spectrum(partial_transpose(op, parties)).minCoeff();
}

double concurrence_pure_squared(const PureGeneralizedW& state, const Bipartition& cut, std::uint64_t budget) {
	const SystemShape& shape = state.shape();
	if (cut.n() != shape.n()) throw ShapeError("cut and state have different party counts");
	const Eigen::VectorXcd psi = dense_vector(state, budget);

	const auto left = subsystem_offsets(shape, cut.left().parties());
	const auto right = subsystem_offsets(shape, cut.right().parties());
	Eigen::MatrixXcd amp(static_cast<Eigen::Index>(left.size()), static_cast<Eigen::Index>(right.size()));
	for (std::size_t a = 0; a < left.size(); ++a) {
		for (std::size_t b = 0; b < right.size(); ++b) {
			amp(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
			    psi(static_cast<Eigen::Index>(left[a] + right[b]));
		}
	}
	const Eigen::MatrixXcd rho_left = amp * amp.adjoint();
	const double purity = rho_left.squaredNorm();
	return std::max(0.0, 2.0 * (1.0 - purity));
}

double concurrence_pure(const PureGeneralizedW& state, const Bipartition& cut, std::uint64_t budget) {
	return std::sqrt(concurrence_pure_squared(state, cut, budget));
}

double concurrence_two_qubit(const Eigen::Matrix4cd& rho) {
	if (hermitian_defect(rho) > 1e-10) throw ContractViolation("two-qubit concurrence of a non-Hermitian matrix");

	// Spin-flip construction in Wootters' form: with rho = V V^dagger (V = eigenvectors
	// scaled by sqrt of eigenvalues) the square roots of the eigenvalues of
	// rho (sy x sy) rho^* (sy x sy) are the singular values of V^T (sy x sy) V.
	// Working with V avoids square roots of rounding-level eigenvalues.
	Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
	if (es.info() != Eigen::Success) throw ContractViolation("two-qubit eigensolver did not converge");
	constexpr double kRankCutoff = 1e-13;

	Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();
	flip(0, 3) = -1.0;
	flip(3, 0) = -1.0;
	flip(1, 2) = 1.0;
	flip(2, 1) = 1.0;

	std::vector<Eigen::Vector4cd> cols;
	for (int i = 0; i < 4; ++i) {
		const double mu = es.eigenvalues()(i);
		if (mu > kRankCutoff) cols.emplace_back(es.eigenvectors().col(i) * std::sqrt(mu));
	}
	if (cols.empty()) return 0.0;
	Eigen::MatrixXcd v(4, static_cast<Eigen::Index>(cols.size()));
	for (std::size_t i = 0; i < cols.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = cols[i];

	const Eigen::MatrixXcd tau = v.transpose() * flip.cast<cplx>() * v;
	Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
	const Eigen::VectorXd sigma = svd.singularValues(); // descending
	double c = sigma(0);
	for (Eigen::Index i = 1; i < sigma.size(); ++i) c -= sigma(i);
	return std::max(0.0, c);
}

double concurrence_two_qubit(const DenseOperator& op) {
	if (op.shape().n() != 2 || op.shape().d() != 2) throw ShapeError("two-qubit concurrence needs N=2, d=2");
	return concurrence_two_qubit(Eigen::Matrix4cd(op.matrix()));
}

} // namespace wmix
