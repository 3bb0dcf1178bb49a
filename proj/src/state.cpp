#include "wmix/state.hpp"

#include "wmix/errors.hpp"

#include <cmath>
#include <string>

namespace wmix {

namespace {

void require_length(const SystemShape& shape, Eigen::Index length) {
	if (length != shape.label_count()) {
		throw ShapeError("expected " + std::to_string(shape.label_count()) + " amplitudes for N=" +
		                 std::to_string(shape.n()) + ", d=" + std::to_string(shape.d()) + ", got " +
		                 std::to_string(length));
	}
}

} // namespace

PureGeneralizedW::PureGeneralizedW(SystemShape shape, Eigen::VectorXcd amplitudes)
    : shape_(shape), amplitudes_(std::move(amplitudes)) {
	require_length(shape_, amplitudes_.size());
	const double norm2 = amplitudes_.squaredNorm();
	if (!(std::abs(norm2 - 1.0) <= tol::kNormalization)) {
		throw NormalizationError("amplitudes have squared norm " + std::to_string(norm2));
	}
}

WMixedState::WMixedState(SystemShape shape, double vacuum_weight, Eigen::MatrixXcd coeff)
    : shape_(shape), vacuum_(vacuum_weight), coeff_(std::move(coeff)) {
	const Eigen::Index k = shape_.label_count();
	if (coeff_.rows() != k || coeff_.cols() != k) {
		throw ShapeError("coefficient matrix must be " + std::to_string(k) + "x" + std::to_string(k));
	}
	if (!std::isfinite(vacuum_) || vacuum_ < 0.0) {
		throw InvalidStateError("vacuum weight must be a finite nonnegative number");
	}
	if (!coeff_.allFinite()) throw InvalidStateError("coefficient matrix has non-finite entries");
	for (Eigen::Index i = 0; i < k; ++i) {
		for (Eigen::Index j = i; j < k; ++j) {
			if (std::abs(coeff_(i, j) - std::conj(coeff_(j, i))) > tol::kHermitian) {
				throw InvalidStateError("coefficient matrix is not Hermitian");
			}
		}
	}
	for (Eigen::Index i = 0; i < k; ++i) {
		coeff_(i, i) = cplx(coeff_(i, i).real(), 0.0);
		for (Eigen::Index j = i + 1; j < k; ++j) coeff_(j, i) = std::conj(coeff_(i, j));
	}
	const double total = vacuum_ + coeff_.trace().real();
	if (!(std::abs(total - 1.0) <= tol::kNormalization)) {
		throw NormalizationError("vacuum weight plus trace is " + std::to_string(total) + ", expected 1");
	}
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(coeff_, Eigen::EigenvaluesOnly);
	if (es.info() != Eigen::Success) throw InvalidStateError("eigenvalue check did not converge");
	if (es.eigenvalues().minCoeff() < tol::kPsd) {
		throw InvalidStateError("coefficient matrix is not positive semidefinite (min eigenvalue " +
		                        std::to_string(es.eigenvalues().minCoeff()) + ")");
	}
}

WMixedState WMixedState::from_pure(const PureGeneralizedW& pure) {
	const auto& a = pure.amplitudes();
	return WMixedState(pure.shape(), 0.0, a * a.adjoint());
}

PureGeneralizedW make_w_state(int n) {
	if (n < 2) throw ShapeError("a W state needs at least 2 parties");
	SystemShape shape(n, 2);
	Eigen::VectorXcd a = Eigen::VectorXcd::Constant(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
	return PureGeneralizedW(shape, std::move(a));
}

PureGeneralizedW make_generalized_w(const Eigen::VectorXcd& amplitudes, SystemShape shape) {
	require_length(shape, amplitudes.size());
	const double norm = amplitudes.norm();
	if (norm == 0.0) throw DegenerateInputError("amplitude vector is zero");
	if (!std::isfinite(norm)) throw DegenerateInputError("amplitude vector has non-finite entries");
	if (std::abs(norm - 1.0) > tol::kRenormalize) {
		throw NormalizationError("amplitude vector has norm " + std::to_string(norm) + ", expected 1");
	}
	return PureGeneralizedW(shape, amplitudes / norm);
}

WMixedState mix(const std::vector<std::pair<double, PureGeneralizedW>>& ensemble) {
	if (ensemble.empty()) throw DegenerateInputError("empty ensemble");
	const SystemShape shape = ensemble.front().second.shape();
	double total = 0.0;
	for (const auto& [w, psi] : ensemble) {
		if (!(w >= 0.0)) throw NormalizationError("ensemble weights must be nonnegative");
		if (!(psi.shape() == shape)) throw ShapeError("ensemble members have different shapes");
		total += w;
	}
	if (std::abs(total - 1.0) > tol::kRenormalize) {
		throw NormalizationError("ensemble weights sum to " + std::to_string(total) + ", expected 1");
	}
	const Eigen::Index k = shape.label_count();
	Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(k, k);
	for (const auto& [w, psi] : ensemble) {
		const auto& a = psi.amplitudes();
		for (Eigen::Index i = 0; i < k; ++i) {
			for (Eigen::Index j = i; j < k; ++j) coeff(i, j) += (w / total) * a(i) * std::conj(a(j));
		}
	}
	for (Eigen::Index i = 0; i < k; ++i) {
		for (Eigen::Index j = 0; j < i; ++j) coeff(i, j) = std::conj(coeff(j, i));
	}
	return WMixedState(shape, 0.0, std::move(coeff));
}

PartySet renumber_within(PartySet parties, PartySet kept) {
	if ((parties & kept) != parties) throw IndexError("party set is not contained in the kept set");
	PartySet out;
	int rank = 0;
	for (Party p : kept.parties()) {
		++rank;
		if (parties.contains(p)) out.insert(rank);
	}
	return out;
}

WMixedState partial_trace(const WMixedState& state, PartySet traced) {
	const SystemShape& shape = state.shape();
	traced.check_within(shape.n());
	if (traced.empty()) throw IndexError("partial trace over an empty party set");
	if (traced.size() >= shape.n()) throw IndexError("cannot trace out every party");
	if (shape.n() - traced.size() < 2) {
		throw ShapeError("reduced state would have a single party; the family needs at least 2");
	}

	const std::vector<Party> kept = traced.complement(shape.n()).parties();
	const SystemShape reduced(static_cast<int>(kept.size()), shape.d());

	// old label index for each label of the reduced shape
	std::vector<Eigen::Index> source(static_cast<std::size_t>(reduced.label_count()));
	for (std::size_t r = 0; r < kept.size(); ++r) {
		const Party new_party = static_cast<Party>(r) + 1;
		const auto dst = reduced.label_indices_of(new_party);
		const auto src = shape.label_indices_of(kept[r]);
		for (std::size_t j = 0; j < dst.size(); ++j) source[static_cast<std::size_t>(dst[j])] = src[j];
	}

	const Eigen::Index k = reduced.label_count();
	Eigen::MatrixXcd coeff(k, k);
	for (Eigen::Index i = 0; i < k; ++i) {
		for (Eigen::Index j = 0; j < k; ++j) {
			coeff(i, j) = state.coeff()(source[static_cast<std::size_t>(i)], source[static_cast<std::size_t>(j)]);
		}
	}
	double vacuum = state.vacuum_weight();
	for (Party p : traced.parties()) {
		for (int idx : shape.label_indices_of(p)) vacuum += state.coeff()(idx, idx).real();
	}
	return WMixedState(reduced, vacuum, std::move(coeff));
}

WMixedState reduce_to(const WMixedState& state, PartySet kept) {
	kept.check_within(state.shape().n());
	const PartySet traced = kept.complement(state.shape().n());
	if (traced.empty()) return state;
	return partial_trace(state, traced);
}

} // namespace wmix
