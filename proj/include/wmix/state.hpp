#pragma once

#include "wmix/shape.hpp"

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace wmix {

using cplx = std::complex<double>;

namespace tol {
/// Unit-norm / unit-trace tolerance for constructed states.
inline constexpr double kNormalization = 1e-12;
/// Inputs within this distance of unit norm are renormalized silently; beyond it they are rejected.
inline constexpr double kRenormalize = 1e-9;
/// Minimum admissible eigenvalue of a coefficient matrix.
inline constexpr double kPsd = -1e-10;
/// Hermiticity tolerance on externally supplied coefficient matrices.
inline constexpr double kHermitian = 1e-12;
/// Structural zero: entries (or block norms) at or below this are treated as exactly zero.
inline constexpr double kStructuralZero = 1e-12;
} // namespace tol

/// Pure state with a single excitation: sum over labels of a_label |0..j_i..0>.
class PureGeneralizedW {
public:
	/// Validates length and unit norm (see make_generalized_w for renormalization).
	PureGeneralizedW(SystemShape shape, Eigen::VectorXcd amplitudes);

	const SystemShape& shape() const noexcept { return shape_; }
	const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
	cplx amplitude(ExcitationLabel label) const { return amplitudes_(shape_.label_index(label)); }

private:
	SystemShape shape_;
	Eigen::VectorXcd amplitudes_;
};

/// p0 |0..0><0..0| + sum_{l,l'} coeff(l,l') |l><l'| over single-excitation labels.
///
/// Invariants (checked on construction): coeff is Hermitian (mirrored from its upper
/// triangle so the symmetry is exact), coeff is PSD down to -1e-10, p0 >= 0 and
/// p0 + tr(coeff) = 1 within 1e-12. States of the mixed family itself have p0 = 0;
/// p0 > 0 arises from partial traces.
class WMixedState {
public:
	WMixedState(SystemShape shape, double vacuum_weight, Eigen::MatrixXcd coeff);

	const SystemShape& shape() const noexcept { return shape_; }
	double vacuum_weight() const noexcept { return vacuum_; }
	const Eigen::MatrixXcd& coeff() const noexcept { return coeff_; }
	cplx coeff(ExcitationLabel row, ExcitationLabel col) const {
		return coeff_(shape_.label_index(row), shape_.label_index(col));
	}

	static WMixedState from_pure(const PureGeneralizedW& pure);

private:
	SystemShape shape_;
	double vacuum_;
	Eigen::MatrixXcd coeff_;
};

/// Uniform W state (|0..01> + ... + |10..0>)/sqrt(n).
PureGeneralizedW make_w_state(int n);

/// Validates length N(d-1) and norm; renormalizes silently when |norm - 1| <= 1e-9.
PureGeneralizedW make_generalized_w(const Eigen::VectorXcd& amplitudes, SystemShape shape);

/// sum_k w_k |psi_k><psi_k|. Weights must sum to 1 within 1e-9 (renormalized below that).
WMixedState mix(const std::vector<std::pair<double, PureGeneralizedW>>& ensemble);

/// Traces out `traced`. Remaining parties keep their relative order and are renumbered 1..N'.
/// Labels at traced parties move their diagonal mass into the vacuum weight; cross terms vanish.
WMixedState partial_trace(const WMixedState& state, PartySet traced);

/// Convenience: reduce onto `kept` (the complement is traced out).
WMixedState reduce_to(const WMixedState& state, PartySet kept);

/// Image of the party set `parties` (subset of `kept`) after reducing onto `kept`.
PartySet renumber_within(PartySet parties, PartySet kept);

} // namespace wmix
