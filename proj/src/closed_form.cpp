#include "wmix/closed_form.hpp"

#include "wmix/errors.hpp"

#include <cmath>

namespace wmix {

namespace {

std::vector<int> labels_of(const SystemShape& shape, PartySet parties) {
	std::vector<int> out;
	for (Party p : parties.parties()) {
		for (int idx : shape.label_indices_of(p)) out.push_back(idx);
	}
	return out;
}

void check_cut(const WMixedState& state, const Bipartition& cut) {
	if (cut.n() != state.shape().n()) {
		throw ShapeError("cut over " + std::to_string(cut.n()) + " parties applied to a state with " +
		                 std::to_string(state.shape().n()));
	}
}

void check_pair(const WMixedState& state, Party a, Party b) {
	state.shape().position_of(a);
	state.shape().position_of(b);
	if (a == b) throw IndexError("pairwise quantities need two distinct parties");
}

// Negative eigenvalue magnitude of [[p0, B], [B, 0]], written without cancellation.
double vacuum_block_negativity(double p0, double weight) {
	if (weight == 0.0) return 0.0;
	if (p0 == 0.0) return std::sqrt(weight);
	return 2.0 * weight / (std::sqrt(p0 * p0 + 4.0 * weight) + p0);
}

} // namespace

double cross_block_weight(const WMixedState& state, PartySet left, PartySet right) {
	const auto rows = labels_of(state.shape(), left);
	const auto cols = labels_of(state.shape(), right);
	double weight = 0.0;
	for (int i : rows) {
		for (int j : cols) weight += std::norm(state.coeff()(i, j));
	}
	return weight;
}

PtBlockSpectrum pt_block_eigenvalues(const WMixedState& state, Party party) {
	const SystemShape& shape = state.shape();
	shape.position_of(party);
	const PartySet focal{party};
	const double plus = std::sqrt(cross_block_weight(state, focal, focal.complement(shape.n())));
	// The indefinite block pairs the vacuum with every double excitation (focal level, other label).
	const int block = 1 + shape.levels() * shape.levels() * (shape.n() - 1);
	return PtBlockSpectrum{plus, -plus, plus > 0.0 ? block - 2 : block};
}

double negativity_cut(const WMixedState& state, const Bipartition& cut) {
	check_cut(state, cut);
	return vacuum_block_negativity(state.vacuum_weight(), cross_block_weight(state, cut.left(), cut.right()));
}

double pairwise_negativity(const WMixedState& state, Party party_a, Party party_b) {
	check_pair(state, party_a, party_b);
	const SystemShape& shape = state.shape();
	const auto la = shape.label_indices_of(party_a);
	const auto lb = shape.label_indices_of(party_b);

	double s = state.vacuum_weight();
	for (Party p = 1; p <= shape.n(); ++p) {
		if (p == party_a || p == party_b) continue;
		for (int idx : shape.label_indices_of(p)) s += state.coeff()(idx, idx).real();
	}
	double focal = 0.0;
	for (int i : la) {
		for (int j : lb) focal += std::norm(state.coeff()(i, j));
	}
	return vacuum_block_negativity(s, focal);
}

double pairwise_upper_bound(const WMixedState& state, Party party_a, Party party_b) {
	check_pair(state, party_a, party_b);
	return std::sqrt(cross_block_weight(state, PartySet{party_a}, PartySet{party_b}));
}

bool is_ppt_cut(const WMixedState& state, const Bipartition& cut) {
	check_cut(state, cut);
	return std::sqrt(cross_block_weight(state, cut.left(), cut.right())) <= tol::kStructuralZero;
}

bool is_separable_cut(const WMixedState& state, const Bipartition& cut) { return is_ppt_cut(state, cut); }

bool is_fully_separable(const WMixedState& state) {
	const SystemShape& shape = state.shape();
	const int levels = shape.levels();
	for (int i = 0; i < shape.label_count(); ++i) {
		for (int j = 0; j < shape.label_count(); ++j) {
			if (i / levels == j / levels) continue;
			if (std::abs(state.coeff()(i, j)) > tol::kStructuralZero) return false;
		}
	}
	return true;
}

SeparabilityVerdict classify(const WMixedState& state) {
	const int n = state.shape().n();
	if (n > kMaxEnumeratedParties) {
		throw CapacityError("exhaustive cut enumeration is limited to " + std::to_string(kMaxEnumeratedParties) +
		                    " parties; pass explicit cuts instead");
	}
	SeparabilityVerdict verdict;
	bool any_separable = false;
	for (const Bipartition& cut : all_bipartitions(n)) {
		const bool sep = is_separable_cut(state, cut);
		any_separable = any_separable || sep;
		verdict.per_cut.emplace(cut.left(), sep ? CutVerdict::separable : CutVerdict::entangled);
	}
	verdict.fully_separable = is_fully_separable(state);
	verdict.genuine = !any_separable;
	return verdict;
}

int genuine_rank_of_pure(const PureGeneralizedW& state) {
	const SystemShape& shape = state.shape();
	int rank = 0;
	for (Party p = 1; p <= shape.n(); ++p) {
		for (int idx : shape.label_indices_of(p)) {
			if (std::abs(state.amplitudes()(idx)) > tol::kStructuralZero) {
				++rank;
				break;
			}
		}
	}
	return rank;
}

} // namespace wmix
