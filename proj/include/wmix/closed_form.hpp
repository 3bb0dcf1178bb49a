#pragma once

#include "wmix/shape.hpp"
#include "wmix/state.hpp"

#include <map>
#include <vector>

namespace wmix {

/// Nonzero eigenvalues of the indefinite block of the partial transpose on one party.
struct PtBlockSpectrum {
	double plus = 0.0;
	double minus = 0.0;
	/// Multiplicity of the zero eigenvalue inside that block.
	int zeros = 0;
};

enum class CutVerdict { separable, entangled };

struct SeparabilityVerdict {
	std::map<PartySet, CutVerdict> per_cut; ///< keyed by the cut's left side (contains A_1)
	bool fully_separable = false;
	bool genuine = false;
};

/// Largest party count for which every bipartition is enumerated.
inline constexpr int kMaxEnumeratedParties = 16;

/// Squared Frobenius norm of the coefficient block between the labels of `left` and `right`.
double cross_block_weight(const WMixedState& state, PartySet left, PartySet right);

/// Eigenvalues +-sqrt(sum of |coeff|^2 over the focal party's row block, off its own
/// position), ignoring any vacuum weight. In the qubit case the block is N x N and its
/// other N - 2 eigenvalues vanish.
PtBlockSpectrum pt_block_eigenvalues(const WMixedState& state, Party party);

/// Negativity across `cut`: (sqrt(p0^2 + 4 B^2) - p0) / 2 where B is the Frobenius norm
/// of the coefficient block between the two sides. Reduces to B when p0 = 0.
double negativity_cut(const WMixedState& state, const Bipartition& cut);

/// Negativity of the two-party reduction onto {a, b}, evaluated directly from the
/// coefficients: (sqrt(s^2 + 4|rho_ab|^2) - s) / 2 with s the vacuum weight plus every
/// diagonal entry away from a and b.
double pairwise_negativity(const WMixedState& state, Party party_a, Party party_b);

/// |rho_ab| (Frobenius norm of the level block for qudits). Never below pairwise_negativity.
double pairwise_upper_bound(const WMixedState& state, Party party_a, Party party_b);

bool is_ppt_cut(const WMixedState& state, const Bipartition& cut);
/// Same predicate as is_ppt_cut; separability and PPT coincide for this family.
bool is_separable_cut(const WMixedState& state, const Bipartition& cut);

/// True iff no coherence couples different parties (coefficient matrix block-diagonal by
/// party, i.e. diagonal for qubits).
bool is_fully_separable(const WMixedState& state);

/// Verdict over all 2^(N-1) - 1 cuts. Throws CapacityError above kMaxEnumeratedParties.
SeparabilityVerdict classify(const WMixedState& state);

/// Number of parties carrying a nonzero amplitude (|a| > 1e-12).
int genuine_rank_of_pure(const PureGeneralizedW& state);

} // namespace wmix
