#pragma once

#include "wmix/dense.hpp"
#include "wmix/shape.hpp"
#include "wmix/state.hpp"

#include <optional>
#include <vector>

namespace wmix {

/// Residuals at or below this count as equality.
inline constexpr double kEqualityThreshold = 1e-10;

struct MonogamyTerm {
	PartySet partner;
	double squared_negativity = 0.0;
};

/// One instance of  sum_k N^2(P_1, P_k) <= N^2(P_1 | rest).
struct MonogamyReport {
	PartySet focus;
	std::vector<MonogamyTerm> terms;
	double rhs = 0.0;
	double residual = 0.0; ///< rhs - sum of terms
	bool equality = false;
	/// Cuts with a structurally zero coherence block, filled in when `equality` holds.
	std::optional<std::vector<Bipartition>> inferred_separability;

	double term_sum() const;
};

/// Focus party against each other party. Requires N >= 3.
MonogamyReport monogamy_single(const WMixedState& state, Party focus);

/// Ordered partition P_1..P_s (s >= 3) of all parties. Term k is the negativity across
/// P_1 | P_k of the state reduced onto P_1 u P_k.
MonogamyReport monogamy_partition(const WMixedState& state, const std::vector<PartySet>& partition);

/// Same inequalities with every negativity computed by the dense oracle. No diagnosis is attached.
MonogamyReport monogamy_single_oracle(const WMixedState& state, Party focus,
                                      std::uint64_t budget = kDefaultDenseBudget);
MonogamyReport monogamy_partition_oracle(const WMixedState& state, const std::vector<PartySet>& partition,
                                         std::uint64_t budget = kDefaultDenseBudget);

/// Cuts (each single party against the rest, and the focus against the rest) whose
/// coherence block vanishes. Throws PreconditionError unless report.equality is set and
/// ContractViolation if equality holds with no vanishing block.
std::vector<Bipartition> equality_diagnosis(const MonogamyReport& report, const WMixedState& state);

/// C^2_{AB} + C^2_{AC} <= C^2_{A(BC)} for a pure three-qubit family state, A the focus.
struct CkwReport {
	Party focus = 1;
	double pair_first = 0.0;  ///< C^2 with the lower-numbered partner
	double pair_second = 0.0; ///< C^2 with the higher-numbered partner
	double rhs = 0.0;         ///< C^2 of the focus against the other two
	double residual = 0.0;
};

CkwReport ckw_concurrence_check(const PureGeneralizedW& state, Party focus = 1);

/// Ordered partitions of [1..n] into 3..max_blocks blocks, one entry per choice of P_1
/// (the order of the partner blocks is canonical: ascending by smallest member).
std::vector<std::vector<PartySet>> enumerate_partitions(int n, int max_blocks);

} // namespace wmix
