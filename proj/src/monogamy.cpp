#include "wmix/monogamy.hpp"

#include "wmix/closed_form.hpp"
#include "wmix/errors.hpp"

#include <algorithm>
#include <functional>

namespace wmix {

namespace {

void check_partition(const SystemShape& shape, const std::vector<PartySet>& partition) {
	if (partition.size() < 3) throw IndexError("a monogamy partition needs at least 3 blocks");
	PartySet seen;
	for (const PartySet& block : partition) {
		block.check_within(shape.n());
		if (block.empty()) throw IndexError("partition blocks must be nonempty");
		if (!(seen & block).empty()) throw IndexError("partition blocks overlap");
		seen = seen | block;
	}
	if (seen != PartySet::all(shape.n())) throw IndexError("partition does not cover every party");
}

void finish(MonogamyReport& report) {
	report.residual = report.rhs - report.term_sum();
	report.equality = report.residual <= kEqualityThreshold;
}

double squared(double x) { return x * x; }

} // namespace

double MonogamyReport::term_sum() const {
	double sum = 0.0;
	for (const auto& t : terms) sum += t.squared_negativity;
	return sum;
}

MonogamyReport monogamy_single(const WMixedState& state, Party focus) {
	const int n = state.shape().n();
	state.shape().position_of(focus);
	if (n < 3) throw ShapeError("single-focus monogamy needs at least 3 parties");

	MonogamyReport report;
	report.focus = PartySet{focus};
	for (Party j = 1; j <= n; ++j) {
		if (j == focus) continue;
		report.terms.push_back({PartySet{j}, squared(pairwise_negativity(state, focus, j))});
	}
	report.rhs = squared(negativity_cut(state, Bipartition(report.focus, n)));
	finish(report);
	if (report.equality) report.inferred_separability = equality_diagnosis(report, state);
	return report;
}

MonogamyReport monogamy_partition(const WMixedState& state, const std::vector<PartySet>& partition) {
	const int n = state.shape().n();
	check_partition(state.shape(), partition);

	MonogamyReport report;
	report.focus = partition.front();
	for (std::size_t k = 1; k < partition.size(); ++k) {
		const PartySet kept = report.focus | partition[k];
		const WMixedState reduced = reduce_to(state, kept);
		const Bipartition cut(renumber_within(report.focus, kept), reduced.shape().n());
		report.terms.push_back({partition[k], squared(negativity_cut(reduced, cut))});
	}
	report.rhs = squared(negativity_cut(state, Bipartition(report.focus, n)));
	finish(report);
	if (report.equality) report.inferred_separability = equality_diagnosis(report, state);
	return report;
}

MonogamyReport monogamy_partition_oracle(const WMixedState& state, const std::vector<PartySet>& partition,
                                         std::uint64_t budget) {
	const int n = state.shape().n();
	check_partition(state.shape(), partition);
	const DenseOperator dense = embed_dense(state, budget);

	MonogamyReport report;
	report.focus = partition.front();
	for (std::size_t k = 1; k < partition.size(); ++k) {
		const PartySet kept = report.focus | partition[k];
		const DenseOperator reduced = partial_trace_dense(dense, kept.complement(n));
		const Bipartition cut(renumber_within(report.focus, kept), reduced.shape().n());
		report.terms.push_back({partition[k], squared(negativity_dense(reduced, cut))});
	}
	report.rhs = squared(negativity_dense(dense, Bipartition(report.focus, n)));
	finish(report);
	return report;
}

MonogamyReport monogamy_single_oracle(const WMixedState& state, Party focus, std::uint64_t budget) {
	const int n = state.shape().n();
	state.shape().position_of(focus);
	if (n < 3) throw ShapeError("single-focus monogamy needs at least 3 parties");
	std::vector<PartySet> partition{PartySet{focus}};
	for (Party j = 1; j <= n; ++j) {
		if (j != focus) partition.push_back(PartySet{j});
	}
	return monogamy_partition_oracle(state, partition, budget);
}

std::vector<Bipartition> equality_diagnosis(const MonogamyReport& report, const WMixedState& state) {
	if (!report.equality) {
		throw PreconditionError("equality diagnosis requested for a strict inequality (residual " +
		                        std::to_string(report.residual) + ")");
	}
	const int n = state.shape().n();
	std::vector<Bipartition> candidates;
	for (Party i = 1; i <= n; ++i) candidates.emplace_back(PartySet{i}, n);
	if (report.focus.size() > 1) candidates.emplace_back(report.focus, n);

	std::vector<Bipartition> found;
	for (const auto& cut : candidates) {
		if (is_separable_cut(state, cut)) found.push_back(cut);
	}
	if (found.empty()) {
		throw ContractViolation("monogamy equality for focus {" + report.focus.to_string() +
		                        "} without any vanishing coherence block");
	}
	return found;
}

CkwReport ckw_concurrence_check(const PureGeneralizedW& state, Party focus) {
	if (state.shape().n() != 3 || state.shape().d() != 2) {
		throw ShapeError("the CKW concurrence check applies to three qubits");
	}
	state.shape().position_of(focus);
	std::vector<Party> partners;
	for (Party j = 1; j <= 3; ++j) {
		if (j != focus) partners.push_back(j);
	}

	const DenseOperator dense = embed_dense(state);
	auto pair_term = [&](Party traced) {
		const DenseOperator pair = partial_trace_dense(dense, PartySet{traced});
		return squared(concurrence_two_qubit(pair));
	};

	CkwReport report;
	report.focus = focus;
	report.pair_first = pair_term(partners[1]);
	report.pair_second = pair_term(partners[0]);
	report.rhs = concurrence_pure_squared(state, Bipartition(PartySet{focus}, 3));
	report.residual = report.rhs - report.pair_first - report.pair_second;
	return report;
}

std::vector<std::vector<PartySet>> enumerate_partitions(int n, int max_blocks) {
	if (n < 3) throw ShapeError("partitions with at least 3 blocks need at least 3 parties");
	std::vector<std::vector<PartySet>> out;
	std::vector<int> block_of(static_cast<std::size_t>(n), 0);

	// restricted growth strings: block_of[i] <= 1 + max(block_of[0..i-1])
	std::function<void(int, int)> grow = [&](int i, int used) {
		if (i == n) {
			if (used < 3) return;
			std::vector<PartySet> blocks(static_cast<std::size_t>(used));
			for (int p = 0; p < n; ++p) blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(p)])].insert(p + 1);
			for (int f = 0; f < used; ++f) {
				std::vector<PartySet> ordered{blocks[static_cast<std::size_t>(f)]};
				for (int k = 0; k < used; ++k) {
					if (k != f) ordered.push_back(blocks[static_cast<std::size_t>(k)]);
				}
				out.push_back(std::move(ordered));
			}
			return;
		}
		for (int b = 0; b <= used && b < max_blocks; ++b) {
			block_of[static_cast<std::size_t>(i)] = b;
			grow(i + 1, std::max(used, b + 1));
		}
	};
	grow(0, 0);
	return out;
}

} // namespace wmix
