#pragma once

#include "wmix/cli/json_format.hpp"
#include "wmix/dense.hpp"
#include "wmix/monogamy.hpp"
#include "wmix/state.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wmix::cli {

/// Largest party count for which the report lists every bipartition.
inline constexpr int kMaxListedBipartitionParties = 10;

struct AnalysisOptions {
	/// Ordered partitions P_1|P_2|...; each yields a grouped monogamy report.
	std::vector<std::vector<PartySet>> partitions;
	/// Extra cuts reported explicitly (useful above the listing limit).
	std::vector<Bipartition> cuts;
	/// Attach dense-oracle negativities and their deltas to every reported cut.
	bool oracle = false;
	std::uint64_t budget = kDefaultDenseBudget;
};

/// "1,2|3|4"
std::vector<PartySet> parse_partition(std::string_view text);

Json report_to_json(const MonogamyReport& report);

/// Deterministic report for one state; see README for the layout.
Json analyze(const WMixedState& state, const AnalysisOptions& options);

/// CSV rendering of an analysis report: record,left,right,value,bound,rhs,residual,equality.
std::string analysis_csv(const Json& report);

} // namespace wmix::cli
