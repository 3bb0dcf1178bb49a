#pragma once

#include "wmix/cli/json_format.hpp"
#include "wmix/dense.hpp"
#include "wmix/sampler.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace wmix::cli {

namespace verify_tol {
/// closed form vs oracle, absolute
inline constexpr double kNegativityDelta = 1e-9;
/// monogamy residuals may dip this far below zero
inline constexpr double kResidual = 1e-10;
/// oracle PPT predicate: min PT eigenvalue >= -kPpt
inline constexpr double kPpt = 1e-10;
/// SLOCC proportionality, relative
inline constexpr double kProportionality = 1e-12;
} // namespace verify_tol

struct VerifyOptions {
	SampleConfig config;
	std::uint64_t budget = kDefaultDenseBudget;
	/// Grouped monogamy over every partition with at most this many blocks (0 disables).
	int max_partition_blocks = 4;
	/// Partitions are enumerated only up to this party count.
	int max_partition_parties = 6;
	unsigned threads = 1;
	/// Added to every closed-form negativity before comparison. Harness self-test only.
	double fault_injection = 0.0;
};

struct Violation {
	std::size_t index = 0;
	std::uint64_t sample_seed = 0;
	std::string check;
	std::string detail;
	double value = 0.0;
};

struct VerifySummary {
	VerifyOptions options;
	std::size_t samples = 0;

	std::size_t cut_checks = 0;
	double max_negativity_delta = 0.0;
	std::size_t pair_checks = 0;
	double max_pairwise_delta = 0.0;

	std::size_t ppt_checks = 0;
	std::size_t ppt_disagreements = 0;
	/// checks where the oracle found the cut PPT
	std::size_t ppt_positive = 0;

	std::size_t monogamy_checks = 0;
	double min_monogamy_residual = std::numeric_limits<double>::infinity();
	double min_oracle_monogamy_residual = std::numeric_limits<double>::infinity();
	std::size_t partition_checks = 0;
	double min_partition_residual = std::numeric_limits<double>::infinity();

	std::size_t genuine_samples = 0;
	double min_genuine_residual = std::numeric_limits<double>::infinity();
	std::size_t strictness_violations = 0;
	std::size_t equality_reports = 0;
	std::size_t diagnosis_failures = 0;
	std::size_t structured_equalities = 0;

	std::size_t slocc_checks = 0;
	double max_slocc_deviation = 0.0;
	std::size_t ckw_checks = 0;
	double min_ckw_residual = std::numeric_limits<double>::infinity();

	std::vector<Violation> violations;

	bool ok() const noexcept { return violations.empty(); }
};

/// Runs the sampler and every cross-check on each sample. Results are merged in sample
/// order, so the summary does not depend on the thread count.
VerifySummary run_verify(const VerifyOptions& options);

Json summary_to_json(const VerifySummary& summary, std::size_t max_listed_violations = 100);

} // namespace wmix::cli
