#include "wmix/cli/verify.hpp"

#include "wmix/cli/analysis.hpp"
#include "wmix/closed_form.hpp"
#include "wmix/errors.hpp"
#include "wmix/monogamy.hpp"
#include "wmix/slocc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

namespace wmix::cli {

namespace {

class SampleCheck {
public:
	SampleCheck(const VerifyOptions& options, const std::vector<std::vector<PartySet>>& partitions, std::size_t index,
	            std::uint64_t seed, VerifySummary& acc)
	    : options_(options), partitions_(partitions), index_(index), seed_(seed), acc_(acc) {}

	void mixed(const WMixedState& s, std::optional<Party> separated = std::nullopt) {
		const int n = s.shape().n();
		const DenseOperator dense = embed_dense(s, options_.budget);
		const double fault = options_.fault_injection;

		const auto cuts = n <= kMaxListedBipartitionParties ? all_bipartitions(n) : single_cuts(n);
		for (const auto& cut : cuts) {
			const double closed = negativity_cut(s, cut) + fault;
			const double delta = std::abs(closed - negativity_dense(dense, cut));
			++acc_.cut_checks;
			acc_.max_negativity_delta = std::max(acc_.max_negativity_delta, delta);
			if (!(delta <= verify_tol::kNegativityDelta)) flag("negativity_delta", cut.to_string(), delta);
		}

		for (Party p = 1; p <= n; ++p) {
			const Bipartition cut(PartySet{p}, n);
			const bool oracle_ppt = min_pt_eigenvalue(dense, cut.right()) >= -verify_tol::kPpt;
			++acc_.ppt_checks;
			if (oracle_ppt) ++acc_.ppt_positive;
			if (is_ppt_cut(s, cut) != oracle_ppt) {
				++acc_.ppt_disagreements;
				flag("ppt_disagreement", cut.to_string(), oracle_ppt ? 1.0 : 0.0);
			}
		}

		if (n < 3) return;
		const bool genuine = classify(s).genuine;
		if (genuine) ++acc_.genuine_samples;
		for (Party f = 1; f <= n; ++f) {
			std::optional<MonogamyReport> report;
			try {
				report = monogamy_single(s, f);
			} catch (const ContractViolation&) {
				++acc_.diagnosis_failures;
				flag("equality_diagnosis", "focus " + std::to_string(f), 0.0);
				continue;
			}
			++acc_.monogamy_checks;
			acc_.min_monogamy_residual = std::min(acc_.min_monogamy_residual, report->residual);
			if (report->residual < -verify_tol::kResidual) flag("monogamy_residual", "focus " + std::to_string(f), report->residual);
			if (report->equality) ++acc_.equality_reports;
			if (genuine) {
				acc_.min_genuine_residual = std::min(acc_.min_genuine_residual, report->residual);
				if (!(report->residual > verify_tol::kResidual)) {
					++acc_.strictness_violations;
					flag("strictness", "focus " + std::to_string(f), report->residual);
				}
			}
			if (separated && *separated == f) {
				const Bipartition expected(PartySet{f}, n);
				const bool found = report->inferred_separability &&
				                   std::find(report->inferred_separability->begin(), report->inferred_separability->end(),
				                             expected) != report->inferred_separability->end();
				if (report->equality && found) {
					++acc_.structured_equalities;
				} else {
					flag("structured_equality", "focus " + std::to_string(f), report->residual);
				}
			}

			const MonogamyReport oracle = monogamy_single_oracle(s, f, options_.budget);
			acc_.min_oracle_monogamy_residual = std::min(acc_.min_oracle_monogamy_residual, oracle.residual);
			if (oracle.residual < -verify_tol::kResidual) {
				flag("oracle_monogamy_residual", "focus " + std::to_string(f), oracle.residual);
			}
			for (const auto& term : oracle.terms) {
				const Party partner = term.partner.parties().front();
				const double closed = pairwise_negativity(s, f, partner) + fault;
				const double delta = std::abs(closed - std::sqrt(term.squared_negativity));
				++acc_.pair_checks;
				acc_.max_pairwise_delta = std::max(acc_.max_pairwise_delta, delta);
				if (!(delta <= verify_tol::kNegativityDelta)) {
					flag("pairwise_delta", std::to_string(f) + "|" + std::to_string(partner), delta);
				}
			}
		}

		for (const auto& partition : partitions_) {
			try {
				const MonogamyReport r = monogamy_partition(s, partition);
				++acc_.partition_checks;
				acc_.min_partition_residual = std::min(acc_.min_partition_residual, r.residual);
				if (r.equality) ++acc_.equality_reports;
				if (r.residual < -verify_tol::kResidual) flag("partition_residual", describe(partition), r.residual);
			} catch (const ContractViolation&) {
				++acc_.diagnosis_failures;
				flag("equality_diagnosis", describe(partition), 0.0);
			}
		}
	}

	void pure(const PureGeneralizedW& psi) {
		mixed(WMixedState::from_pure(psi));
		const int n = psi.shape().n();
		if (genuine_rank_of_pure(psi) == n) {
			++acc_.slocc_checks;
			try {
				const FilterResult r = apply_and_verify(build_filters(psi), psi, options_.budget);
				acc_.max_slocc_deviation = std::max(acc_.max_slocc_deviation, r.relative_deviation);
			} catch (const ContractViolation&) {
				flag("slocc_proportionality", "", 1.0);
			}
		}
		if (n == 3 && psi.shape().d() == 2) {
			for (Party f = 1; f <= 3; ++f) {
				const CkwReport r = ckw_concurrence_check(psi, f);
				++acc_.ckw_checks;
				acc_.min_ckw_residual = std::min(acc_.min_ckw_residual, r.residual);
				if (r.residual < -verify_tol::kResidual) flag("ckw_residual", "focus " + std::to_string(f), r.residual);
			}
		}
	}

private:
	static std::vector<Bipartition> single_cuts(int n) {
		std::vector<Bipartition> out;
		for (Party p = 1; p <= n; ++p) out.emplace_back(PartySet{p}, n);
		return out;
	}

	static std::string describe(const std::vector<PartySet>& partition) {
		std::string out;
		for (const auto& block : partition) {
			if (!out.empty()) out += '|';
			out += block.to_string();
		}
		return out;
	}

	void flag(std::string check, std::string detail, double value) {
		acc_.violations.push_back({index_, seed_, std::move(check), std::move(detail), value});
	}

	const VerifyOptions& options_;
	const std::vector<std::vector<PartySet>>& partitions_;
	std::size_t index_;
	std::uint64_t seed_;
	VerifySummary& acc_;
};

void merge(VerifySummary& into, const VerifySummary& part) {
	into.samples += part.samples;
	into.cut_checks += part.cut_checks;
	into.max_negativity_delta = std::max(into.max_negativity_delta, part.max_negativity_delta);
	into.pair_checks += part.pair_checks;
	into.max_pairwise_delta = std::max(into.max_pairwise_delta, part.max_pairwise_delta);
	into.ppt_checks += part.ppt_checks;
	into.ppt_disagreements += part.ppt_disagreements;
	into.ppt_positive += part.ppt_positive;
	into.monogamy_checks += part.monogamy_checks;
	into.min_monogamy_residual = std::min(into.min_monogamy_residual, part.min_monogamy_residual);
	into.min_oracle_monogamy_residual = std::min(into.min_oracle_monogamy_residual, part.min_oracle_monogamy_residual);
	into.partition_checks += part.partition_checks;
	into.min_partition_residual = std::min(into.min_partition_residual, part.min_partition_residual);
	into.genuine_samples += part.genuine_samples;
	into.min_genuine_residual = std::min(into.min_genuine_residual, part.min_genuine_residual);
	into.strictness_violations += part.strictness_violations;
	into.equality_reports += part.equality_reports;
	into.diagnosis_failures += part.diagnosis_failures;
	into.structured_equalities += part.structured_equalities;
	into.slocc_checks += part.slocc_checks;
	into.max_slocc_deviation = std::max(into.max_slocc_deviation, part.max_slocc_deviation);
	into.ckw_checks += part.ckw_checks;
	into.min_ckw_residual = std::min(into.min_ckw_residual, part.min_ckw_residual);
	into.violations.insert(into.violations.end(), part.violations.begin(), part.violations.end());
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

} // namespace

VerifySummary run_verify(const VerifyOptions& options) {
	const Sampler sampler(options.config);
	const SystemShape shape(options.config.n_parties, options.config.local_dim);
	if (shape.hilbert_dim() > options.budget) {
		throw CapacityError("dense dimension " + std::to_string(shape.hilbert_dim()) + " exceeds the budget of " +
		                    std::to_string(options.budget));
	}
	std::vector<std::vector<PartySet>> partitions;
	if (options.max_partition_blocks >= 3 && shape.n() >= 3 && shape.n() <= options.max_partition_parties) {
		partitions = enumerate_partitions(shape.n(), options.max_partition_blocks);
	}

	const std::size_t count = options.config.count;
	std::vector<VerifySummary> per_sample(count);
	auto run_one = [&](std::size_t i) {
		VerifySummary& acc = per_sample[i];
		acc.samples = 1;
		const std::uint64_t seed = sampler.sample_seed(i);
		SampleCheck check(options, partitions, i, seed, acc);
		try {
			switch (options.config.kind) {
			case SampleKind::mixed_ginibre: check.mixed(sampler.mixed(i)); break;
			case SampleKind::structured_zero_row: {
				const StructuredSample s = sampler.structured(i);
				check.mixed(s.state, s.separated_party);
				break;
			}
			case SampleKind::pure_sphere: check.pure(sampler.pure(i)); break;
			}
		} catch (const Error& e) {
			acc.violations.push_back({i, seed, "exception", e.what(), 0.0});
		}
	};

	const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
	if (threads == 1) {
		for (std::size_t i = 0; i < count; ++i) run_one(i);
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::jthread> workers;
		for (unsigned t = 0; t < threads; ++t) {
			workers.emplace_back([&] {
				for (std::size_t i = next++; i < count; i = next++) run_one(i);
			});
		}
	}

	VerifySummary summary;
	summary.options = options;
	for (const auto& part : per_sample) merge(summary, part);
	return summary;
}

Json summary_to_json(const VerifySummary& s, std::size_t max_listed_violations) {
	const SampleConfig& c = s.options.config;
	Json j;
	j["ok"] = s.ok();
	j["n"] = c.n_parties;
	j["d"] = c.local_dim;
	j["kind"] = to_string(c.kind);
	j["count"] = c.count;
	j["seed"] = c.seed;
	j["samples"] = s.samples;
	j["cut_checks"] = s.cut_checks;
	j["max_negativity_delta"] = s.max_negativity_delta;
	j["pair_checks"] = s.pair_checks;
	j["max_pairwise_delta"] = s.max_pairwise_delta;
	j["ppt_checks"] = s.ppt_checks;
	j["ppt_disagreements"] = s.ppt_disagreements;
	j["ppt_positive"] = s.ppt_positive;
	j["monogamy_checks"] = s.monogamy_checks;
	j["min_monogamy_residual"] = finite_or_null(s.min_monogamy_residual);
	j["min_oracle_monogamy_residual"] = finite_or_null(s.min_oracle_monogamy_residual);
	j["partition_checks"] = s.partition_checks;
	j["min_partition_residual"] = finite_or_null(s.min_partition_residual);
	j["genuine_samples"] = s.genuine_samples;
	j["min_genuine_residual"] = finite_or_null(s.min_genuine_residual);
	j["strictness_violations"] = s.strictness_violations;
	j["equality_reports"] = s.equality_reports;
	j["diagnosis_failures"] = s.diagnosis_failures;
	j["structured_equalities"] = s.structured_equalities;
	if (c.kind == SampleKind::pure_sphere) {
		j["slocc_checks"] = s.slocc_checks;
		j["max_slocc_deviation"] = s.max_slocc_deviation;
		j["ckw_checks"] = s.ckw_checks;
		j["min_ckw_residual"] = finite_or_null(s.min_ckw_residual);
	}
	if (s.options.fault_injection != 0.0) j["fault_injection"] = s.options.fault_injection;
	j["violation_count"] = s.violations.size();
	Json list = Json::array();
	for (std::size_t i = 0; i < s.violations.size() && i < max_listed_violations; ++i) {
		const Violation& v = s.violations[i];
		Json e;
		e["index"] = v.index;
		e["sample_seed"] = v.sample_seed;
		e["check"] = v.check;
		e["detail"] = v.detail;
		e["value"] = v.value;
		list.push_back(std::move(e));
	}
	j["violations"] = std::move(list);
	return j;
}

} // namespace wmix::cli
