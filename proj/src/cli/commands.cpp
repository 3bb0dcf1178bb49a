#include "wmix/cli/commands.hpp"

#include "wmix/cli/analysis.hpp"
#include "wmix/cli/json_format.hpp"
#include "wmix/cli/state_io.hpp"
#include "wmix/cli/verify.hpp"
#include "wmix/errors.hpp"
#include "wmix/state.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace wmix::cli {

namespace {

struct Emitter {
	std::ostream& out;
	std::optional<std::string> path;

	void emit(const std::string& text) const {
		if (!path) {
			out << text;
			return;
		}
		std::ofstream file(*path, std::ios::binary);
		if (!file) throw FormatError("cannot write " + *path);
		file << text;
	}
};

double parse_number(std::string_view token) {
	while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
	while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
	double value = 0.0;
	const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
	if (ec != std::errc() || end != token.data() + token.size()) {
		throw FormatError("not a number: '" + std::string(token) + "'");
	}
	return value;
}

// "1,0,0" or "0.6,0:0.8" (re:im)
Eigen::VectorXcd parse_inline_amps(const std::string& text) {
	std::vector<cplx> values;
	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t comma = std::min(text.find(',', start), text.size());
		const std::string_view token(text.data() + start, comma - start);
		const std::size_t colon = token.find(':');
		if (colon == std::string_view::npos) {
			values.emplace_back(parse_number(token), 0.0);
		} else {
			values.emplace_back(parse_number(token.substr(0, colon)), parse_number(token.substr(colon + 1)));
		}
		start = comma + 1;
	}
	Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
	for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
	return v;
}

PureGeneralizedW pure_from_amps(const std::string& amps, int n, int d) {
	if (std::filesystem::is_regular_file(amps)) {
		const AnyState s = read_state_file(amps);
		if (const auto* p = std::get_if<PureGeneralizedW>(&s)) return make_generalized_w(p->amplitudes(), p->shape());
		throw FormatError(amps + ": expected a w_pure state");
	}
	const Eigen::VectorXcd v = parse_inline_amps(amps);
	if (d < 2) throw ShapeError("--d must be at least 2");
	if (n == 0) {
		const auto levels = static_cast<Eigen::Index>(d - 1);
		if (v.size() % levels != 0) throw ShapeError("amplitude count is not a multiple of d - 1");
		n = static_cast<int>(v.size() / levels);
	}
	return make_generalized_w(v, SystemShape(n, d));
}

WMixedState mix_from_file(const std::string& path) {
	const Json j = read_json_file(path);
	if (!j.is_array() || j.empty()) throw FormatError(path + ": ensemble must be a non-empty array");
	std::vector<std::pair<double, PureGeneralizedW>> ensemble;
	for (const auto& entry : j) {
		if (!entry.is_object() || !entry.contains("weight") || !entry.contains("state") || !entry["weight"].is_number()) {
			throw FormatError(path + ": each entry needs a numeric \"weight\" and a \"state\"");
		}
		AnyState s = state_from_json(entry["state"]);
		const auto* p = std::get_if<PureGeneralizedW>(&s);
		if (!p) throw FormatError(path + ": ensemble members must be w_pure states");
		ensemble.emplace_back(entry["weight"].get<double>(), *p);
	}
	return mix(ensemble);
}

void apply_config_file(const std::string& path, VerifyOptions& o) {
	const Json j = read_json_file(path);
	if (!j.is_object()) throw FormatError(path + ": config must be an object");
	try {
		if (j.contains("n")) o.config.n_parties = j["n"].get<int>();
		if (j.contains("d")) o.config.local_dim = j["d"].get<int>();
		if (j.contains("count")) o.config.count = j["count"].get<std::size_t>();
		if (j.contains("seed")) o.config.seed = j["seed"].get<std::uint64_t>();
		if (j.contains("kind")) o.config.kind = parse_sample_kind(j["kind"].get<std::string>());
		if (j.contains("budget")) o.budget = j["budget"].get<std::uint64_t>();
		if (j.contains("threads")) o.threads = j["threads"].get<unsigned>();
		if (j.contains("max_partition_blocks")) o.max_partition_blocks = j["max_partition_blocks"].get<int>();
		if (j.contains("fault_injection")) o.fault_injection = j["fault_injection"].get<double>();
	} catch (const nlohmann::json::exception& e) {
		throw FormatError(path + ": " + e.what());
	}
}

std::string violation_prose(const VerifySummary& s) {
	std::ostringstream os;
	os << s.violations.size() << " violation(s)\n";
	std::size_t shown = 0;
	for (const auto& v : s.violations) {
		if (shown++ == 20) {
			os << "  ...\n";
			break;
		}
		os << "  index " << v.index << " seed " << v.sample_seed << ": " << v.check;
		if (!v.detail.empty()) os << " [" << v.detail << "]";
		os << " value " << format_double(v.value) << "\n";
	}
	return os.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Entanglement analysis for mixed W-class states", "wmix"};
	app.require_subcommand(1);

	// make
	auto* make = app.add_subcommand("make", "Write a state file");
	make->require_subcommand(1);
	std::optional<std::string> out_path;

	int w_n = 3;
	bool w_pure = false;
	auto* make_w = make->add_subcommand("w", "Uniform W state");
	make_w->add_option("--n", w_n, "Number of parties")->required();
	make_w->add_flag("--pure", w_pure, "Write the pure amplitude form instead of the density form");
	make_w->add_option("--out", out_path, "Output path (default: stdout)");

	std::string amps;
	int pure_n = 0;
	int pure_d = 2;
	bool pure_pure = false;
	auto* make_pure = make->add_subcommand("pure", "Pure state from amplitudes");
	make_pure->add_option("--amps", amps, "Comma list (re or re:im) or a w_pure file")->required();
	make_pure->add_option("--n", pure_n, "Number of parties (default: inferred)");
	make_pure->add_option("--d", pure_d, "Local dimension");
	make_pure->add_flag("--pure", pure_pure, "Write the pure amplitude form instead of the density form");
	make_pure->add_option("--out", out_path, "Output path (default: stdout)");

	std::string ensemble_path;
	auto* make_mix = make->add_subcommand("mix", "Mixture of pure states");
	make_mix->add_option("--ensemble", ensemble_path, "JSON array of {\"weight\", \"state\"}")->required();
	make_mix->add_option("--out", out_path, "Output path (default: stdout)");

	// analyze
	std::string state_path;
	std::vector<std::string> partitions;
	std::vector<std::string> cuts;
	std::string format = "json";
	std::uint64_t budget = kDefaultDenseBudget;
	bool oracle = false;
	auto* analyze_cmd = app.add_subcommand("analyze", "Negativities, verdicts and monogamy for a state file");
	analyze_cmd->add_option("state", state_path, "State file")->required();
	analyze_cmd->add_option("--partition", partitions, "Ordered partition, e.g. 1,2|3|4 (repeatable)");
	analyze_cmd->add_option("--cut", cuts, "Extra bipartition, e.g. 1,3|2,4 (repeatable)");
	analyze_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
	analyze_cmd->add_option("--budget", budget, "Maximum dense dimension for oracle work");
	analyze_cmd->add_flag("--oracle", oracle, "Attach dense-oracle negativities to every cut");

	// verify
	VerifyOptions vo;
	std::string kind = "mixed_ginibre";
	std::optional<std::string> config_path;
	auto* verify_cmd = app.add_subcommand("verify", "Sample states and cross-check closed forms against the oracle");
	verify_cmd->add_option("--config", config_path, "JSON config; explicit flags override it");
	verify_cmd->add_option("--n", vo.config.n_parties, "Number of parties");
	verify_cmd->add_option("--d", vo.config.local_dim, "Local dimension");
	verify_cmd->add_option("--count", vo.config.count, "Number of samples");
	verify_cmd->add_option("--seed", vo.config.seed, "Base seed");
	verify_cmd->add_option("--kind", kind, "mixed_ginibre, pure_sphere or structured_zero_row");
	verify_cmd->add_option("--budget", vo.budget, "Maximum dense dimension");
	verify_cmd->add_option("--threads", vo.threads, "Worker threads");
	verify_cmd->add_option("--max-blocks", vo.max_partition_blocks, "Largest partition size for grouped monogamy");
	verify_cmd->add_option("--fault-injection", vo.fault_injection, "Offset added to closed-form negativities");

	std::vector<std::string> argv_rev(args.rbegin(), args.rend());
	try {
		app.parse(argv_rev);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError& e) {
		err << "wmix: " << e.what() << "\n";
		return kBadInput;
	}

	try {
		if (make->parsed()) {
			Emitter emitter{out, out_path};
			if (make_w->parsed()) {
				const PureGeneralizedW w = make_w_state(w_n);
				emitter.emit(dump(w_pure ? to_json(w) : to_json(WMixedState::from_pure(w))));
			} else if (make_pure->parsed()) {
				const PureGeneralizedW p = pure_from_amps(amps, pure_n, pure_d);
				emitter.emit(dump(pure_pure ? to_json(p) : to_json(WMixedState::from_pure(p))));
			} else {
				emitter.emit(dump(to_json(mix_from_file(ensemble_path))));
			}
			return kOk;
		}

		if (analyze_cmd->parsed()) {
			const AnyState s = read_state_file(state_path);
			const WMixedState state = std::holds_alternative<WMixedState>(s)
			                              ? std::get<WMixedState>(s)
			                              : WMixedState::from_pure(std::get<PureGeneralizedW>(s));
			AnalysisOptions ao;
			for (const auto& p : partitions) ao.partitions.push_back(parse_partition(p));
			for (const auto& c : cuts) ao.cuts.push_back(Bipartition::parse(c, state.shape().n()));
			ao.oracle = oracle;
			ao.budget = budget;
			const Json report = analyze(state, ao);
			out << (format == "csv" ? analysis_csv(report) : dump(report));
			return kOk;
		}

		if (config_path) {
			// Reparse so explicit flags take precedence over the file.
			VerifyOptions from_file;
			apply_config_file(*config_path, from_file);
			if (verify_cmd->count("--n") == 0) vo.config.n_parties = from_file.config.n_parties;
			if (verify_cmd->count("--d") == 0) vo.config.local_dim = from_file.config.local_dim;
			if (verify_cmd->count("--count") == 0) vo.config.count = from_file.config.count;
			if (verify_cmd->count("--seed") == 0) vo.config.seed = from_file.config.seed;
			if (verify_cmd->count("--kind") == 0) kind = to_string(from_file.config.kind);
			if (verify_cmd->count("--budget") == 0) vo.budget = from_file.budget;
			if (verify_cmd->count("--threads") == 0) vo.threads = from_file.threads;
			if (verify_cmd->count("--max-blocks") == 0) vo.max_partition_blocks = from_file.max_partition_blocks;
			if (verify_cmd->count("--fault-injection") == 0) vo.fault_injection = from_file.fault_injection;
		}
		vo.config.kind = parse_sample_kind(kind);
		const VerifySummary summary = run_verify(vo);
		out << dump(summary_to_json(summary));
		if (!summary.ok()) {
			err << "wmix verify: " << violation_prose(summary);
			return kViolation;
		}
		err << "wmix verify: " << summary.samples << " samples, max negativity delta "
		    << format_double(summary.max_negativity_delta) << ", no violations\n";
		return kOk;
	} catch (const CapacityError& e) {
		err << "wmix: capacity exceeded: " << e.what() << "\n";
		return kCapacity;
	} catch (const ContractViolation& e) {
		err << "wmix: contract violation: " << e.what() << "\n";
		return kViolation;
	} catch (const Error& e) {
		err << "wmix: " << e.what() << "\n";
		return kBadInput;
	} catch (const nlohmann::json::exception& e) {
		err << "wmix: malformed input: " << e.what() << "\n";
		return kBadInput;
	}
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
	std::vector<std::string> args;
	for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
	return run(args, out, err);
}

} // namespace wmix::cli
