#include "wmix/cli/analysis.hpp"

#include "wmix/cli/state_io.hpp"
#include "wmix/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace wmix::cli {

namespace {

Json cut_entry(const WMixedState& state, const Bipartition& cut, const std::optional<DenseOperator>& dense,
               double& max_delta) {
	Json e;
	e["cut"] = cut.to_string();
	const double neg = negativity_cut(state, cut);
	e["negativity"] = neg;
	e["separable"] = is_separable_cut(state, cut);
	if (dense) {
		const double oracle = negativity_dense(*dense, cut);
		e["oracle_negativity"] = oracle;
		e["oracle_delta"] = std::abs(oracle - neg);
		max_delta = std::max(max_delta, std::abs(oracle - neg));
	}
	return e;
}

std::string csv_field(const std::string& s) {
	if (s.find_first_of(",\"") == std::string::npos) return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"') out += '"';
		out += c;
	}
	return out + "\"";
}

std::string csv_number(const Json& v) { return v.is_null() ? "" : format_double(v.get<double>()); }

} // namespace

std::vector<PartySet> parse_partition(std::string_view text) {
	std::vector<PartySet> blocks;
	std::size_t pos = 0;
	while (true) {
		const std::size_t bar = text.find('|', pos);
		blocks.push_back(PartySet::parse(text.substr(pos, bar == std::string_view::npos ? bar : bar - pos)));
		if (bar == std::string_view::npos) break;
		pos = bar + 1;
	}
	return blocks;
}

Json report_to_json(const MonogamyReport& report) {
	Json j;
	j["focus"] = report.focus.to_string();
	Json terms = Json::array();
	for (const auto& t : report.terms) {
		Json e;
		e["partner"] = t.partner.to_string();
		e["squared_negativity"] = t.squared_negativity;
		terms.push_back(std::move(e));
	}
	j["terms"] = std::move(terms);
	j["term_sum"] = report.term_sum();
	j["rhs"] = report.rhs;
	j["residual"] = report.residual;
	j["equality"] = report.equality;
	if (report.inferred_separability) {
		Json cuts = Json::array();
		for (const auto& c : *report.inferred_separability) cuts.push_back(c.to_string());
		j["inferred_separability"] = std::move(cuts);
	} else {
		j["inferred_separability"] = nullptr;
	}
	return j;
}

Json analyze(const WMixedState& state, const AnalysisOptions& options) {
	const SystemShape& shape = state.shape();
	const int n = shape.n();
	std::optional<DenseOperator> dense;
	if (options.oracle) dense.emplace(embed_dense(state, options.budget));
	double max_delta = 0.0;

	Json out;
	out["fingerprint"] = fingerprint(state);
	out["n"] = n;
	out["d"] = shape.d();
	out["vacuum"] = state.vacuum_weight();

	Json singles = Json::array();
	for (Party p = 1; p <= n; ++p) {
		Json e = cut_entry(state, Bipartition(PartySet{p}, n), dense, max_delta);
		e["party"] = p;
		const auto block = pt_block_eigenvalues(state, p);
		Json b;
		b["plus"] = block.plus;
		b["minus"] = block.minus;
		b["zeros"] = block.zeros;
		e["pt_block"] = std::move(b);
		singles.push_back(std::move(e));
	}
	out["single_cuts"] = std::move(singles);

	Json pairs = Json::array();
	for (Party a = 1; a <= n; ++a) {
		for (Party b = a + 1; b <= n; ++b) {
			Json e;
			e["parties"] = Json::array({a, b});
			e["negativity"] = pairwise_negativity(state, a, b);
			e["upper_bound"] = pairwise_upper_bound(state, a, b);
			pairs.push_back(std::move(e));
		}
	}
	out["pairwise"] = std::move(pairs);

	if (n <= kMaxListedBipartitionParties) {
		Json cuts = Json::array();
		for (const auto& cut : all_bipartitions(n)) cuts.push_back(cut_entry(state, cut, dense, max_delta));
		out["bipartitions"] = std::move(cuts);
	}
	if (!options.cuts.empty()) {
		Json cuts = Json::array();
		for (const auto& cut : options.cuts) {
			if (cut.n() != n) throw ShapeError("cut " + cut.to_string() + " does not match the state's party count");
			cuts.push_back(cut_entry(state, cut, dense, max_delta));
		}
		out["requested_cuts"] = std::move(cuts);
	}

	const SeparabilityVerdict verdict = classify(state);
	Json v;
	v["fully_separable"] = verdict.fully_separable;
	v["genuine"] = verdict.genuine;
	Json separable = Json::array();
	for (const auto& [left, cv] : verdict.per_cut) {
		if (cv == CutVerdict::separable) separable.push_back(Bipartition(left, n).to_string());
	}
	v["separable_cuts"] = std::move(separable);
	out["verdict"] = std::move(v);

	Json mono = Json::array();
	if (n >= 3) {
		for (Party p = 1; p <= n; ++p) mono.push_back(report_to_json(monogamy_single(state, p)));
	}
	out["monogamy"] = std::move(mono);

	if (!options.partitions.empty()) {
		Json grouped = Json::array();
		for (const auto& partition : options.partitions) grouped.push_back(report_to_json(monogamy_partition(state, partition)));
		out["partitions"] = std::move(grouped);
	}
	if (dense) out["oracle_max_delta"] = max_delta;
	return out;
}

std::string analysis_csv(const Json& report) {
	std::string out = "record,left,right,value,bound,rhs,residual,equality\n";
	auto row = [&out](const std::string& record, const std::string& left, const std::string& right,
	                  const std::string& value, const std::string& bound, const std::string& rhs,
	                  const std::string& residual, const std::string& equality) {
		out += record + "," + csv_field(left) + "," + csv_field(right) + "," + value + "," + bound + "," + rhs + "," +
		       residual + "," + equality + "\n";
	};
	const int n = report.at("n").get<int>();
	auto split = [n](const std::string& cut) { return Bipartition::parse(cut, n); };

	if (report.contains("bipartitions")) {
		for (const auto& e : report.at("bipartitions")) {
			const auto cut = split(e.at("cut").get<std::string>());
			row("negativity", cut.left().to_string(), cut.right().to_string(), csv_number(e.at("negativity")), "", "", "", "");
		}
	} else {
		for (const auto& e : report.at("single_cuts")) {
			const auto cut = split(e.at("cut").get<std::string>());
			row("negativity", cut.left().to_string(), cut.right().to_string(), csv_number(e.at("negativity")), "", "", "", "");
		}
	}
	for (const auto& e : report.at("pairwise")) {
		row("pairwise", std::to_string(e.at("parties")[0].get<int>()), std::to_string(e.at("parties")[1].get<int>()),
		    csv_number(e.at("negativity")), csv_number(e.at("upper_bound")), "", "", "");
	}
	auto monogamy_rows = [&](const Json& reports, const std::string& kind) {
		for (const auto& r : reports) {
			const std::string focus = r.at("focus").get<std::string>();
			for (const auto& t : r.at("terms")) {
				row(kind + "_term", focus, t.at("partner").get<std::string>(), csv_number(t.at("squared_negativity")), "", "",
				    "", "");
			}
			const std::string rest = PartySet::parse(focus).complement(n).to_string();
			row(kind, focus, rest, csv_number(r.at("term_sum")), "", csv_number(r.at("rhs")), csv_number(r.at("residual")),
			    r.at("equality").get<bool>() ? "true" : "false");
		}
	};
	monogamy_rows(report.at("monogamy"), "monogamy");
	if (report.contains("partitions")) monogamy_rows(report.at("partitions"), "partition");
	return out;
}

} // namespace wmix::cli
