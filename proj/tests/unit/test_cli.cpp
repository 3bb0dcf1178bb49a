#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmix/cli/analysis.hpp"
#include "wmix/cli/commands.hpp"
#include "wmix/cli/state_io.hpp"
#include "wmix/cli/verify.hpp"
#include "wmix/closed_form.hpp"
#include "wmix/sampler.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace wmix;
using namespace wmix::cli;
using wmix::test::near;

namespace {

const std::filesystem::path kFixtures = WMIX_FIXTURE_DIR;

struct Outcome {
	int code;
	std::string out;
	std::string err;
};

Outcome call(const std::vector<std::string>& args) {
	std::ostringstream out, err;
	const int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
	return std::filesystem::temp_directory_path() / ("wmix_test_cli_" + name);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
	std::ofstream(p, std::ios::binary) << text;
}

} // namespace

TEST_CASE("format_double") {
	CHECK(format_double(1.0) == "1.0");
	CHECK(format_double(-0.0) == "0.0");
	CHECK(format_double(0.1) == "0.10000000000000001");
	CHECK(format_double(1e-20) == "9.9999999999999995e-21");
	CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "null");
	CHECK(format_double(250.0) == "250.0");
}

TEST_CASE("state files round-trip exactly") {
	Sampler sampler({4, 3, 1, 5, SampleKind::mixed_ginibre});
	const WMixedState s = sampler.mixed(0);
	const WMixedState back = mixed_from_json(Json::parse(dump(to_json(s))));
	CHECK(back.shape() == s.shape());
	CHECK(back.vacuum_weight() == s.vacuum_weight());
	CHECK((back.coeff() - s.coeff()).cwiseAbs().maxCoeff() == 0.0);
	CHECK(fingerprint(back) == fingerprint(s));
	CHECK(fingerprint(back) != fingerprint(sampler.mixed(1)));
	CHECK(fingerprint(s).rfind("sha256:", 0) == 0);

	Sampler pures({3, 2, 1, 5, SampleKind::pure_sphere});
	const PureGeneralizedW p = pures.pure(0);
	const AnyState q = state_from_json(Json::parse(dump(to_json(p))));
	REQUIRE(std::holds_alternative<PureGeneralizedW>(q));
	CHECK((std::get<PureGeneralizedW>(q).amplitudes() - p.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state parsing defaults and errors") {
	const auto w = state_from_json(Json::parse(R"({"kind": "w_pure", "n": 3, "amp_re": [1, 0, 0]})"));
	REQUIRE(std::holds_alternative<PureGeneralizedW>(w));
	CHECK(std::get<PureGeneralizedW>(w).shape().d() == 2);
	CHECK_THROWS_AS(state_from_json(Json::parse(R"({"kind": "w_state"})")), FormatError);
	CHECK_THROWS_AS(state_from_json(Json::parse(R"({"kind": "w_pure", "n": 3, "amp_re": [1, 0]})")), FormatError);
	CHECK_THROWS_AS(read_json_file(scratch("does_not_exist.json")), FormatError);
}

TEST_CASE("analyze on W3 carries the anchor values") {
	const Json r = analyze(WMixedState::from_pure(make_w_state(3)), {});
	CHECK(near(r["single_cuts"][0]["negativity"].get<double>(), std::sqrt(2.0) / 3.0, 1e-12));
	CHECK(near(r["pairwise"][0]["negativity"].get<double>(), (std::sqrt(5.0) - 1.0) / 6.0, 1e-12));
	CHECK(near(r["monogamy"][0]["residual"].get<double>(), (std::sqrt(5.0) - 1.0) / 9.0, 1e-10));
	CHECK(r["verdict"]["genuine"].get<bool>());

	const std::string csv = analysis_csv(r);
	CHECK(csv.rfind("record,left,right,value,bound,rhs,residual,equality\n", 0) == 0);
	CHECK(csv.find("0.47140452079103") != std::string::npos);
}

TEST_CASE("analyze --partition on W4 gives rhs 1/4") {
	AnalysisOptions o;
	o.partitions.push_back(parse_partition("1,2|3|4"));
	const Json r = analyze(WMixedState::from_pure(make_w_state(4)), o);
	CHECK(near(r["partitions"][0]["rhs"].get<double>(), 0.25, 1e-12));
	CHECK_THROWS(parse_partition("1,2||3"));
}

TEST_CASE("make commands") {
	const Outcome w = call({"make", "w", "--n", "3"});
	REQUIRE(w.code == 0);
	const WMixedState s = mixed_from_json(Json::parse(w.out));
	CHECK(near(s.coeff()(0, 2).real(), 1.0 / 3.0, 1e-15));

	const Outcome product = call({"make", "pure", "--amps", "1,0,0", "--pure"});
	REQUIRE(product.code == 0);
	const auto p = std::get<PureGeneralizedW>(state_from_json(Json::parse(product.out)));
	CHECK(genuine_rank_of_pure(p) == 1);

	const Outcome complex_amps = call({"make", "pure", "--amps", "0.6,0:0.8", "--n", "2"});
	REQUIRE(complex_amps.code == 0);
	CHECK(near(mixed_from_json(Json::parse(complex_amps.out)).coeff()(0, 1).imag(), -0.48, 1e-15));

	const auto ens = scratch("ensemble.json");
	write_text(ens, R"([
	  {"weight": 0.5, "state": {"kind": "w_pure", "n": 3, "d": 2, "amp_re": [0.57735026918962573, 0.57735026918962573, 0.57735026918962573]}},
	  {"weight": 0.5, "state": {"kind": "w_pure", "n": 3, "d": 2, "amp_re": [0.57735026918962573, 0.57735026918962573, -0.57735026918962573]}}
	])");
	const Outcome m = call({"make", "mix", "--ensemble", ens.string()});
	REQUIRE(m.code == 0);
	const Eigen::MatrixXcd expected = wmix::test::mat({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}) / 3.0;
	CHECK((mixed_from_json(Json::parse(m.out)).coeff() - expected).cwiseAbs().maxCoeff() <= 1e-15);
	std::filesystem::remove(ens);
}

TEST_CASE("exit codes") {
	CHECK(call({"--help"}).code == 0);
	CHECK(call({"make", "pure", "--amps", "1,x,0"}).code == 2);
	CHECK(call({"make", "pure", "--amps", "1,0,0,0", "--n", "3"}).code == 2);
	CHECK(call({"make", "w"}).code == 2);
	CHECK(call({"analyze", scratch("missing.json").string()}).code == 2);

	const auto bad = scratch("bad.json");
	write_text(bad, "{ not json");
	const Outcome b = call({"analyze", bad.string()});
	CHECK(b.code == 2);
	CHECK(b.out.empty());
	CHECK_FALSE(b.err.empty());
	std::filesystem::remove(bad);

	CHECK(call({"analyze", (kFixtures / "w3.json").string(), "--oracle", "--budget", "4"}).code == 3);
	CHECK(call({"verify", "--n", "7", "--budget", "64"}).code == 3);
	CHECK(call({"verify", "--kind", "nonsense"}).code == 2);
}

TEST_CASE("verify") {
	const Outcome ok = call({"verify", "--n", "4", "--count", "20", "--seed", "2"});
	CHECK(ok.code == 0);
	CHECK(Json::parse(ok.out)["ok"].get<bool>());

	const Outcome bad = call({"verify", "--config", (kFixtures / "verify_selftest.json").string()});
	CHECK(bad.code == 1);
	const Json summary = Json::parse(bad.out);
	CHECK_FALSE(summary["ok"].get<bool>());
	CHECK(summary["violations"][0]["check"] == "negativity_delta");
	CHECK(bad.err.find("seed") != std::string::npos);

	SUBCASE("thread count does not change the summary") {
		VerifyOptions o;
		o.config = {4, 2, 12, 9, SampleKind::pure_sphere};
		const std::string serial = dump(summary_to_json(run_verify(o)));
		o.threads = 3;
		CHECK(dump(summary_to_json(run_verify(o))) == serial);
	}
}
