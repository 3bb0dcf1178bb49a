#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmix/closed_form.hpp"
#include "wmix/errors.hpp"
#include "wmix/sampler.hpp"

#include <set>

using namespace wmix;

TEST_CASE("Ginibre states are valid and reproducible") {
	const SampleConfig config{4, 2, 2, 42, SampleKind::mixed_ginibre};
	const auto first = random_mixed(config);
	const auto second = random_mixed(config);
	REQUIRE(first.size() == 2);
	for (std::size_t i = 0; i < 2; ++i) {
		CHECK(first[i].coeff() == second[i].coeff());
		CHECK(first[i].vacuum_weight() == 0.0);
		CHECK(std::abs(first[i].coeff().trace().real() - 1.0) <= 1e-12);
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(first[i].coeff());
		CHECK(es.eigenvalues().minCoeff() >= -1e-10);
	}
	CHECK(first[0].coeff() != first[1].coeff());

	// index access does not depend on generation order
	const Sampler sampler(config);
	CHECK(sampler.mixed(1).coeff() == first[1].coeff());
	const auto other = random_mixed({4, 2, 2, 43, SampleKind::mixed_ginibre});
	CHECK(other[0].coeff() != first[0].coeff());
}

TEST_CASE("per-sample seeds are distinct") {
	std::set<std::uint64_t> seen;
	for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(mix_seed(7, i));
	CHECK(seen.size() == 10000);
	CHECK(mix_seed(7, 0) != mix_seed(8, 0));
}

TEST_CASE("pure samples") {
	const auto states = random_pure({5, 2, 200, 3, SampleKind::pure_sphere});
	for (const auto& s : states) {
		CHECK(std::abs(s.amplitudes().norm() - 1.0) <= 1e-12);
		CHECK(genuine_rank_of_pure(s) == 5);
	}
	CHECK(random_pure({5, 2, 1, 3, SampleKind::pure_sphere})[0].amplitudes() == states[0].amplitudes());
}

TEST_CASE("structured samples are separable on exactly the designated cut") {
	for (int d : {2, 3}) {
		const auto samples = random_structured({4, d, 100, 21, SampleKind::structured_zero_row});
		std::set<Party> parties;
		for (const auto& s : samples) {
			parties.insert(s.separated_party);
			for (const auto& cut : all_bipartitions(4)) {
				const bool designated = cut.left() == PartySet{s.separated_party} || cut.right() == PartySet{s.separated_party};
				CHECK(is_separable_cut(s.state, cut) == designated);
			}
			CHECK(std::abs(s.state.coeff().trace().real() - 1.0) <= 1e-12);
		}
		CHECK(parties.size() == 4);
	}
}

TEST_CASE("kind mismatches and bad configs") {
	CHECK_THROWS_AS(random_mixed({3, 2, 1, 0, SampleKind::pure_sphere}), PreconditionError);
	CHECK_THROWS_AS(random_pure({3, 2, 1, 0, SampleKind::mixed_ginibre}), PreconditionError);
	CHECK_THROWS_AS(Sampler({3, 2, 0, 0, SampleKind::mixed_ginibre}), PreconditionError);
	CHECK_THROWS_AS(Sampler({1, 2, 1, 0, SampleKind::mixed_ginibre}), ShapeError);
	CHECK(parse_sample_kind("structured_zero_row") == SampleKind::structured_zero_row);
	CHECK(to_string(SampleKind::pure_sphere) == "pure_sphere");
	CHECK_THROWS_AS(parse_sample_kind("haar"), PreconditionError);
}
