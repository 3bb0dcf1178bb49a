#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmix/closed_form.hpp"
#include "wmix/dense.hpp"
#include "wmix/errors.hpp"
#include "wmix/sampler.hpp"

using namespace wmix;
using wmix::test::near;

namespace {
const double kSqrt2Over3 = std::sqrt(2.0) / 3.0;
const double kPairW3 = (std::sqrt(5.0) - 1.0) / 6.0;
} // namespace

TEST_CASE("pt_block_eigenvalues") {
	const auto w3 = wmix::test::w_mixed(3);
	const auto spec = pt_block_eigenvalues(w3, 1);
	CHECK(near(spec.plus, kSqrt2Over3, 1e-15));
	CHECK(spec.minus == -spec.plus);
	CHECK(spec.zeros == 1);

	CHECK(pt_block_eigenvalues(wmix::test::biseparable_mixture(), 1).plus == 0.0);
	const auto diag = wmix::test::diagonal_state({0.2, 0.3, 0.5});
	for (Party p = 1; p <= 3; ++p) CHECK(pt_block_eigenvalues(diag, p).plus == 0.0);
}

TEST_CASE("negativity_cut anchors") {
	CHECK(near(negativity_cut(wmix::test::w_mixed(3), Bipartition(PartySet{1}, 3)), kSqrt2Over3, 1e-15));

	const WMixedState pair(SystemShape(2), 1.0 / 3.0, Eigen::MatrixXcd::Constant(2, 2, 1.0 / 3.0));
	CHECK(near(negativity_cut(pair, Bipartition(PartySet{1}, 2)), kPairW3, 1e-15));

	const WMixedState diag(SystemShape(2), 0.4, wmix::test::mat({{0.35, 0}, {0, 0.25}}));
	CHECK(negativity_cut(diag, Bipartition(PartySet{1}, 2)) == 0.0);

	CHECK(near(negativity_cut(wmix::test::w_mixed(4), Bipartition(PartySet{1, 2}, 4)), 0.5, 1e-15));

	CHECK_THROWS_AS(negativity_cut(wmix::test::w_mixed(4), Bipartition(PartySet{1}, 3)), ShapeError);
}

TEST_CASE("pairwise negativity and its bound") {
	const auto w3 = wmix::test::w_mixed(3);
	CHECK(near(pairwise_negativity(w3, 1, 2), kPairW3, 1e-15));
	CHECK(near(pairwise_upper_bound(w3, 1, 2), 1.0 / 3.0, 1e-15));
	CHECK(pairwise_negativity(w3, 1, 2) <= pairwise_upper_bound(w3, 1, 2));

	const auto w4 = wmix::test::w_mixed(4);
	for (Party a = 1; a <= 4; ++a)
		for (Party b = a + 1; b <= 4; ++b)
			CHECK(near(pairwise_negativity(w4, a, b), (std::sqrt(2.0) - 1.0) / 4.0, 1e-15));

	const auto mixture = wmix::test::biseparable_mixture();
	CHECK(pairwise_negativity(mixture, 1, 2) == 0.0); // A_1 <-> row 3, A_2 <-> row 2: entry zero
	CHECK(pairwise_upper_bound(mixture, 1, 2) == 0.0);

	const auto w2 = wmix::test::w_mixed(2);
	CHECK(near(pairwise_negativity(w2, 1, 2), 0.5, 1e-15));
	CHECK(near(pairwise_upper_bound(w2, 1, 2), 0.5, 1e-15));

	CHECK_THROWS_AS(pairwise_negativity(w3, 2, 2), IndexError);
	CHECK_THROWS_AS(pairwise_upper_bound(w3, 1, 4), IndexError);
}

TEST_CASE("PPT and separability predicates") {
	const auto mixture = wmix::test::biseparable_mixture();
	CHECK(is_separable_cut(mixture, Bipartition(PartySet{1}, 3)));
	CHECK(is_ppt_cut(mixture, Bipartition(PartySet{1}, 3)));
	CHECK_FALSE(is_separable_cut(mixture, Bipartition(PartySet{2}, 3)));
	CHECK_FALSE(is_fully_separable(mixture));

	const auto w3 = wmix::test::w_mixed(3);
	for (const auto& cut : all_bipartitions(3)) CHECK_FALSE(is_ppt_cut(w3, cut));
	CHECK_FALSE(is_fully_separable(w3));

	const auto diag = wmix::test::diagonal_state({0.2, 0.3, 0.5});
	for (const auto& cut : all_bipartitions(3)) CHECK(is_separable_cut(diag, cut));
	CHECK(is_fully_separable(diag));

	// qudit: coherence between levels of one party is local
	Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(4, 4);
	c.block(0, 0, 2, 2) = wmix::test::mat({{0.3, 0.2}, {0.2, 0.3}});
	c.block(2, 2, 2, 2) = wmix::test::mat({{0.2, cplx(0, 0.1)}, {cplx(0, -0.1), 0.2}});
	const WMixedState local(SystemShape(2, 3), 0.0, c);
	CHECK(is_fully_separable(local));
	CHECK(near(min_pt_eigenvalue(embed_dense(local), PartySet{2}), 0.0, 1e-12));
}

TEST_CASE("classify and genuine rank") {
	const auto v = classify(wmix::test::w_mixed(4));
	CHECK(v.per_cut.size() == 7);
	CHECK(v.genuine);
	CHECK_FALSE(v.fully_separable);

	const auto m = classify(wmix::test::biseparable_mixture());
	CHECK_FALSE(m.genuine);
	CHECK(m.per_cut.at(PartySet{1}) == CutVerdict::separable);
	CHECK(m.per_cut.at(PartySet{1, 2}) == CutVerdict::entangled);

	const auto d = classify(wmix::test::diagonal_state({0.1, 0.2, 0.3, 0.4}));
	CHECK(d.fully_separable);
	for (const auto& [left, verdict] : d.per_cut) CHECK(verdict == CutVerdict::separable);

	std::vector<double> many(17, 1.0 / 17.0);
	CHECK_THROWS_AS(classify(wmix::test::diagonal_state(many)), CapacityError);

	CHECK(genuine_rank_of_pure(make_w_state(5)) == 5);
	CHECK(genuine_rank_of_pure(make_generalized_w(wmix::test::vec({0.6, 0.8, 0.0}), SystemShape(3))) == 2);
	CHECK(genuine_rank_of_pure(make_generalized_w(wmix::test::vec({1.0, 0.0, 0.0}), SystemShape(3))) == 1);
	CHECK(genuine_rank_of_pure(make_generalized_w(wmix::test::vec({0.0, 0.6, 0.0, 0.8}), SystemShape(2, 3))) == 2);
}

TEST_CASE("closed forms agree with the dense oracle") {
	auto check_state = [](const WMixedState& s) {
		const auto dense = embed_dense(s);
		for (const auto& cut : all_bipartitions(s.shape().n())) {
			const double closed = negativity_cut(s, cut);
			CHECK(near(closed, negativity_dense(dense, cut), 1e-9));
			const bool oracle_ppt = min_pt_eigenvalue(dense, cut.right()) >= -1e-10;
			if (s.vacuum_weight() == 0.0) CHECK(is_ppt_cut(s, cut) == oracle_ppt);
		}
	};
	for (int n = 3; n <= 6; ++n) {
		Sampler sampler({n, 2, 1, 77, SampleKind::mixed_ginibre});
		for (std::size_t i = 0; i < 5; ++i) {
			const auto s = sampler.mixed(i);
			check_state(s);
			// reduced states carry vacuum weight
			if (n >= 4) check_state(partial_trace(s, PartySet{2}));
			if (n >= 5) check_state(partial_trace(s, PartySet{1, n}));
		}
		Sampler structured({n, 2, 1, 78, SampleKind::structured_zero_row});
		for (std::size_t i = 0; i < 5; ++i) check_state(structured.structured(i).state);
	}
	for (int d : {3, 4}) {
		Sampler qudit({3, d, 1, 79, SampleKind::mixed_ginibre});
		for (std::size_t i = 0; i < 4; ++i) check_state(qudit.mixed(i));
	}
}

TEST_CASE("pairwise closed form matches the reduce-then-cut route") {
	for (int n = 3; n <= 6; ++n) {
		Sampler sampler({n, 2, 1, 5, SampleKind::mixed_ginibre});
		for (std::size_t i = 0; i < 10; ++i) {
			const auto s = sampler.mixed(i);
			for (Party a = 1; a <= n; ++a) {
				for (Party b = 1; b <= n; ++b) {
					if (a == b) continue;
					const PartySet kept{a, b};
					const auto reduced = reduce_to(s, kept);
					const double via_trace = negativity_cut(reduced, Bipartition(renumber_within(PartySet{a}, kept), 2));
					const double direct = pairwise_negativity(s, a, b);
					CHECK(near(direct, via_trace, 1e-12));
					CHECK(direct <= pairwise_upper_bound(s, a, b));
				}
			}
		}
	}
}

TEST_CASE("single-party closed forms coincide with the PT block for p0 = 0") {
	for (int n = 3; n <= 6; ++n) {
		const auto s = Sampler({n, 2, 1, 6, SampleKind::mixed_ginibre}).mixed(0);
		for (Party p = 1; p <= n; ++p) {
			CHECK(pt_block_eigenvalues(s, p).plus == negativity_cut(s, Bipartition(PartySet{p}, n)));
		}
	}
}

TEST_CASE("bound is tight exactly when s or the focal entry vanishes") {
	// s = 0: only A_1 and A_2 populated
	const WMixedState tight(SystemShape(3), 0.0, wmix::test::mat({{0, 0, 0}, {0, 0.5, 0.4}, {0, 0.4, 0.5}}));
	CHECK(near(pairwise_negativity(tight, 1, 2), pairwise_upper_bound(tight, 1, 2), 1e-15));
	const auto w3 = wmix::test::w_mixed(3);
	CHECK(pairwise_upper_bound(w3, 1, 2) - pairwise_negativity(w3, 1, 2) > 1e-3);
}

TEST_CASE("vacuum weight lowers negativity at fixed coherence") {
	// rho(p0) = p0 |00><00| + [[x, b], [b, y]] on the single-excitation block, x = y = (1 - p0)/2
	const double b = 0.2;
	auto neg = [b](double p0) {
		const double x = 0.5 * (1.0 - p0);
		const WMixedState s(SystemShape(2), p0, wmix::test::mat({{x, b}, {b, x}}));
		return negativity_cut(s, Bipartition(PartySet{1}, 2));
	};
	const double h = 1e-6;
	for (double p0 : {0.05, 0.2, 0.4, 0.55}) {
		const double fd = (neg(p0 + h) - neg(p0 - h)) / (2 * h);
		const double analytic = 0.5 * (p0 / std::sqrt(p0 * p0 + 4 * b * b) - 1.0);
		CHECK(fd < 0.0);
		CHECK(near(fd, analytic, 1e-4));
		CHECK(neg(p0 + 0.01) < neg(p0));
	}
}
