#include "wmix/sampler.hpp"

#include "wmix/errors.hpp"

namespace wmix {

namespace {

Eigen::MatrixXcd ginibre(std::mt19937_64& engine, Eigen::Index k) {
	std::normal_distribution<double> normal(0.0, 1.0);
	Eigen::MatrixXcd g(k, k);
	for (Eigen::Index j = 0; j < k; ++j) {
		for (Eigen::Index i = 0; i < k; ++i) {
			const double re = normal(engine);
			const double im = normal(engine);
			g(i, j) = cplx(re, im);
		}
	}
	return g;
}

Eigen::MatrixXcd unit_trace(const Eigen::MatrixXcd& h) { return h / h.trace().real(); }

} // namespace

std::string to_string(SampleKind kind) {
	switch (kind) {
	case SampleKind::mixed_ginibre: return "mixed_ginibre";
	case SampleKind::pure_sphere: return "pure_sphere";
	case SampleKind::structured_zero_row: return "structured_zero_row";
	}
	return "unknown";
}

SampleKind parse_sample_kind(std::string_view text) {
	if (text == "mixed_ginibre") return SampleKind::mixed_ginibre;
	if (text == "pure_sphere") return SampleKind::pure_sphere;
	if (text == "structured_zero_row") return SampleKind::structured_zero_row;
	throw PreconditionError("unknown sample kind '" + std::string(text) + "'");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
	std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

Sampler::Sampler(SampleConfig config) : config_(config), shape_(config.n_parties, config.local_dim) {
	if (config_.count < 1) throw PreconditionError("sample count must be at least 1");
}

std::uint64_t Sampler::sample_seed(std::size_t index) const noexcept { return mix_seed(config_.seed, index); }

WMixedState Sampler::mixed(std::size_t index) const {
	std::mt19937_64 engine(sample_seed(index));
	const Eigen::MatrixXcd g = ginibre(engine, shape_.label_count());
	return WMixedState(shape_, 0.0, unit_trace(g * g.adjoint()));
}

PureGeneralizedW Sampler::pure(std::size_t index) const {
	std::mt19937_64 engine(sample_seed(index));
	std::normal_distribution<double> normal(0.0, 1.0);
	Eigen::VectorXcd a(shape_.label_count());
	for (Eigen::Index i = 0; i < a.size(); ++i) {
		const double re = normal(engine);
		const double im = normal(engine);
		a(i) = cplx(re, im);
	}
	return PureGeneralizedW(shape_, a / a.norm());
}

StructuredSample Sampler::structured(std::size_t index) const {
	std::mt19937_64 engine(sample_seed(index));
	const Eigen::MatrixXcd g = ginibre(engine, shape_.label_count());
	std::uniform_int_distribution<int> pick(1, shape_.n());
	const Party party = pick(engine);

	Eigen::MatrixXcd h = g * g.adjoint();
	const auto own = shape_.label_indices_of(party);
	auto is_own = [&](Eigen::Index i) {
		return i >= own.front() && i <= own.back();
	};
	for (Eigen::Index i = 0; i < h.rows(); ++i) {
		for (Eigen::Index j = 0; j < h.cols(); ++j) {
			if (is_own(i) != is_own(j)) h(i, j) = 0.0;
		}
	}
	return StructuredSample{WMixedState(shape_, 0.0, unit_trace(h)), party};
}

std::vector<WMixedState> random_mixed(const SampleConfig& config) {
	if (config.kind != SampleKind::mixed_ginibre) throw PreconditionError("random_mixed needs kind mixed_ginibre");
	const Sampler sampler(config);
	std::vector<WMixedState> out;
	out.reserve(config.count);
	for (std::size_t i = 0; i < config.count; ++i) out.push_back(sampler.mixed(i));
	return out;
}

std::vector<PureGeneralizedW> random_pure(const SampleConfig& config) {
	if (config.kind != SampleKind::pure_sphere) throw PreconditionError("random_pure needs kind pure_sphere");
	const Sampler sampler(config);
	std::vector<PureGeneralizedW> out;
	out.reserve(config.count);
	for (std::size_t i = 0; i < config.count; ++i) out.push_back(sampler.pure(i));
	return out;
}

std::vector<StructuredSample> random_structured(const SampleConfig& config) {
	if (config.kind != SampleKind::structured_zero_row) {
		throw PreconditionError("random_structured needs kind structured_zero_row");
	}
	const Sampler sampler(config);
	std::vector<StructuredSample> out;
	out.reserve(config.count);
	for (std::size_t i = 0; i < config.count; ++i) out.push_back(sampler.structured(i));
	return out;
}

} // namespace wmix
