#pragma once

#include "wmix/state.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wmix {

enum class SampleKind { mixed_ginibre, pure_sphere, structured_zero_row };

std::string to_string(SampleKind kind);
SampleKind parse_sample_kind(std::string_view text);

struct SampleConfig {
	int n_parties = 3;
	int local_dim = 2;
	std::size_t count = 1;
	std::uint64_t seed = 0;
	SampleKind kind = SampleKind::mixed_ginibre;
};

/// A structured sample together with the party whose coherences were removed.
struct StructuredSample {
	WMixedState state;
	Party separated_party;
};

/// Deterministic sample source.
///
/// Sample i is drawn from a std::mt19937_64 seeded with splitmix64(seed, i), so any index
/// can be generated independently and parallel sweeps reproduce serial ones bit for bit.
/// Normal deviates come from std::normal_distribution; bit-identical streams across
/// different standard library implementations are not promised.
class Sampler {
public:
	explicit Sampler(SampleConfig config);

	const SampleConfig& config() const noexcept { return config_; }

	/// Per-sample engine seed.
	std::uint64_t sample_seed(std::size_t index) const noexcept;

	/// coeff = G G^dagger / tr(G G^dagger) for a complex Ginibre matrix G of size N(d-1).
	WMixedState mixed(std::size_t index) const;
	/// Complex Gaussian amplitude vector projected onto the unit sphere.
	PureGeneralizedW pure(std::size_t index) const;
	/// A Ginibre draw whose coherences between one uniformly chosen party and the rest
	/// are removed (block pinching, then renormalized). Separable on that party's cut.
	StructuredSample structured(std::size_t index) const;

private:
	SampleConfig config_;
	SystemShape shape_;
};

/// splitmix64 finalizer applied to seed and index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Stream helpers: samples 0..count-1. Throw PreconditionError on a kind mismatch.
std::vector<WMixedState> random_mixed(const SampleConfig& config);
std::vector<PureGeneralizedW> random_pure(const SampleConfig& config);
std::vector<StructuredSample> random_structured(const SampleConfig& config);

} // namespace wmix
