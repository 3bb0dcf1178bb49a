#include "wmix/shape.hpp"

#include "wmix/errors.hpp"

#include <bit>
#include <charconv>
#include <limits>

namespace wmix {

SystemShape::SystemShape(int n_parties, int local_dim) : n_(n_parties), d_(local_dim) {
	if (n_parties < 2 || n_parties > kMaxParties) {
		throw ShapeError("party count must lie in [2, " + std::to_string(kMaxParties) + "], got " +
		                 std::to_string(n_parties));
	}
	if (local_dim < 2) {
		throw ShapeError("local dimension must be at least 2, got " + std::to_string(local_dim));
	}
}

int SystemShape::position_of(Party party) const {
	if (party < 1 || party > n_) {
		throw IndexError("party " + std::to_string(party) + " outside [1, " + std::to_string(n_) + "]");
	}
	return n_ + 1 - party;
}

Party SystemShape::party_of(int position) const {
	if (position < 1 || position > n_) {
		throw IndexError("position " + std::to_string(position) + " outside [1, " + std::to_string(n_) + "]");
	}
	return n_ + 1 - position;
}

int SystemShape::label_index(ExcitationLabel label) const {
	if (label.position < 1 || label.position > n_ || label.level < 1 || label.level > levels()) {
		throw IndexError("excitation label (" + std::to_string(label.position) + ", " +
		                 std::to_string(label.level) + ") outside the shape");
	}
	return (label.position - 1) * levels() + (label.level - 1);
}

ExcitationLabel SystemShape::label_at(int index) const {
	if (index < 0 || index >= label_count()) {
		throw IndexError("label index " + std::to_string(index) + " out of range");
	}
	return ExcitationLabel{index / levels() + 1, index % levels() + 1};
}

std::vector<int> SystemShape::label_indices_of(Party party) const {
	const int first = (position_of(party) - 1) * levels();
	std::vector<int> out(static_cast<std::size_t>(levels()));
	for (int j = 0; j < levels(); ++j) out[static_cast<std::size_t>(j)] = first + j;
	return out;
}

std::uint64_t SystemShape::hilbert_dim() const noexcept {
	constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
	std::uint64_t dim = 1;
	for (int i = 0; i < n_; ++i) {
		if (dim > kMax / static_cast<std::uint64_t>(d_)) return kMax;
		dim *= static_cast<std::uint64_t>(d_);
	}
	return dim;
}

std::uint64_t SystemShape::digit_weight(Party party) const {
	const int exponent = position_of(party) - 1;
	std::uint64_t w = 1;
	for (int i = 0; i < exponent; ++i) w *= static_cast<std::uint64_t>(d_);
	return w;
}

PartySet::PartySet(std::initializer_list<Party> parties) {
	for (Party p : parties) insert(p);
}

PartySet::PartySet(const std::vector<Party>& parties) {
	for (Party p : parties) insert(p);
}

PartySet PartySet::all(int n) {
	if (n < 0 || n > SystemShape::kMaxParties) throw IndexError("party count out of range");
	return from_mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

int PartySet::size() const noexcept { return std::popcount(mask_); }

bool PartySet::contains(Party p) const noexcept {
	return p >= 1 && p <= 64 && ((mask_ >> (p - 1)) & 1U) != 0;
}

void PartySet::insert(Party p) {
	if (p < 1 || p > SystemShape::kMaxParties) throw IndexError("party " + std::to_string(p) + " out of range");
	if (contains(p)) throw IndexError("party " + std::to_string(p) + " listed twice");
	mask_ |= std::uint64_t{1} << (p - 1);
}

std::vector<Party> PartySet::parties() const {
	std::vector<Party> out;
	out.reserve(static_cast<std::size_t>(size()));
	for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
	return out;
}

PartySet PartySet::complement(int n) const { return from_mask(all(n).mask_ & ~mask_); }

void PartySet::check_within(int n) const {
	if ((mask_ & ~all(n).mask_) != 0) {
		throw IndexError("party set {" + to_string() + "} exceeds [1, " + std::to_string(n) + "]");
	}
}

std::string PartySet::to_string() const {
	std::string out;
	for (Party p : parties()) {
		if (!out.empty()) out += ',';
		out += std::to_string(p);
	}
	return out;
}

PartySet PartySet::parse(std::string_view text) {
	PartySet s;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find(',', pos);
		if (end == std::string_view::npos) end = text.size();
		std::string_view tok = text.substr(pos, end - pos);
		while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
		while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
		int value = 0;
		auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
		if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
			throw IndexError("malformed party list '" + std::string(text) + "'");
		}
		s.insert(value);
		pos = end + 1;
	}
	return s;
}

Bipartition::Bipartition(PartySet left, int n) : Bipartition(left, left.complement(n), n) {}

Bipartition::Bipartition(PartySet left, PartySet right, int n) : left_(left), right_(right), n_(n) {
	left.check_within(n);
	right.check_within(n);
	if (left.empty() || right.empty()) throw IndexError("both sides of a bipartition must be nonempty");
	if (!(left & right).empty()) throw IndexError("bipartition sides overlap");
	if ((left | right) != PartySet::all(n)) throw IndexError("bipartition does not cover every party");
}

std::string Bipartition::to_string() const { return left_.to_string() + "|" + right_.to_string(); }

Bipartition Bipartition::parse(std::string_view text, int n) {
	const auto bar = text.find('|');
	if (bar == std::string_view::npos) {
		return Bipartition(PartySet::parse(text), n);
	}
	if (text.find('|', bar + 1) != std::string_view::npos) {
		throw IndexError("a cut has exactly two sides: '" + std::string(text) + "'");
	}
	return Bipartition(PartySet::parse(text.substr(0, bar)), PartySet::parse(text.substr(bar + 1)), n);
}

std::vector<Bipartition> all_bipartitions(int n) {
	if (n < 2 || n > SystemShape::kMaxParties - 1) throw IndexError("cannot enumerate cuts for this party count");
	std::vector<Bipartition> out;
	const std::uint64_t rest = (std::uint64_t{1} << (n - 1)) - 1;
	for (std::uint64_t sub = 0; sub < rest; ++sub) {
		out.emplace_back(PartySet::from_mask(1U | (sub << 1)), n);
	}
	return out;
}

} // namespace wmix
