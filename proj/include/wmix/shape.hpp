#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wmix {

/// Parties are numbered A_1..A_N from the left of the ket string, starting at 1.
using Party = int;

/// Excitation at `position` (counted from the right of the ket string, starting at 1)
/// carrying local level `level` in [1, d-1].
struct ExcitationLabel {
	int position = 1;
	int level = 1;

	friend bool operator==(const ExcitationLabel&, const ExcitationLabel&) = default;
};

/// Number of parties N and local dimension d of a state in the family.
///
/// The compact representation stores one coefficient per excitation label; labels are
/// ordered by position ascending, then level ascending. Party A_i sits at position
/// N + 1 - i, and every index computation goes through `position_of` / `party_of`.
class SystemShape {
public:
	static constexpr int kMaxParties = 64;

	SystemShape(int n_parties, int local_dim = 2);

	int n() const noexcept { return n_; }
	int d() const noexcept { return d_; }
	int levels() const noexcept { return d_ - 1; }
	int label_count() const noexcept { return n_ * (d_ - 1); }

	int position_of(Party party) const;
	Party party_of(int position) const;

	/// Row/column of `label` in the coefficient matrix.
	int label_index(ExcitationLabel label) const;
	ExcitationLabel label_at(int index) const;

	/// Coefficient-matrix indices of all levels excited at `party`.
	std::vector<int> label_indices_of(Party party) const;

	/// d^N, saturating at UINT64_MAX.
	std::uint64_t hilbert_dim() const noexcept;
	/// Stride of party `party`'s digit in the computational basis integer: d^(N - party).
	std::uint64_t digit_weight(Party party) const;

	friend bool operator==(const SystemShape&, const SystemShape&) = default;

private:
	int n_;
	int d_;
};

/// Set of parties, stored as a bitmask (bit i-1 for party A_i).
class PartySet {
public:
	constexpr PartySet() = default;
	PartySet(std::initializer_list<Party> parties);
	explicit PartySet(const std::vector<Party>& parties);

	static constexpr PartySet from_mask(std::uint64_t mask) noexcept {
		PartySet s;
		s.mask_ = mask;
		return s;
	}
	/// {1, ..., n}
	static PartySet all(int n);

	std::uint64_t mask() const noexcept { return mask_; }
	bool empty() const noexcept { return mask_ == 0; }
	int size() const noexcept;
	bool contains(Party p) const noexcept;
	void insert(Party p);

	/// Parties in ascending order.
	std::vector<Party> parties() const;
	PartySet complement(int n) const;
	/// Throws IndexError unless every member lies in [1, n].
	void check_within(int n) const;

	PartySet operator|(PartySet o) const noexcept { return from_mask(mask_ | o.mask_); }
	PartySet operator&(PartySet o) const noexcept { return from_mask(mask_ & o.mask_); }
	friend bool operator==(PartySet, PartySet) = default;
	friend auto operator<=>(PartySet a, PartySet b) noexcept { return a.mask_ <=> b.mask_; }

	/// "1,2,5"
	std::string to_string() const;
	/// Parses "1,2,5"; whitespace tolerated.
	static PartySet parse(std::string_view text);

private:
	std::uint64_t mask_ = 0;
};

/// A split of the N parties into two complementary nonempty sets.
class Bipartition {
public:
	/// `right` is the complement of `left` in [1, n].
	Bipartition(PartySet left, int n);
	Bipartition(PartySet left, PartySet right, int n);

	const PartySet& left() const noexcept { return left_; }
	const PartySet& right() const noexcept { return right_; }
	int n() const noexcept { return n_; }

	Bipartition swapped() const { return Bipartition(right_, left_, n_); }

	/// "1|2,3"
	std::string to_string() const;
	static Bipartition parse(std::string_view text, int n);

	friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
	PartySet left_;
	PartySet right_;
	int n_;
};

/// All 2^(N-1) - 1 bipartitions, each with party A_1 on the left, ordered by left mask.
std::vector<Bipartition> all_bipartitions(int n);

} // namespace wmix
