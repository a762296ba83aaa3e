#pragma once

#include <array>
#include <compare>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spinblocks/degrees.hpp"
#include "spinblocks/partition.hpp"

namespace spinblocks {

/// Sym = S_n, Alt = A_n, SymCover = the double cover of S_n, AltCover = its
/// preimage of A_n.
enum class Family { Sym, Alt, SymCover, AltCover };

inline constexpr std::array<Family, 4> all_families{Family::Sym, Family::Alt, Family::SymCover,
                                                    Family::AltCover};

/// "sym", "alt", "sym-cover", "alt-cover".
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

constexpr bool is_cover(Family f) { return f == Family::SymCover || f == Family::AltCover; }
constexpr bool is_alternating(Family f) { return f == Family::Alt || f == Family::AltCover; }

/// Sym for SymCover, Alt for AltCover, identity otherwise.
constexpr Family quotient_family(Family f) {
    return f == Family::SymCover ? Family::Sym : f == Family::AltCover ? Family::Alt : f;
}

/// Smallest supported rank: A_1 is not an index-2 subgroup of S_1, so the
/// alternating families start at n = 2.
constexpr int min_rank(Family f) { return is_alternating(f) ? 2 : 1; }

/// Throws std::invalid_argument when n < min_rank(family).
void require_rank(Family family, int n);

ExactInteger group_order(Family family, int n);
int group_order_val2(Family family, int n);

/// Marks the two conjugate characters (or blocks) that come from one split.
enum class Tag : unsigned char { None, Plus, Minus };

/// "", "+" or "-".
std::string_view tag_symbol(Tag tag);

struct BlockId {
    Family family = Family::Sym;
    int n = 0;
    int k = 0;        ///< staircase index of the 2-core
    int weight = 0;   ///< (n - k(k+1)/2) / 2
    Tag split = Tag::None;  ///< set only on weight-0 blocks of Alt and AltCover

    Partition core() const { return staircase(k); }
    std::string to_string() const;

    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

struct NonSpinLabel {
    Partition lambda;
    Tag tag = Tag::None;
    friend auto operator<=>(const NonSpinLabel&, const NonSpinLabel&) = default;
};

struct SpinLabel {
    BarPartition mu;
    Tag tag = Tag::None;
    friend auto operator<=>(const SpinLabel&, const SpinLabel&) = default;
};

using CharacterLabel = std::variant<NonSpinLabel, SpinLabel>;

bool is_spin(const CharacterLabel& label);
Tag label_tag(const CharacterLabel& label);
/// The partition literal, without the tag.
std::string label_text(const CharacterLabel& label);

struct CharacterRecord {
    CharacterLabel label;
    ExactInteger degree;
    BlockId block;
    int height = 0;

    bool spin() const { return is_spin(label); }
};

/// One block per staircase k with n - k(k+1)/2 even and non-negative, in
/// increasing k; weight-0 blocks of Alt/AltCover appear twice (+ then -).
std::vector<BlockId> blocks_of(Family family, int n);

/// Exponent d of the defect group order 2^d of a weight-w block.
int defect(Family family, int weight);

/// Throws std::invalid_argument when the label is not a valid character
/// label of the family (tag rules, fused-pair representative, spin only on
/// covers).
void validate_label(Family family, const CharacterLabel& label);

/// Block containing the character. Non-spin labels go by the 2-core of the
/// partition; spin labels by the 2-core of dbl(mu). On weight-0 blocks of
/// Alt/AltCover the character's tag picks the block with the same tag.
BlockId assign_block(Family family, const CharacterLabel& label);

/// val2(degree) - (group_order_val2 - defect). Throws std::logic_error when
/// negative, which can only come from a wrong block assignment.
int height(const ExactInteger& degree, const BlockId& block);

/// Full list of Irr(G) with degrees, blocks and heights: non-spin characters
/// first, then spin characters, each in reverse-lexicographic label order
/// with + before -.
std::vector<CharacterRecord> characters_of(Family family, int n);

/// The block of the trivial character.
BlockId principal_block(Family family, int n);

std::vector<CharacterRecord> records_in_block(std::span<const CharacterRecord> records, const BlockId& block);

/// Thread-safe memo of characters_of keyed by (family, n).
class CharacterTableCache {
public:
    using Table = std::vector<CharacterRecord>;

    std::shared_ptr<const Table> get(Family family, int n);

private:
    std::mutex mutex_;
    std::map<std::pair<Family, int>, std::shared_future<std::shared_ptr<const Table>>> tables_;
};

}  // namespace spinblocks
