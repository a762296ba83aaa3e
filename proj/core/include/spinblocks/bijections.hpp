#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinblocks/blocks.hpp"

namespace spinblocks {

/// The partition of 2w with empty 2-core and the same 2-quotient as lambda.
Partition enguehard_image(const Partition& lambda);

/// Coarse character data that the height-preserving bijections respect.
struct ProfileKey {
    int height = 0;
    bool spin = false;
    int sign = 0;          ///< bar-partition sign for spin characters, 0 otherwise
    int multiplicity = 1;  ///< characters sharing the label (2 when it splits)

    friend auto operator<=>(const ProfileKey&, const ProfileKey&) = default;
};

using HeightProfile = std::map<ProfileKey, int>;

/// Profile of the records whose spin flag equals `spin`.
HeightProfile height_profile(std::span<const CharacterRecord> records, bool spin);

/// Human-readable first difference between two profiles, empty when equal.
std::string profile_difference(const HeightProfile& lhs, const HeightProfile& rhs);

/// Principal block of the same family at rank 2w. Throws std::invalid_argument
/// for weight-0 blocks.
BlockId reference_block(const BlockId& block);

struct NonSpinComparison {
    BlockId block;
    BlockId reference;
    bool equivariant = true;        ///< image(conj(l)) == conj(image(l)) on the block
    bool bijective = true;          ///< labels map one-to-one onto the reference block
    bool heights_preserved = true;  ///< every matched pair has equal height
    HeightProfile block_profile;
    HeightProfile reference_profile;
    /// (label in the block, label of its image in the reference block)
    std::vector<std::pair<NonSpinLabel, NonSpinLabel>> matching;
    std::string mismatch;

    bool ok() const {
        return equivariant && bijective && heights_preserved && block_profile == reference_profile;
    }
};

/// Pushes the non-spin characters of a weight w >= 1 block through the
/// same-quotient map onto the principal block of rank 2w and compares
/// heights character by character.
NonSpinComparison verify_nonspin_bijection(const BlockId& block, CharacterTableCache& tables);

struct SpinComparison {
    BlockId block;
    BlockId reference;
    HeightProfile block_profile;
    HeightProfile reference_profile;
    /// Canonical matching: both sides sorted by (profile key, label).
    std::vector<std::pair<SpinLabel, SpinLabel>> matching;
    std::string mismatch;

    bool ok() const { return mismatch.empty(); }
};

/// Compares the spin characters of a weight w >= 1 block of a double cover
/// with those of the principal block of rank 2w, keyed on (height, sign,
/// multiplicity).
SpinComparison verify_spin_bijection(const BlockId& block, CharacterTableCache& tables);

}  // namespace spinblocks
