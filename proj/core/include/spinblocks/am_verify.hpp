#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinblocks/blocks.hpp"

namespace spinblocks {

/// Number of linear characters of a Sylow 2-subgroup of S_m, m even:
/// 2^(a_1+...+a_r) where m = 2^a_1 + ... + 2^a_r. Throws for odd or
/// non-positive m.
std::uint64_t sylow_linear_count(int m);

/// Height-zero spin characters of the Brauer correspondent of a weight-w
/// block: (1, 2, 0) for SymCover and (1, 1, 0) for AltCover by weight
/// (0, 1, >=2).
int local_spin_hz(Family family, int weight);

/// Height-zero non-spin characters of the Brauer correspondent, for Sym and
/// SymCover: 1 at weight 0, sylow_linear_count(2w) otherwise.
std::uint64_t local_nonspin_hz(Family family, int weight);

struct LocalCount {
    Family family = Family::Sym;
    int weight = 0;
    std::optional<std::uint64_t> nonspin_hz;  ///< empty for Alt/AltCover
    int spin_hz = 0;
    std::string source;
};

LocalCount local_count(Family family, int weight);

struct BlockCounts {
    BlockId block;
    int num_chars = 0;
    int hz = 0;
    int spin_hz = 0;
};

/// Height-zero census per block, in blocks_of order.
std::vector<BlockCounts> global_block_counts(Family family, int n, CharacterTableCache& tables);

struct AMRow {
    BlockId block;
    int defect = 0;
    int num_chars = 0;
    int hz = 0;
    int spin_hz = 0;
    std::optional<std::uint64_t> local_nonspin_hz;
    int local_spin_hz = 0;
    /// Height-zero count of the principal block at rank 2w (Alt, AltCover).
    std::optional<int> reference_hz;
    std::string local_source;
    bool verdict = false;
    std::string note;  ///< first failed comparison, empty when the row passes
};

struct AMReport {
    Family family = Family::Sym;
    int n = 0;
    std::vector<AMRow> rows;

    bool verdict() const;
};

/// Compares global height-zero counts with the local closed forms block by
/// block. For Alt/AltCover the non-spin local side is reported as deferred
/// and the total is compared with the weight-2w principal block instead.
AMReport am_check(Family family, int n, CharacterTableCache& tables);

}  // namespace spinblocks
