#include "spinblocks/am_verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spinblocks {

std::uint64_t sylow_linear_count(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("sylow_linear_count needs an even m >= 2");
    int exponent = 0;
    for (unsigned bits = static_cast<unsigned>(m); bits != 0; bits &= bits - 1) {
        exponent += std::countr_zero(bits);
    }
    if (exponent >= 64) throw std::overflow_error("sylow_linear_count overflows 64 bits");
    return std::uint64_t{1} << exponent;
}

int local_spin_hz(Family family, int weight) {
    if (!is_cover(family)) throw std::invalid_argument("local_spin_hz is defined for the double covers only");
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    if (weight == 0) return 1;
    if (weight == 1) return family == Family::SymCover ? 2 : 1;
    return 0;
}

std::uint64_t local_nonspin_hz(Family family, int weight) {
    if (is_alternating(family)) {
        throw std::invalid_argument("non-spin local counts for alternating families are not modelled");
    }
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    return weight == 0 ? 1 : sylow_linear_count(2 * weight);
}

LocalCount local_count(Family family, int weight) {
    LocalCount out;
    out.family = family;
    out.weight = weight;
    if (is_alternating(family)) {
        out.source = "deferred: non-spin local side not modelled";
    } else {
        out.nonspin_hz = local_nonspin_hz(family, weight);
        out.source = "linear characters of the Sylow normalizer";
    }
    if (is_cover(family)) out.spin_hz = local_spin_hz(family, weight);
    return out;
}

std::vector<BlockCounts> global_block_counts(Family family, int n, CharacterTableCache& tables) {
    const auto table = tables.get(family, n);
    std::vector<BlockCounts> out;
    for (const BlockId& block : blocks_of(family, n)) {
        BlockCounts counts{block};
        for (const auto& r : *table) {
            if (r.block != block) continue;
            ++counts.num_chars;
            if (r.height == 0) {
                ++counts.hz;
                if (r.spin()) ++counts.spin_hz;
            }
        }
        out.push_back(counts);
    }
    return out;
}

bool AMReport::verdict() const {
    return std::all_of(rows.begin(), rows.end(), [](const AMRow& r) { return r.verdict; });
}

namespace {

// Height-zero count of the principal block at rank 2w. Rank 0 stands for the
// trivial group (Alt) or the centre of order 2 (AltCover).
int reference_hz(Family family, int weight, CharacterTableCache& tables) {
    if (weight == 0) return is_cover(family) ? 2 : 1;
    const BlockId principal = principal_block(family, 2 * weight);
    for (const auto& counts : global_block_counts(family, 2 * weight, tables)) {
        if (counts.block == principal) return counts.hz;
    }
    throw std::logic_error("principal block missing from its own census");
}

}  // namespace

AMReport am_check(Family family, int n, CharacterTableCache& tables) {
    AMReport report;
    report.family = family;
    report.n = n;
    for (const BlockCounts& counts : global_block_counts(family, n, tables)) {
        const int w = counts.block.weight;
        const LocalCount local = local_count(family, w);

        AMRow row;
        row.block = counts.block;
        row.defect = defect(family, w);
        row.num_chars = counts.num_chars;
        row.hz = counts.hz;
        row.spin_hz = counts.spin_hz;
        row.local_nonspin_hz = local.nonspin_hz;
        row.local_spin_hz = local.spin_hz;
        row.local_source = local.source;

        auto check = [&](bool ok, const std::string& what) {
            if (!ok && row.note.empty()) row.note = what;
        };
        check(row.spin_hz == row.local_spin_hz,
              "spin height-zero count " + std::to_string(row.spin_hz) + " != local " +
                  std::to_string(row.local_spin_hz));
        if (local.nonspin_hz) {
            const auto expected = *local.nonspin_hz + static_cast<std::uint64_t>(local.spin_hz);
            check(static_cast<std::uint64_t>(row.hz) == expected,
                  "height-zero count " + std::to_string(row.hz) + " != local " + std::to_string(expected));
        } else {
            row.reference_hz = reference_hz(family, w, tables);
            check(row.hz == *row.reference_hz,
                  "height-zero count " + std::to_string(row.hz) + " != principal block of rank " +
                      std::to_string(2 * w) + " (" + std::to_string(*row.reference_hz) + ")");
        }
        row.verdict = row.note.empty();
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace spinblocks
