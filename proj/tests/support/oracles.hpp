#pragma once

// Brute-force reference implementations used only by the tests. None of
// them goes through the abacus, the hook formula or Schur's product formula.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "spinblocks/partition.hpp"

namespace oracle {

using Cells = std::set<std::pair<int, int>>;

inline Cells cells_of(const spinblocks::Partition& lambda) {
    Cells cells;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) cells.emplace(r, c);
    }
    return cells;
}

inline spinblocks::Partition partition_of(const Cells& cells) {
    std::map<int, int> rows;
    for (auto [r, c] : cells) rows[r] = std::max(rows[r], c + 1);
    std::vector<int> parts;
    for (auto [r, len] : rows) parts.push_back(len);
    return spinblocks::Partition(parts);
}

/// Transposes the diagram cell by cell.
inline spinblocks::Partition transpose(const spinblocks::Partition& lambda) {
    Cells t;
    for (auto [r, c] : cells_of(lambda)) t.emplace(c, r);
    return partition_of(t);
}

/// arm + leg + 1 for each cell, counted by walking the diagram.
inline std::vector<int> hooks_by_cells(const spinblocks::Partition& lambda) {
    const Cells cells = cells_of(lambda);
    std::vector<int> hooks;
    for (auto [r, c] : cells) {
        int arm = 0;
        while (cells.contains({r, c + arm + 1})) ++arm;
        int leg = 0;
        while (cells.contains({r + leg + 1, c})) ++leg;
        hooks.push_back(arm + leg + 1);
    }
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

/// Standard Young tableaux counted by trying every filling of the cells
/// with a permutation of 1..n. Only for n <= 8.
inline std::uint64_t syt_by_permutations(const spinblocks::Partition& lambda) {
    const Cells cell_set = cells_of(lambda);
    const std::vector<std::pair<int, int>> cells(cell_set.begin(), cell_set.end());
    std::vector<int> fill(cells.size());
    std::iota(fill.begin(), fill.end(), 1);
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < cells.size() && ok; ++i) {
            auto [r, c] = cells[i];
            if (auto it = index.find({r, c + 1}); it != index.end() && fill[it->second] < fill[i]) ok = false;
            if (auto it = index.find({r + 1, c}); it != index.end() && fill[it->second] < fill[i]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

/// Standard shifted tableaux of a strict partition (row i starts at column
/// i), by removing the largest entry from every shifted corner.
inline std::uint64_t shifted_syt(std::vector<int> rows) {
    static std::map<std::vector<int>, std::uint64_t> memo;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (rows.empty()) return 1;
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // Row i ends at column i + rows[i] - 1; removable when row i+1 ends
        // strictly left of that column.
        const bool corner = i + 1 == rows.size() || rows[i + 1] + 1 < rows[i];
        if (!corner) continue;
        auto next = rows;
        --next[i];
        total += shifted_syt(next);
    }
    memo.emplace(rows, total);
    return total;
}

/// 2-adic valuation of n! by factoring every term.
inline int val2_factorial_by_terms(int n) {
    int total = 0;
    for (int k = 2; k <= n; ++k) {
        for (int x = k; x % 2 == 0; x /= 2) ++total;
    }
    return total;
}

/// p(n) and the strict partition count by the coin-change recurrence.
inline std::vector<std::uint64_t> partition_counts(int max_n, bool strict) {
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(max_n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= max_n; ++part) {
        if (strict) {
            for (int n = max_n; n >= part; --n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
        } else {
            for (int n = part; n <= max_n; ++n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
        }
    }
    return ways;
}

/// Permutations of {0..m-1} as image vectors.
using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

inline Perm inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return out;
}

inline std::set<Perm> closure(const std::vector<Perm>& generators, int m) {
    Perm identity(static_cast<std::size_t>(m));
    std::iota(identity.begin(), identity.end(), 0);
    std::set<Perm> group{identity};
    std::vector<Perm> frontier{identity};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier) {
            for (const auto& s : generators) {
                Perm h = compose(s, g);
                if (group.insert(h).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    return group;
}

/// Sylow 2-subgroup of S_m built from block transpositions on each binary
/// digit of m (products of iterated wreath products of Z/2).
inline std::set<Perm> sylow2_of_symmetric(int m) {
    std::vector<Perm> gens;
    int offset = 0;
    for (int bit = 30; bit >= 0; --bit) {
        const int size = 1 << bit;
        if ((m & size) == 0) continue;
        // Half swaps on the leading sub-blocks; conjugation by the larger
        // swaps moves them onto every other aligned sub-block.
        for (int len = 2; len <= size; len *= 2) {
            Perm p(static_cast<std::size_t>(m));
            std::iota(p.begin(), p.end(), 0);
            for (int i = 0; i < len / 2; ++i) std::swap(p[static_cast<std::size_t>(offset + i)],
                                                        p[static_cast<std::size_t>(offset + i + len / 2)]);
            gens.push_back(p);
        }
        offset += size;
    }
    return closure(gens, m);
}

/// |P / [P, P]|, i.e. the number of linear characters of P.
inline std::size_t abelianization_order(const std::set<Perm>& group, int m) {
    std::vector<Perm> commutators;
    for (const auto& a : group) {
        for (const auto& b : group) {
            commutators.push_back(compose(compose(inverse(a), inverse(b)), compose(a, b)));
        }
    }
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    return group.size() / closure(commutators, m).size();
}

}  // namespace oracle
