#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinblocks {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i, or 0 past the last row.
    int operator[](int i) const noexcept {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    /// `[3,2]`, or `[]` for the empty partition.
    std::string to_string() const;
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A strictly decreasing sequence of positive integers (a partition without
/// repeated parts).
class BarPartition {
public:
    BarPartition() = default;
    explicit BarPartition(std::vector<int> parts);
    BarPartition(std::initializer_list<int> parts) : BarPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// +1 when size - length is even, -1 otherwise.
    int sign() const noexcept { return (size_ - length()) % 2 == 0 ? 1 : -1; }
    bool is_even() const noexcept { return sign() == 1; }

    Partition as_partition() const { return Partition(parts_); }

    friend bool operator==(const BarPartition& a, const BarPartition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const BarPartition& a, const BarPartition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;
    static BarPartition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Finite set of distinct non-negative bead positions, stored in decreasing
/// order. With b beads it encodes the partition (beta_1-(b-1), beta_2-(b-2), ...).
class BetaSet {
public:
    explicit BetaSet(std::vector<int> beads);

    /// Throws std::invalid_argument if bead_count < lambda.length().
    static BetaSet of(const Partition& lambda, int bead_count);

    const std::vector<int>& beads() const noexcept { return beads_; }
    int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
    bool contains(int position) const;

    Partition to_partition() const;

private:
    std::vector<int> beads_;
};

/// Runner-0 and runner-1 components of the 2-quotient.
struct TwoQuotient {
    Partition q0;
    Partition q1;

    int size() const noexcept { return q0.size() + q1.size(); }
    friend bool operator==(const TwoQuotient&, const TwoQuotient&) = default;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

/// Hook lengths of every cell, in decreasing order.
std::vector<int> hook_lengths(const Partition& lambda);

/// Smallest even bead count that can encode lambda. All quotient
/// computations use this count so that the runner order is fixed.
int even_bead_count(const Partition& lambda);

Partition two_core(const Partition& lambda);
int weight_of(const Partition& lambda);
TwoQuotient two_quotient(const Partition& lambda);

/// Inverse of (two_core, two_quotient). Throws std::invalid_argument when
/// `core` is not a staircase.
Partition from_core_and_quotient(const Partition& core, const TwoQuotient& quotient);

/// Removes the rim hook of `hook_size` cells whose top cell ends row
/// `start_row`, working directly on the Young diagram. std::nullopt when no
/// such rim hook exists.
std::optional<Partition> remove_rim_hook(const Partition& lambda, int hook_size, int start_row);

/// (k, k-1, ..., 1); the empty partition for k = 0.
Partition staircase(int k);
std::optional<int> staircase_index(const Partition& lambda);

/// Splits every part a into ceil(a/2) and floor(a/2), drops zeros and sorts.
Partition dbl(const BarPartition& mu);

/// Every bar partition reachable from mu by one 2-bar move: subtract 2 from a
/// part when the result is positive and not already a part, or delete a part
/// equal to 2.
std::vector<BarPartition> two_bar_moves(const BarPartition& mu);

/// Terminal of repeated 2-bar removal.
BarPartition bar_two_core(const BarPartition& mu);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
/// All bar partitions of n in reverse-lexicographic order.
std::vector<BarPartition> enumerate_bar_partitions(int n);

/// p(n) via Euler's pentagonal recurrence (exact up to n = 405).
unsigned long long partition_number(int n);

/// Orders partitions as they are enumerated: (4) before (3,1) before (2,2).
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
    bool operator()(const BarPartition& a, const BarPartition& b) const { return a > b; }
};

}  // namespace spinblocks
