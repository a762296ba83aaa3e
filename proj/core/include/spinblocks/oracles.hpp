#pragma once

// Exhaustive-search oracles used to validate the abacus algorithms. They are
// slow on purpose and refuse inputs above the configured caps.

#include <optional>
#include <set>
#include <string>

#include "spinblocks/config.hpp"
#include "spinblocks/partition.hpp"

namespace spinblocks {

/// Every terminal reachable by removing rim hooks of `hook_size` cells in any
/// order. A confluent rule yields exactly one terminal. Throws
/// std::domain_error when |lambda| exceeds config::rim_hook_cap.
std::set<Partition> rim_hook_terminals(const Partition& lambda, int hook_size = 2);

/// Every terminal reachable by 2-bar moves in any order. Same size cap.
std::set<BarPartition> two_bar_terminals(const BarPartition& mu);

/// Self-check of the partition combinatorics over every partition of n.
/// Oracle-backed fields stay empty above config::rim_hook_cap.
struct PartitionAudit {
    int n = 0;
    std::size_t partitions = 0;
    unsigned long long expected = 0;  ///< p(n) from the pentagonal recurrence
    bool round_trip = true;           ///< core + quotient rebuild the partition
    bool core_is_staircase = true;    ///< also idempotent and conjugation-invariant
    bool quotient_weight = true;      ///< |q0| + |q1| == weight
    bool conjugation = true;          ///< involution
    std::optional<bool> core_oracle;  ///< abacus core == rim-hook terminal, terminal unique
    std::optional<bool> bar_confluence;
    std::string failure;

    bool ok() const;
};

PartitionAudit audit_partitions(int n);

}  // namespace spinblocks
