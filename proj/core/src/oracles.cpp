#include "spinblocks/oracles.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace spinblocks {

namespace {

void check_cap(int size) {
    if (size > config::rim_hook_cap) {
        throw std::domain_error("exhaustive oracle capped at n = " + std::to_string(config::rim_hook_cap));
    }
}

template <class Label, class Moves>
const std::set<Label>& terminals(const Label& start, std::map<Label, std::set<Label>>& memo, Moves&& moves) {
    if (auto it = memo.find(start); it != memo.end()) return it->second;
    std::set<Label> found;
    const auto next = moves(start);
    if (next.empty()) {
        found.insert(start);
    } else {
        for (const auto& child : next) {
            const auto& sub = terminals(child, memo, moves);
            found.insert(sub.begin(), sub.end());
        }
    }
    return memo.emplace(start, std::move(found)).first->second;
}

}  // namespace

std::set<Partition> rim_hook_terminals(const Partition& lambda, int hook_size) {
    check_cap(lambda.size());
    std::map<Partition, std::set<Partition>> memo;
    auto moves = [hook_size](const Partition& p) {
        std::vector<Partition> out;
        for (int row = 0; row < p.length(); ++row) {
            if (auto smaller = remove_rim_hook(p, hook_size, row)) out.push_back(*smaller);
        }
        return out;
    };
    return terminals(lambda, memo, moves);
}

std::set<BarPartition> two_bar_terminals(const BarPartition& mu) {
    check_cap(mu.size());
    std::map<BarPartition, std::set<BarPartition>> memo;
    return terminals(mu, memo, [](const BarPartition& b) { return two_bar_moves(b); });
}

bool PartitionAudit::ok() const {
    return partitions == expected && round_trip && core_is_staircase && quotient_weight && conjugation &&
           core_oracle.value_or(true) && bar_confluence.value_or(true);
}

PartitionAudit audit_partitions(int n) {
    PartitionAudit audit;
    audit.n = n;
    audit.expected = partition_number(n);
    const bool oracles = n <= config::rim_hook_cap;
    if (oracles) {
        audit.core_oracle = true;
        audit.bar_confluence = true;
    }
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (audit.failure.empty()) audit.failure = what;
    };

    const auto partitions = enumerate_partitions(n);
    audit.partitions = partitions.size();
    for (const Partition& lambda : partitions) {
        const std::string name = lambda.to_string();
        const Partition core = two_core(lambda);
        const TwoQuotient quotient = two_quotient(lambda);
        if (from_core_and_quotient(core, quotient) != lambda) fail(audit.round_trip, "round trip fails at " + name);
        if (!staircase_index(core) || two_core(core) != core || two_core(conjugate(lambda)) != core) {
            fail(audit.core_is_staircase, "bad 2-core at " + name);
        }
        if (quotient.size() != weight_of(lambda)) fail(audit.quotient_weight, "quotient size at " + name);
        if (conjugate(conjugate(lambda)) != lambda) fail(audit.conjugation, "conjugation at " + name);
        if (oracles) {
            const auto ends = rim_hook_terminals(lambda);
            if (ends.size() != 1 || *ends.begin() != core) fail(*audit.core_oracle, "rim-hook oracle at " + name);
        }
    }
    if (oracles) {
        for (const BarPartition& mu : enumerate_bar_partitions(n)) {
            const auto ends = two_bar_terminals(mu);
            if (ends.size() != 1 || *ends.begin() != bar_two_core(mu)) {
                fail(*audit.bar_confluence, "2-bar removal is not confluent at " + mu.to_string());
            }
        }
    }
    if (audit.partitions != audit.expected && audit.failure.empty()) audit.failure = "partition count mismatch";
    return audit;
}

}  // namespace spinblocks
