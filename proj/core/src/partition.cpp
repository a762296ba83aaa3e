#include "spinblocks/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinblocks {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ']';
    return out;
}

std::vector<int> parse_parts(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("partition literal must look like [3,2]: " + std::string(text));
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto field = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            throw std::invalid_argument("bad part in partition literal: " + std::string(field));
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return parts;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return join_parts(parts_); }

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("bar partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1]) {
            throw std::invalid_argument("bar partition parts must be strictly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string BarPartition::to_string() const { return join_parts(parts_); }

BarPartition BarPartition::parse(std::string_view text) { return BarPartition(parse_parts(text)); }

BetaSet::BetaSet(std::vector<int> beads) : beads_(std::move(beads)) {
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
    if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end()) {
        throw std::invalid_argument("beta-set beads must be distinct");
    }
    if (!beads_.empty() && beads_.back() < 0) {
        throw std::invalid_argument("beta-set beads must be non-negative");
    }
}

BetaSet BetaSet::of(const Partition& lambda, int bead_count) {
    if (bead_count < lambda.length()) {
        throw std::invalid_argument("bead count smaller than the number of parts");
    }
    std::vector<int> beads(static_cast<std::size_t>(bead_count));
    for (int i = 0; i < bead_count; ++i) {
        beads[static_cast<std::size_t>(i)] = lambda[i] + (bead_count - 1 - i);
    }
    return BetaSet(std::move(beads));
}

bool BetaSet::contains(int position) const {
    return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

Partition BetaSet::to_partition() const {
    std::vector<int> parts;
    const int b = bead_count();
    for (int i = 0; i < b; ++i) {
        int part = beads_[static_cast<std::size_t>(i)] - (b - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts()) {
        for (int c = 0; c < row; ++c) ++parts[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(parts));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition transposed = conjugate(lambda);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            hooks.push_back((lambda[r] - c - 1) + (transposed[c] - r - 1) + 1);
        }
    }
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

int even_bead_count(const Partition& lambda) { return lambda.length() + lambda.length() % 2; }

namespace {

// Positions on runner r (bead at 2x + r has runner position x), decreasing.
std::vector<int> runner_positions(const BetaSet& beta, int runner) {
    std::vector<int> out;
    for (int bead : beta.beads()) {
        if (bead % 2 == runner) out.push_back(bead / 2);
    }
    return out;
}

BetaSet merge_runners(const std::vector<int>& runner0, const std::vector<int>& runner1) {
    std::vector<int> beads;
    beads.reserve(runner0.size() + runner1.size());
    for (int x : runner0) beads.push_back(2 * x);
    for (int x : runner1) beads.push_back(2 * x + 1);
    return BetaSet(std::move(beads));
}

std::vector<int> packed(int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = count - 1 - i;
    return out;
}

}  // namespace

Partition two_core(const Partition& lambda) {
    const BetaSet beta = BetaSet::of(lambda, even_bead_count(lambda));
    const auto c0 = static_cast<int>(runner_positions(beta, 0).size());
    const auto c1 = static_cast<int>(runner_positions(beta, 1).size());
    return merge_runners(packed(c0), packed(c1)).to_partition();
}

int weight_of(const Partition& lambda) { return (lambda.size() - two_core(lambda).size()) / 2; }

TwoQuotient two_quotient(const Partition& lambda) {
    const BetaSet beta = BetaSet::of(lambda, even_bead_count(lambda));
    return {BetaSet(runner_positions(beta, 0)).to_partition(),
            BetaSet(runner_positions(beta, 1)).to_partition()};
}

Partition from_core_and_quotient(const Partition& core, const TwoQuotient& quotient) {
    if (!staircase_index(core)) {
        throw std::invalid_argument("2-core must be a staircase, got " + core.to_string());
    }
    const BetaSet core_beta = BetaSet::of(core, even_bead_count(core));
    const auto c0 = static_cast<int>(runner_positions(core_beta, 0).size());
    const auto c1 = static_cast<int>(runner_positions(core_beta, 1).size());
    // Adding one bead to each runner keeps the bead count even and leaves
    // the core and the quotient unchanged.
    const int extra = std::max({0, quotient.q0.length() - c0, quotient.q1.length() - c1});
    return merge_runners(BetaSet::of(quotient.q0, c0 + extra).beads(),
                         BetaSet::of(quotient.q1, c1 + extra).beads())
        .to_partition();
}

std::optional<Partition> remove_rim_hook(const Partition& lambda, int hook_size, int start_row) {
    if (hook_size < 1 || start_row < 0 || start_row >= lambda.length()) return std::nullopt;
    int used = 0;
    for (int bottom = start_row; lambda[bottom] > 0; ++bottom) {
        const int rest = hook_size - used;
        if (rest <= 0) break;
        if (rest <= lambda[bottom] - lambda[bottom + 1]) {
            std::vector<int> parts = lambda.parts();
            for (int r = start_row; r < bottom; ++r) {
                parts[static_cast<std::size_t>(r)] = lambda[r + 1] - 1;
            }
            parts[static_cast<std::size_t>(bottom)] = lambda[bottom] - rest;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            return Partition(std::move(parts));
        }
        // The strip covers row `bottom` from column lambda[bottom+1]-1 onward.
        used += lambda[bottom] - lambda[bottom + 1] + 1;
    }
    return std::nullopt;
}

Partition staircase(int k) {
    if (k < 0) throw std::invalid_argument("staircase index must be non-negative");
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

std::optional<int> staircase_index(const Partition& lambda) {
    const int k = lambda.length();
    for (int i = 0; i < k; ++i) {
        if (lambda[i] != k - i) return std::nullopt;
    }
    return k;
}

Partition dbl(const BarPartition& mu) {
    std::vector<int> parts;
    for (int a : mu.parts()) {
        parts.push_back((a + 1) / 2);
        if (a / 2 > 0) parts.push_back(a / 2);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<BarPartition> two_bar_moves(const BarPartition& mu) {
    const auto& parts = mu.parts();
    std::vector<BarPartition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int a = parts[i];
        std::vector<int> next = parts;
        if (a == 2) {
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        } else if (a >= 3 && std::find(parts.begin(), parts.end(), a - 2) == parts.end()) {
            next[i] = a - 2;
            std::sort(next.begin(), next.end(), std::greater<>());
        } else {
            continue;
        }
        out.emplace_back(std::move(next));
    }
    return out;
}

BarPartition bar_two_core(const BarPartition& mu) {
    BarPartition current = mu;
    for (auto moves = two_bar_moves(current); !moves.empty(); moves = two_bar_moves(current)) {
        current = moves.front();
    }
    return current;
}

namespace {

template <class Emit>
void generate(int remaining, int max_part, bool strict, std::vector<int>& prefix, Emit&& emit) {
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, strict ? part - 1 : part, strict, prefix, emit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, false, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

std::vector<BarPartition> enumerate_bar_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<BarPartition> out;
    std::vector<int> prefix;
    generate(n, n, true, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

unsigned long long partition_number(int n) {
    if (n < 0) return 0;
    if (n > 405) throw std::out_of_range("partition_number overflows 64 bits beyond n = 405");
    std::vector<unsigned long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // Alternating pairs (+,+,-,-,...) over generalized pentagonal numbers.
        unsigned long long plus = 0;
        unsigned long long minus = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            auto& acc = (k % 2 == 1) ? plus : minus;
            acc += p[static_cast<std::size_t>(m - g1)];
            const int g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) acc += p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = plus - minus;
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace spinblocks
