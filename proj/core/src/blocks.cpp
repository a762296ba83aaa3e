#include "spinblocks/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinblocks {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Sym: return "sym";
        case Family::Alt: return "alt";
        case Family::SymCover: return "sym-cover";
        case Family::AltCover: return "alt-cover";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : all_families) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

void require_rank(Family family, int n) {
    if (n < min_rank(family)) {
        throw std::invalid_argument(std::string(family_name(family)) + " needs n >= " +
                                    std::to_string(min_rank(family)));
    }
}

ExactInteger group_order(Family family, int n) {
    require_rank(family, n);
    ExactInteger order = factorial(n);
    if (is_alternating(family)) order /= 2;
    if (is_cover(family)) order *= 2;
    return order;
}

int group_order_val2(Family family, int n) {
    require_rank(family, n);
    return val2_factorial(n) - (is_alternating(family) ? 1 : 0) + (is_cover(family) ? 1 : 0);
}

std::string_view tag_symbol(Tag tag) {
    switch (tag) {
        case Tag::Plus: return "+";
        case Tag::Minus: return "-";
        case Tag::None: break;
    }
    return "";
}

std::string BlockId::to_string() const {
    std::string out(family_name(family));
    out += " n=" + std::to_string(n) + " core=" + core().to_string();
    out += tag_symbol(split);
    out += " w=" + std::to_string(weight);
    return out;
}

bool is_spin(const CharacterLabel& label) { return std::holds_alternative<SpinLabel>(label); }

Tag label_tag(const CharacterLabel& label) {
    return std::visit([](const auto& l) { return l.tag; }, label);
}

std::string label_text(const CharacterLabel& label) {
    if (const auto* ns = std::get_if<NonSpinLabel>(&label)) return ns->lambda.to_string();
    return std::get<SpinLabel>(label).mu.to_string();
}

std::vector<BlockId> blocks_of(Family family, int n) {
    require_rank(family, n);
    std::vector<BlockId> out;
    for (int k = 0; k * (k + 1) / 2 <= n; ++k) {
        const int rest = n - k * (k + 1) / 2;
        if (rest % 2 != 0) continue;
        const int w = rest / 2;
        if (is_alternating(family) && w == 0) {
            out.push_back({family, n, k, w, Tag::Plus});
            out.push_back({family, n, k, w, Tag::Minus});
        } else {
            out.push_back({family, n, k, w, Tag::None});
        }
    }
    return out;
}

int defect(Family family, int weight) {
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    const int sylow = val2_factorial(2 * weight);
    switch (family) {
        case Family::Sym: return sylow;
        case Family::Alt: return weight >= 1 ? sylow - 1 : 0;
        case Family::SymCover: return sylow + 1;
        case Family::AltCover: return weight >= 1 ? sylow : 1;
    }
    return 0;
}

void validate_label(Family family, const CharacterLabel& label) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(std::string(family_name(family)) + " label " + label_text(label) +
                                    std::string(tag_symbol(label_tag(label))) + ": " + why);
    };
    if (const auto* ns = std::get_if<NonSpinLabel>(&label)) {
        const Partition conj = conjugate(ns->lambda);
        if (is_alternating(family)) {
            const bool self = conj == ns->lambda;
            if (self != (ns->tag != Tag::None)) fail("tag must be present exactly for self-conjugate partitions");
            if (!self && ns->lambda < conj) fail("fused pair must be labelled by its larger partition");
        } else if (ns->tag != Tag::None) {
            fail("non-spin characters of this family are never split");
        }
        return;
    }
    const auto& spin = std::get<SpinLabel>(label);
    if (!is_cover(family)) fail("spin characters exist only on the double covers");
    const bool split = family == Family::SymCover ? !spin.mu.is_even() : spin.mu.is_even();
    if (split != (spin.tag != Tag::None)) fail("tag does not match the bar partition sign");
}

BlockId assign_block(Family family, const CharacterLabel& label) {
    validate_label(family, label);
    Partition source;
    int n = 0;
    if (const auto* ns = std::get_if<NonSpinLabel>(&label)) {
        source = ns->lambda;
        n = ns->lambda.size();
    } else {
        const auto& mu = std::get<SpinLabel>(label).mu;
        source = dbl(mu);
        n = mu.size();
    }
    require_rank(family, n);
    const Partition core = two_core(source);
    BlockId block{family, n, *staircase_index(core), (n - core.size()) / 2, Tag::None};
    if (is_alternating(family) && block.weight == 0) {
        if (label_tag(label) == Tag::None) {
            throw std::logic_error("unsplit character " + label_text(label) + " landed in a weight-0 block of " +
                                   std::string(family_name(family)));
        }
        block.split = label_tag(label);
    }
    return block;
}

int height(const ExactInteger& degree, const BlockId& block) {
    const int h = val2(degree) - (group_order_val2(block.family, block.n) - defect(block.family, block.weight));
    if (h < 0) {
        throw std::logic_error("negative height " + std::to_string(h) + " in block " + block.to_string());
    }
    return h;
}

std::vector<CharacterRecord> characters_of(Family family, int n) {
    require_rank(family, n);
    std::vector<CharacterRecord> out;
    auto emit = [&](CharacterLabel label, const ExactInteger& degree) {
        BlockId block = assign_block(family, label);
        const int h = height(degree, block);
        out.push_back({std::move(label), degree, block, h});
    };

    for (const Partition& lambda : enumerate_partitions(n)) {
        if (!is_alternating(family)) {
            emit(NonSpinLabel{lambda, Tag::None}, hook_degree(lambda));
            continue;
        }
        const Partition conj = conjugate(lambda);
        if (conj == lambda) {
            const ExactInteger half = hook_degree(lambda) / 2;
            emit(NonSpinLabel{lambda, Tag::Plus}, half);
            emit(NonSpinLabel{lambda, Tag::Minus}, half);
        } else if (lambda > conj) {
            emit(NonSpinLabel{lambda, Tag::None}, hook_degree(lambda));
        }
    }

    if (!is_cover(family)) return out;
    for (const BarPartition& mu : enumerate_bar_partitions(n)) {
        const ExactInteger degree = spin_degree(mu);
        if (family == Family::SymCover) {
            if (mu.is_even()) {
                emit(SpinLabel{mu, Tag::None}, degree);
            } else {
                emit(SpinLabel{mu, Tag::Plus}, degree);
                emit(SpinLabel{mu, Tag::Minus}, degree);
            }
        } else if (mu.is_even()) {
            const ExactInteger half = degree / 2;
            emit(SpinLabel{mu, Tag::Plus}, half);
            emit(SpinLabel{mu, Tag::Minus}, half);
        } else {
            emit(SpinLabel{mu, Tag::None}, degree);
        }
    }
    return out;
}

BlockId principal_block(Family family, int n) {
    require_rank(family, n);
    return assign_block(family, NonSpinLabel{Partition{n}, Tag::None});
}

std::vector<CharacterRecord> records_in_block(std::span<const CharacterRecord> records, const BlockId& block) {
    std::vector<CharacterRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [&](const CharacterRecord& r) { return r.block == block; });
    return out;
}

std::shared_ptr<const CharacterTableCache::Table> CharacterTableCache::get(Family family, int n) {
    std::promise<std::shared_ptr<const Table>> promise;
    std::shared_future<std::shared_ptr<const Table>> future;
    bool owner = false;
    {
        std::lock_guard lock(mutex_);
        auto [it, inserted] = tables_.try_emplace({family, n});
        if (inserted) {
            it->second = promise.get_future().share();
            owner = true;
        }
        future = it->second;
    }
    if (owner) {
        try {
            promise.set_value(std::make_shared<const Table>(characters_of(family, n)));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    }
    return future.get();
}

}  // namespace spinblocks
