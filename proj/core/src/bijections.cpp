#include "spinblocks/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace spinblocks {

Partition enguehard_image(const Partition& lambda) {
    return from_core_and_quotient(Partition{}, two_quotient(lambda));
}

namespace {

Partition label_partition(const CharacterLabel& label) {
    if (const auto* ns = std::get_if<NonSpinLabel>(&label)) return ns->lambda;
    return std::get<SpinLabel>(label).mu.as_partition();
}

std::string describe(const ProfileKey& key) {
    std::string out = "height " + std::to_string(key.height);
    if (key.spin) {
        out += " spin sign " + std::string(key.sign > 0 ? "+" : "-");
    } else {
        out += " non-spin";
    }
    if (key.multiplicity > 1) out += " split";
    return out;
}

// Records of one spin kind, with the profile key of each.
std::vector<std::pair<ProfileKey, const CharacterRecord*>> keyed(std::span<const CharacterRecord> records,
                                                                 bool spin) {
    std::map<Partition, int> per_label;
    for (const auto& r : records) {
        if (r.spin() == spin) ++per_label[label_partition(r.label)];
    }
    std::vector<std::pair<ProfileKey, const CharacterRecord*>> out;
    for (const auto& r : records) {
        if (r.spin() != spin) continue;
        ProfileKey key{r.height, spin, 0, per_label[label_partition(r.label)]};
        if (spin) key.sign = std::get<SpinLabel>(r.label).mu.sign();
        out.emplace_back(key, &r);
    }
    return out;
}

}  // namespace

HeightProfile height_profile(std::span<const CharacterRecord> records, bool spin) {
    HeightProfile profile;
    for (const auto& [key, record] : keyed(records, spin)) ++profile[key];
    return profile;
}

std::string profile_difference(const HeightProfile& lhs, const HeightProfile& rhs) {
    std::set<ProfileKey> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const auto& key : keys) {
        const int a = lhs.contains(key) ? lhs.at(key) : 0;
        const int b = rhs.contains(key) ? rhs.at(key) : 0;
        if (a != b) {
            return describe(key) + ": block has " + std::to_string(a) + ", reference has " + std::to_string(b);
        }
    }
    return {};
}

BlockId reference_block(const BlockId& block) {
    if (block.weight < 1) {
        throw std::invalid_argument("weight-0 block has no reference block: " + block.to_string());
    }
    return principal_block(block.family, 2 * block.weight);
}

NonSpinComparison verify_nonspin_bijection(const BlockId& block, CharacterTableCache& tables) {
    NonSpinComparison result;
    result.block = block;
    result.reference = reference_block(block);
    const auto source_table = tables.get(block.family, block.n);
    const auto target_table = tables.get(result.reference.family, result.reference.n);
    const auto source = records_in_block(*source_table, block);
    const auto target = records_in_block(*target_table, result.reference);

    std::map<NonSpinLabel, int> target_heights;
    for (const auto& r : target) {
        if (!r.spin()) target_heights.emplace(std::get<NonSpinLabel>(r.label), r.height);
    }

    auto note = [&](const std::string& what) {
        if (result.mismatch.empty()) result.mismatch = what;
    };

    std::set<NonSpinLabel> hit;
    for (const auto& r : source) {
        if (r.spin()) continue;
        const auto& label = std::get<NonSpinLabel>(r.label);
        for (const Partition& lambda : {label.lambda, conjugate(label.lambda)}) {
            if (enguehard_image(conjugate(lambda)) != conjugate(enguehard_image(lambda))) {
                result.equivariant = false;
                note("image does not commute with conjugation at " + lambda.to_string());
            }
        }

        NonSpinLabel image{enguehard_image(label.lambda), label.tag};
        if (is_alternating(block.family) && image.tag == Tag::None) {
            image.lambda = std::max(image.lambda, conjugate(image.lambda));
        }
        const auto it = target_heights.find(image);
        if (it == target_heights.end() || !hit.insert(image).second) {
            result.bijective = false;
            note(label.lambda.to_string() + " maps to " + image.lambda.to_string() +
                 ", which is missing from the reference block or already used");
            continue;
        }
        result.matching.emplace_back(label, image);
        if (it->second != r.height) {
            result.heights_preserved = false;
            note(label.lambda.to_string() + " has height " + std::to_string(r.height) + " but its image " +
                 image.lambda.to_string() + " has height " + std::to_string(it->second));
        }
    }
    if (hit.size() != target_heights.size()) {
        result.bijective = false;
        note("reference block has " + std::to_string(target_heights.size()) + " non-spin characters, " +
             std::to_string(hit.size()) + " were hit");
    }

    result.block_profile = height_profile(source, false);
    result.reference_profile = height_profile(target, false);
    note(profile_difference(result.block_profile, result.reference_profile));
    return result;
}

SpinComparison verify_spin_bijection(const BlockId& block, CharacterTableCache& tables) {
    if (!is_cover(block.family)) {
        throw std::invalid_argument("spin bijection needs a double cover, got " + block.to_string());
    }
    SpinComparison result;
    result.block = block;
    result.reference = reference_block(block);
    const auto source_table = tables.get(block.family, block.n);
    const auto target_table = tables.get(result.reference.family, result.reference.n);
    const auto source = records_in_block(*source_table, block);
    const auto target = records_in_block(*target_table, result.reference);

    result.block_profile = height_profile(source, true);
    result.reference_profile = height_profile(target, true);
    result.mismatch = profile_difference(result.block_profile, result.reference_profile);
    if (!result.mismatch.empty()) return result;

    auto sorted = [](std::span<const CharacterRecord> records) {
        auto items = keyed(records, true);
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            const auto& la = std::get<SpinLabel>(a.second->label);
            const auto& lb = std::get<SpinLabel>(b.second->label);
            return std::tie(a.first, la) < std::tie(b.first, lb);
        });
        return items;
    };
    const auto lhs = sorted(source);
    const auto rhs = sorted(target);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        result.matching.emplace_back(std::get<SpinLabel>(lhs[i].second->label),
                                     std::get<SpinLabel>(rhs[i].second->label));
    }
    return result;
}

}  // namespace spinblocks
