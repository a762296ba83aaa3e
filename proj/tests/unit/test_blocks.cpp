#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "spinblocks/blocks.hpp"
#include "spinblocks/sweep.hpp"

using namespace spinblocks;

namespace {

std::vector<long> sorted_degrees(const std::vector<CharacterRecord>& records) {
    std::vector<long> out;
    for (const auto& r : records) out.push_back(r.degree.get_si());
    std::sort(out.begin(), out.end());
    return out;
}

int count_blocks_by_weight(const std::vector<BlockId>& blocks, int w) {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [&](const BlockId& b) { return b.weight == w; }));
}

}  // namespace

TEST_CASE("family names round trip") {
    for (Family f : all_families) CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("cyclic").has_value());
    CHECK_THROWS_AS(blocks_of(Family::Alt, 1), std::invalid_argument);
    CHECK_NOTHROW(blocks_of(Family::Sym, 1));
}

TEST_CASE("group orders") {
    CHECK(group_order(Family::Sym, 4) == 24);
    CHECK(group_order(Family::Alt, 4) == 12);
    CHECK(group_order(Family::SymCover, 4) == 48);
    CHECK(group_order(Family::AltCover, 4) == 24);
    for (Family f : all_families) {
        for (int n = min_rank(f); n <= 20; ++n) REQUIRE(group_order_val2(f, n) == val2(group_order(f, n)));
    }
}

TEST_CASE("block lists") {
    const auto s4 = blocks_of(Family::Sym, 4);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].k == 0);
    CHECK(s4[0].weight == 2);

    const auto s3 = blocks_of(Family::Sym, 3);
    REQUIRE(s3.size() == 2);
    CHECK((s3[0].k == 1 && s3[0].weight == 1));
    CHECK((s3[1].k == 2 && s3[1].weight == 0));

    const auto a3 = blocks_of(Family::AltCover, 3);
    REQUIRE(a3.size() == 3);
    CHECK(count_blocks_by_weight(a3, 1) == 1);
    CHECK(count_blocks_by_weight(a3, 0) == 2);
    CHECK(a3[1].split == Tag::Plus);
    CHECK(a3[2].split == Tag::Minus);

    for (int n = 1; n <= 20; ++n) {
        int staircases = 0;
        for (int k = 0; k * (k + 1) / 2 <= n; ++k) staircases += (n - k * (k + 1) / 2) % 2 == 0;
        REQUIRE(static_cast<int>(blocks_of(Family::Sym, n).size()) == staircases);
    }
}

TEST_CASE("defects") {
    CHECK(defect(Family::SymCover, 0) == 1);
    CHECK(defect(Family::Sym, 2) == 3);
    CHECK(defect(Family::Alt, 1) == 0);
    CHECK(defect(Family::Sym, 0) == 0);
    CHECK(defect(Family::AltCover, 0) == 1);
    CHECK(defect(Family::AltCover, 2) == 3);
}

TEST_CASE("block assignment examples") {
    const auto b = assign_block(Family::Sym, NonSpinLabel{Partition{3, 2}, Tag::None});
    CHECK(b.k == 1);
    CHECK(b.weight == 2);

    const auto s3 = assign_block(Family::SymCover, SpinLabel{BarPartition{3}, Tag::None});
    CHECK(s3.k == 2);
    CHECK(s3.weight == 0);

    for (Tag t : {Tag::Plus, Tag::Minus}) {
        const auto s21 = assign_block(Family::SymCover, SpinLabel{BarPartition{2, 1}, t});
        CHECK(s21.k == 1);
        CHECK(s21.weight == 1);
    }

    // Weight-0 split characters follow their tag.
    const auto plus = assign_block(Family::Alt, NonSpinLabel{Partition{2, 1}, Tag::Plus});
    CHECK(plus.split == Tag::Plus);
    const auto minus = assign_block(Family::AltCover, SpinLabel{BarPartition{3}, Tag::Minus});
    CHECK(minus.split == Tag::Minus);
}

TEST_CASE("label validation") {
    CHECK_THROWS_AS(validate_label(Family::Sym, SpinLabel{BarPartition{3}, Tag::None}), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(Family::Sym, NonSpinLabel{Partition{2, 1}, Tag::Plus}), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(Family::Alt, NonSpinLabel{Partition{2, 1}, Tag::None}), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(Family::Alt, NonSpinLabel{Partition{2, 1, 1}, Tag::None}), std::invalid_argument);
    CHECK_NOTHROW(validate_label(Family::Alt, NonSpinLabel{Partition{3, 1}, Tag::None}));
    CHECK_THROWS_AS(validate_label(Family::SymCover, SpinLabel{BarPartition{3}, Tag::Plus}), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(Family::SymCover, SpinLabel{BarPartition{2, 1}, Tag::None}), std::invalid_argument);
    CHECK_THROWS_AS(validate_label(Family::AltCover, SpinLabel{BarPartition{3}, Tag::None}), std::invalid_argument);
}

TEST_CASE("small character tables") {
    const auto s4 = characters_of(Family::SymCover, 4);
    CHECK(s4.size() == 8);
    CHECK(sorted_degrees(s4) == std::vector<long>{1, 1, 2, 2, 2, 3, 3, 4});

    const auto a4 = characters_of(Family::AltCover, 4);
    CHECK(a4.size() == 7);
    CHECK(sorted_degrees(a4) == std::vector<long>{1, 1, 1, 2, 2, 2, 3});

    const auto a3 = characters_of(Family::AltCover, 3);
    CHECK(a3.size() == 6);
    CHECK(sorted_degrees(a3) == std::vector<long>{1, 1, 1, 1, 1, 1});

    CHECK(characters_of(Family::Alt, 3).size() == 3);

    // Canonical order: non-spin first, + before -.
    CHECK_FALSE(s4.front().spin());
    CHECK(s4.back().spin());
    CHECK(label_text(s4[5].label) == "[4]");
    CHECK(label_tag(s4[5].label) == Tag::Plus);
    CHECK(label_tag(s4[6].label) == Tag::Minus);
    CHECK(label_text(s4[7].label) == "[3,1]");
}

TEST_CASE("heights") {
    const auto s4 = characters_of(Family::SymCover, 4);
    for (const auto& r : s4) {
        if (r.spin() && label_text(r.label) == "[3,1]") {
            CHECK(r.degree == 4);
            CHECK(r.height == 2);
        }
    }
    const auto s6 = characters_of(Family::Sym, 6);
    for (const auto& r : s6) {
        if (label_text(r.label) == "[3,2,1]") {
            CHECK(r.degree == 16);
            CHECK(r.block.weight == 0);
            CHECK(r.height == 0);
        }
    }
    CHECK(characters_of(Family::Sym, 5).front().height == 0);
    CHECK_THROWS_AS(height(ExactInteger(1), BlockId{Family::Sym, 6, 3, 0, Tag::None}), std::logic_error);
}

TEST_CASE("S4 and A4 heights of the self-conjugate and fused characters") {
    std::map<std::string, int> sym, alt;
    for (const auto& r : characters_of(Family::Sym, 4)) sym[label_text(r.label)] = r.height;
    for (const auto& r : characters_of(Family::Alt, 4)) alt[label_text(r.label) + std::string(tag_symbol(label_tag(r.label)))] = r.height;
    CHECK(sym == std::map<std::string, int>{{"[4]", 0}, {"[3,1]", 0}, {"[2,2]", 1}, {"[2,1,1]", 0}, {"[1,1,1,1]", 0}});
    // Splitting lowers the height of (2,2); fusing keeps (4) and (3,1) at 0.
    CHECK(alt == std::map<std::string, int>{{"[4]", 0}, {"[3,1]", 0}, {"[2,2]+", 0}, {"[2,2]-", 0}});
}

TEST_CASE("table completeness and block properties") {
    for (Family f : all_families) {
        for (int n = min_rank(f); n <= 12; ++n) {
            INFO(std::string(family_name(f)), " n=", n);
            ExactInteger total = 0;
            for (const auto& r : characters_of(f, n)) total += r.degree * r.degree;
            REQUIRE(total == group_order(f, n));
        }
    }
    for (Family f : all_families) {
        for (int n = min_rank(f); n <= 20; ++n) {
            INFO(std::string(family_name(f)), " n=", n);
            const auto table = characters_of(f, n);
            for (const auto& block : blocks_of(f, n)) {
                const auto members = records_in_block(table, block);
                REQUIRE_FALSE(members.empty());
                REQUIRE(std::any_of(members.begin(), members.end(), [](const auto& r) { return r.height == 0; }));
                if (is_cover(f)) REQUIRE(std::any_of(members.begin(), members.end(), [](const auto& r) { return r.spin(); }));
                if (block.weight == 0) {
                    REQUIRE(std::all_of(members.begin(), members.end(), [](const auto& r) { return r.height == 0; }));
                }
                if (f == Family::Sym) {
                    unsigned long long pairs = 0;
                    for (int i = 0; i <= block.weight; ++i) pairs += partition_number(i) * partition_number(block.weight - i);
                    REQUIRE(members.size() == pairs);
                }
            }
        }
    }
}

TEST_CASE("non-spin heights survive passage to the double cover") {
    for (auto [base, cover] : {std::pair{Family::Sym, Family::SymCover}, std::pair{Family::Alt, Family::AltCover}}) {
        for (int n = min_rank(base); n <= 16; ++n) {
            std::map<std::pair<std::string, Tag>, int> heights;
            for (const auto& r : characters_of(base, n)) heights[{label_text(r.label), label_tag(r.label)}] = r.height;
            for (const auto& r : characters_of(cover, n)) {
                if (r.spin()) continue;
                REQUIRE(heights.at({label_text(r.label), label_tag(r.label)}) == r.height);
            }
        }
    }
}

TEST_CASE("principal block") {
    CHECK(principal_block(Family::Sym, 6).weight == 3);
    CHECK(principal_block(Family::Sym, 3).k == 1);
    CHECK(principal_block(Family::AltCover, 3).weight == 1);
}

TEST_CASE("character table cache is shared and deterministic across threads") {
    CharacterTableCache cache;
    const auto results = sweep(1, 24, 8, [&](int i) {
        const Family f = all_families[static_cast<std::size_t>(i % 4)];
        const int n = 6 + i % 5;
        return cache.get(f, n)->size();
    });
    const auto sequential = sweep(1, 24, 1, [&](int i) {
        const Family f = all_families[static_cast<std::size_t>(i % 4)];
        return characters_of(f, 6 + i % 5).size();
    });
    CHECK(results == sequential);
    CHECK(cache.get(Family::Sym, 7).get() == cache.get(Family::Sym, 7).get());
    CHECK_THROWS_AS(cache.get(Family::Alt, 1), std::invalid_argument);
}

TEST_CASE("sweep rethrows worker failures") {
    CHECK_THROWS_AS(sweep(0, 9, 4, [](int i) -> int {
        if (i == 5) throw std::runtime_error("boom");
        return i;
    }),
                    std::runtime_error);
    CHECK(sweep(3, 2, 4, [](int i) { return i; }).empty());
}
