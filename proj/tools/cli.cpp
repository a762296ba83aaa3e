#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinblocks/am_verify.hpp"
#include "spinblocks/bijections.hpp"
#include "spinblocks/blocks.hpp"
#include "spinblocks/oracles.hpp"
#include "spinblocks/sweep.hpp"

namespace spinblocks::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int default_sweep_cap = 20;
constexpr int default_partition_cap = 30;

// Errors in user input that should end with a usage status.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

Family family_from(const std::string& text) {
    if (auto f = parse_family(text)) return *f;
    throw UsageError("unknown family: " + text);
}

int resolve_cap(std::optional<int> flag, int fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv(cap_env_var); env != nullptr && *env != '\0') {
        std::string_view text(env);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
            throw UsageError(std::string(cap_env_var) + " must be a positive integer");
        }
        return value;
    }
    return fallback;
}

void enforce_cap(int requested, int cap) {
    if (requested > cap) {
        throw UsageError("refusing to sweep up to n = " + std::to_string(requested) + ": cap is " +
                         std::to_string(cap) + " (raise it with --cap or " + cap_env_var + ")");
    }
}

Json tag_json(Tag tag) { return tag == Tag::None ? Json(nullptr) : Json(std::string(tag_symbol(tag))); }

std::string csv_quote(const std::string& text) { return '"' + text + '"'; }

std::string yes_no(bool value) { return value ? "true" : "false"; }

// Left-aligned text table with a header row.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_) {
            widths.resize(std::max(widths.size(), row.size()));
            for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

void print_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

std::string block_core_text(const BlockId& block) {
    return block.core().to_string() + std::string(tag_symbol(block.split));
}

// ---- chars ----------------------------------------------------------------

struct CharsOptions {
    Family family;
    int n;
    std::optional<int> weight;
    std::optional<Partition> core;
    OutputFormat format;
};

int cmd_chars(const CharsOptions& opt, std::ostream& out) {
    std::vector<CharacterRecord> rows;
    for (auto& r : characters_of(opt.family, opt.n)) {
        if (opt.weight && r.block.weight != *opt.weight) continue;
        if (opt.core && r.block.core() != *opt.core) continue;
        rows.push_back(std::move(r));
    }
    const std::string family(family_name(opt.family));

    switch (opt.format) {
        case OutputFormat::Json: {
            Json chars = Json::array();
            for (const auto& r : rows) {
                chars.push_back({{"label", label_text(r.label)},
                                 {"tag", tag_json(label_tag(r.label))},
                                 {"spin", r.spin()},
                                 {"degree", r.degree.get_str()},
                                 {"core", r.block.core().to_string()},
                                 {"weight", r.block.weight},
                                 {"height", r.height}});
            }
            out << Json{{"family", family}, {"n", opt.n}, {"characters", chars}}.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            print_csv_row(out, {"family", "n", "label", "spin", "tag", "degree", "core", "weight", "height"});
            for (const auto& r : rows) {
                print_csv_row(out, {family, std::to_string(opt.n), csv_quote(label_text(r.label)),
                                    yes_no(r.spin()), std::string(tag_symbol(label_tag(r.label))),
                                    r.degree.get_str(), csv_quote(r.block.core().to_string()),
                                    std::to_string(r.block.weight), std::to_string(r.height)});
            }
            break;
        case OutputFormat::Text: {
            TextTable table({"label", "tag", "spin", "degree", "core", "weight", "height"});
            for (const auto& r : rows) {
                table.add({label_text(r.label), std::string(tag_symbol(label_tag(r.label))), r.spin() ? "spin" : "",
                           r.degree.get_str(), block_core_text(r.block), std::to_string(r.block.weight),
                           std::to_string(r.height)});
            }
            table.print(out);
            break;
        }
    }
    return exit_ok;
}

// ---- blocks ---------------------------------------------------------------

int cmd_blocks(Family family, int n, OutputFormat format, std::ostream& out) {
    CharacterTableCache tables;
    const auto counts = global_block_counts(family, n, tables);
    const std::string name(family_name(family));

    switch (format) {
        case OutputFormat::Json: {
            Json blocks = Json::array();
            for (const auto& c : counts) {
                blocks.push_back({{"core", c.block.core().to_string()},
                                  {"split", tag_json(c.block.split)},
                                  {"weight", c.block.weight},
                                  {"defect", defect(family, c.block.weight)},
                                  {"num_chars", c.num_chars},
                                  {"hz", c.hz},
                                  {"spin_hz", c.spin_hz}});
            }
            out << Json{{"family", name}, {"n", n}, {"blocks", blocks}}.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            print_csv_row(out, {"family", "n", "core", "split", "weight", "defect", "num_chars", "hz", "spin_hz"});
            for (const auto& c : counts) {
                print_csv_row(out, {name, std::to_string(n), csv_quote(c.block.core().to_string()),
                                    std::string(tag_symbol(c.block.split)), std::to_string(c.block.weight),
                                    std::to_string(defect(family, c.block.weight)), std::to_string(c.num_chars),
                                    std::to_string(c.hz), std::to_string(c.spin_hz)});
            }
            break;
        case OutputFormat::Text: {
            TextTable table({"core", "weight", "defect", "chars", "hz", "spin_hz"});
            for (const auto& c : counts) {
                table.add({block_core_text(c.block), std::to_string(c.block.weight),
                           std::to_string(defect(family, c.block.weight)), std::to_string(c.num_chars),
                           std::to_string(c.hz), std::to_string(c.spin_hz)});
            }
            table.print(out);
            break;
        }
    }
    return exit_ok;
}

// ---- bijection ------------------------------------------------------------

struct MatchedPair {
    bool spin;
    std::string label, tag, image, image_tag;
    int height, image_height;
};

int cmd_bijection(Family family, int n, std::optional<int> weight, OutputFormat format, std::ostream& out) {
    CharacterTableCache tables;
    const std::string name(family_name(family));
    bool all_ok = true;
    if (format == OutputFormat::Csv) {
        print_csv_row(out, {"family", "n", "core", "weight", "reference_n", "spin", "label", "tag", "height", "image",
                            "image_tag", "image_height"});
    }

    for (const BlockId& block : blocks_of(family, n)) {
        if (block.weight < 1 || (weight && block.weight != *weight)) continue;
        const auto nonspin = verify_nonspin_bijection(block, tables);
        std::optional<SpinComparison> spin;
        if (is_cover(family)) spin = verify_spin_bijection(block, tables);
        const bool ok = nonspin.ok() && (!spin || spin->ok());
        all_ok = all_ok && ok;

        std::map<CharacterLabel, int> source_heights;
        for (const auto& r : *tables.get(family, n)) source_heights.emplace(r.label, r.height);
        std::map<CharacterLabel, int> target_heights;
        for (const auto& r : *tables.get(family, 2 * block.weight)) target_heights.emplace(r.label, r.height);

        std::vector<MatchedPair> pairs;
        for (const auto& [from, to] : nonspin.matching) {
            pairs.push_back({false, from.lambda.to_string(), std::string(tag_symbol(from.tag)), to.lambda.to_string(),
                             std::string(tag_symbol(to.tag)), source_heights.at(from), target_heights.at(to)});
        }
        if (spin) {
            for (const auto& [from, to] : spin->matching) {
                pairs.push_back({true, from.mu.to_string(), std::string(tag_symbol(from.tag)), to.mu.to_string(),
                                 std::string(tag_symbol(to.tag)), source_heights.at(from), target_heights.at(to)});
            }
        }
        std::string mismatch = nonspin.mismatch;
        if (mismatch.empty() && spin) mismatch = spin->mismatch;

        switch (format) {
            case OutputFormat::Json: {
                Json nonspin_rows = Json::array();
                Json spin_rows = Json::array();
                for (const auto& p : pairs) {
                    Json row{{"label", p.label},
                             {"tag", p.tag.empty() ? Json(nullptr) : Json(p.tag)},
                             {"height", p.height},
                             {"image", p.image},
                             {"image_tag", p.image_tag.empty() ? Json(nullptr) : Json(p.image_tag)},
                             {"image_height", p.image_height}};
                    (p.spin ? spin_rows : nonspin_rows).push_back(std::move(row));
                }
                Json obj{{"family", name},
                         {"n", n},
                         {"core", block.core().to_string()},
                         {"weight", block.weight},
                         {"reference_n", 2 * block.weight},
                         {"nonspin", nonspin_rows},
                         {"spin", spin ? spin_rows : Json(nullptr)},
                         {"verdict", ok}};
                if (!mismatch.empty()) obj["mismatch"] = mismatch;
                out << obj.dump() << '\n';
                break;
            }
            case OutputFormat::Csv:
                for (const auto& p : pairs) {
                    print_csv_row(out, {name, std::to_string(n), csv_quote(block.core().to_string()),
                                        std::to_string(block.weight), std::to_string(2 * block.weight),
                                        yes_no(p.spin), csv_quote(p.label), p.tag, std::to_string(p.height),
                                        csv_quote(p.image), p.image_tag, std::to_string(p.image_height)});
                }
                break;
            case OutputFormat::Text: {
                out << block.to_string() << " -> principal block of " << name << ' ' << 2 * block.weight << ": "
                    << (ok ? "PASS" : "FAIL " + mismatch) << '\n';
                TextTable table({"  kind", "label", "height", "image", "height"});
                for (const auto& p : pairs) {
                    table.add({p.spin ? "  spin" : "  non-spin", p.label + p.tag, std::to_string(p.height),
                               p.image + p.image_tag, std::to_string(p.image_height)});
                }
                table.print(out);
                break;
            }
        }
    }
    return all_ok ? exit_ok : exit_failed_verdict;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    std::string kind;
    std::vector<Family> families;
    int max_n;
    int threads;
    OutputFormat format;
};

Json profile_json(const HeightProfile& profile) {
    Json rows = Json::array();
    for (const auto& [key, count] : profile) {
        rows.push_back({{"height", key.height},
                        {"spin", key.spin},
                        {"sign", key.sign},
                        {"multiplicity", key.multiplicity},
                        {"count", count}});
    }
    return rows;
}

int verify_am(const VerifyOptions& opt, std::ostream& out) {
    CharacterTableCache tables;
    std::size_t total = 0;
    std::size_t failed = 0;
    if (opt.format == OutputFormat::Csv) {
        print_csv_row(out, {"family", "n", "core", "split", "weight", "defect", "num_chars", "hz", "spin_hz",
                            "local_nonspin_hz", "local_spin_hz", "reference_hz", "verdict"});
    }
    for (Family family : opt.families) {
        const std::string name(family_name(family));
        const auto reports = sweep(min_rank(family), opt.max_n, opt.threads,
                                   [&](int n) { return am_check(family, n, tables); });
        for (const AMReport& report : reports) {
            for (const AMRow& row : report.rows) {
                ++total;
                if (!row.verdict) ++failed;
            }
            switch (opt.format) {
                case OutputFormat::Json: {
                    Json blocks = Json::array();
                    for (const AMRow& row : report.rows) {
                        Json obj{{"core", row.block.core().to_string()},
                                 {"split", tag_json(row.block.split)},
                                 {"weight", row.block.weight},
                                 {"defect", row.defect},
                                 {"num_chars", row.num_chars},
                                 {"hz", row.hz},
                                 {"spin_hz", row.spin_hz},
                                 {"local_nonspin_hz",
                                  row.local_nonspin_hz ? Json(*row.local_nonspin_hz) : Json(nullptr)},
                                 {"local_spin_hz", row.local_spin_hz},
                                 {"reference_hz", row.reference_hz ? Json(*row.reference_hz) : Json(nullptr)},
                                 {"local_source", row.local_source},
                                 {"verdict", row.verdict}};
                        if (!row.note.empty()) obj["note"] = row.note;
                        blocks.push_back(std::move(obj));
                    }
                    out << Json{{"family", name}, {"n", report.n}, {"blocks", blocks}}.dump() << '\n';
                    break;
                }
                case OutputFormat::Csv:
                    for (const AMRow& row : report.rows) {
                        print_csv_row(
                            out, {name, std::to_string(report.n), csv_quote(row.block.core().to_string()),
                                  std::string(tag_symbol(row.block.split)), std::to_string(row.block.weight),
                                  std::to_string(row.defect), std::to_string(row.num_chars), std::to_string(row.hz),
                                  std::to_string(row.spin_hz),
                                  row.local_nonspin_hz ? std::to_string(*row.local_nonspin_hz) : "",
                                  std::to_string(row.local_spin_hz),
                                  row.reference_hz ? std::to_string(*row.reference_hz) : "", yes_no(row.verdict)});
                    }
                    break;
                case OutputFormat::Text:
                    for (const AMRow& row : report.rows) {
                        out << row.block.to_string() << " defect=" << row.defect << " chars=" << row.num_chars
                            << " hz=" << row.hz;
                        if (row.local_nonspin_hz) {
                            out << " (local " << *row.local_nonspin_hz + static_cast<std::uint64_t>(row.local_spin_hz)
                                << ")";
                        } else {
                            out << " (rank-" << 2 * row.block.weight << " principal " << *row.reference_hz
                                << ", non-spin local side deferred)";
                        }
                        out << " spin_hz=" << row.spin_hz << " (local " << row.local_spin_hz << ") "
                            << (row.verdict ? "PASS" : "FAIL: " + row.note) << '\n';
                    }
                    break;
            }
        }
    }
    if (opt.format == OutputFormat::Text) {
        out << "verify am: " << total << " blocks, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_failed_verdict;
}

struct HeightsRow {
    BlockId block;
    NonSpinComparison nonspin;
    std::optional<SpinComparison> spin;

    bool ok() const { return nonspin.ok() && (!spin || spin->ok()); }
};

int verify_heights(const VerifyOptions& opt, std::ostream& out) {
    CharacterTableCache tables;
    std::size_t total = 0;
    std::size_t failed = 0;
    if (opt.format == OutputFormat::Csv) {
        print_csv_row(out, {"family", "n", "core", "weight", "reference_n", "equivariant", "bijective",
                            "heights_preserved", "nonspin_profiles_equal", "spin_profiles_equal", "verdict"});
    }
    for (Family family : opt.families) {
        const std::string name(family_name(family));
        const auto per_n = sweep(min_rank(family), opt.max_n, opt.threads, [&](int n) {
            std::vector<HeightsRow> rows;
            for (const BlockId& block : blocks_of(family, n)) {
                if (block.weight < 1) continue;
                HeightsRow row{block, verify_nonspin_bijection(block, tables), std::nullopt};
                if (is_cover(family)) row.spin = verify_spin_bijection(block, tables);
                rows.push_back(std::move(row));
            }
            return rows;
        });
        for (const auto& rows : per_n) {
            for (const HeightsRow& row : rows) {
                ++total;
                if (!row.ok()) ++failed;
                const auto& ns = row.nonspin;
                std::string mismatch = ns.mismatch;
                if (mismatch.empty() && row.spin) mismatch = row.spin->mismatch;
                switch (opt.format) {
                    case OutputFormat::Json: {
                        Json obj{{"family", name},
                                 {"n", row.block.n},
                                 {"core", row.block.core().to_string()},
                                 {"weight", row.block.weight},
                                 {"reference_n", ns.reference.n},
                                 {"nonspin",
                                  {{"equivariant", ns.equivariant},
                                   {"bijective", ns.bijective},
                                   {"heights_preserved", ns.heights_preserved},
                                   {"block_profile", profile_json(ns.block_profile)},
                                   {"reference_profile", profile_json(ns.reference_profile)}}},
                                 {"spin", row.spin ? Json{{"block_profile", profile_json(row.spin->block_profile)},
                                                          {"reference_profile",
                                                           profile_json(row.spin->reference_profile)}}
                                                   : Json(nullptr)},
                                 {"verdict", row.ok()}};
                        if (!mismatch.empty()) obj["mismatch"] = mismatch;
                        out << obj.dump() << '\n';
                        break;
                    }
                    case OutputFormat::Csv:
                        print_csv_row(out, {name, std::to_string(row.block.n), csv_quote(row.block.core().to_string()),
                                            std::to_string(row.block.weight), std::to_string(ns.reference.n),
                                            yes_no(ns.equivariant), yes_no(ns.bijective),
                                            yes_no(ns.heights_preserved),
                                            yes_no(ns.block_profile == ns.reference_profile),
                                            row.spin ? yes_no(row.spin->ok()) : "", yes_no(row.ok())});
                        break;
                    case OutputFormat::Text:
                        out << row.block.to_string() << " vs rank " << ns.reference.n << ": "
                            << (row.ok() ? "PASS" : "FAIL: " + mismatch) << '\n';
                        break;
                }
            }
        }
    }
    if (opt.format == OutputFormat::Text) {
        out << "verify heights: " << total << " blocks, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_failed_verdict;
}

int verify_partitions(const VerifyOptions& opt, std::ostream& out) {
    const auto audits = sweep(0, opt.max_n, opt.threads, [](int n) { return audit_partitions(n); });
    std::size_t failed = 0;
    auto optional_json = [](const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); };
    auto optional_text = [](const std::optional<bool>& v) { return v ? yes_no(*v) : std::string(); };
    if (opt.format == OutputFormat::Csv) {
        print_csv_row(out, {"n", "partitions", "expected", "round_trip", "core_is_staircase", "quotient_weight",
                            "conjugation", "core_oracle", "bar_confluence", "verdict"});
    }
    for (const PartitionAudit& a : audits) {
        if (!a.ok()) ++failed;
        switch (opt.format) {
            case OutputFormat::Json: {
                Json obj{{"n", a.n},
                         {"partitions", a.partitions},
                         {"expected", a.expected},
                         {"round_trip", a.round_trip},
                         {"core_is_staircase", a.core_is_staircase},
                         {"quotient_weight", a.quotient_weight},
                         {"conjugation", a.conjugation},
                         {"core_oracle", optional_json(a.core_oracle)},
                         {"bar_confluence", optional_json(a.bar_confluence)},
                         {"verdict", a.ok()}};
                if (!a.failure.empty()) obj["failure"] = a.failure;
                out << obj.dump() << '\n';
                break;
            }
            case OutputFormat::Csv:
                print_csv_row(out, {std::to_string(a.n), std::to_string(a.partitions), std::to_string(a.expected),
                                    yes_no(a.round_trip), yes_no(a.core_is_staircase), yes_no(a.quotient_weight),
                                    yes_no(a.conjugation), optional_text(a.core_oracle),
                                    optional_text(a.bar_confluence), yes_no(a.ok())});
                break;
            case OutputFormat::Text:
                out << "n=" << a.n << " partitions=" << a.partitions << " (p(n)=" << a.expected << ") "
                    << (a.core_oracle ? "oracles checked " : "oracles skipped ")
                    << (a.ok() ? "PASS" : "FAIL: " + a.failure) << '\n';
                break;
        }
    }
    if (opt.format == OutputFormat::Text) {
        out << "verify partitions: " << audits.size() << " sizes, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_failed_verdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact 2-block data for symmetric and alternating groups and their double covers", "spinblocks"};
    app.require_subcommand(1);

    const std::vector<std::string> family_names{"sym", "alt", "sym-cover", "alt-cover"};
    const std::vector<std::string> format_names{"text", "json", "csv"};

    std::string family;
    int n = 0;
    std::optional<int> weight;
    std::string core;
    std::string format = "text";
    std::string kind;
    int max_n = 0;
    int threads = 1;
    std::optional<int> cap;

    auto add_family = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--family", family, "sym | alt | sym-cover | alt-cover")
                      ->check(CLI::IsMember(family_names));
        if (required) o->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json | csv")->check(CLI::IsMember(format_names));
    };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, std::string("Largest n accepted (default from ") + cap_env_var + ")")
            ->check(CLI::Range(1, 1000000));
    };

    auto* chars = app.add_subcommand("chars", "Irreducible characters with degree, block and height");
    add_family(chars, true);
    chars->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 1000000));
    chars->add_option("--weight", weight, "Only characters in blocks of this weight")->check(CLI::NonNegativeNumber);
    chars->add_option("--core", core, "Only characters in the block with this 2-core, e.g. [2,1]");
    add_format(chars);
    add_cap(chars);

    auto* blocks = app.add_subcommand("blocks", "2-blocks with defect and height-zero counts");
    add_family(blocks, true);
    blocks->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 1000000));
    add_format(blocks);
    add_cap(blocks);

    auto* bijection = app.add_subcommand("bijection", "Height-preserving matching of a block with the rank-2w principal block");
    add_family(bijection, true);
    bijection->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 1000000));
    bijection->add_option("--weight", weight, "Only the block of this weight")->check(CLI::Range(1, 1000000));
    add_format(bijection);
    add_cap(bijection);

    auto* verify = app.add_subcommand("verify", "Sweep verification suites");
    verify->add_option("kind", kind, "am | heights | partitions")
        ->required()
        ->check(CLI::IsMember({"am", "heights", "partitions"}));
    add_family(verify, false);
    verify->add_option("--max-n", max_n, "Largest rank in the sweep")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--parallel", threads, "Worker threads")->check(CLI::Range(1, 1000000));
    add_format(verify);
    add_cap(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (chars->parsed()) {
            enforce_cap(n, resolve_cap(cap, default_partition_cap));
            CharsOptions opt{family_from(family), n, weight, std::nullopt, fmt};
            if (!core.empty()) opt.core = Partition::parse(core);
            return cmd_chars(opt, out);
        }
        if (blocks->parsed()) {
            enforce_cap(n, resolve_cap(cap, default_partition_cap));
            return cmd_blocks(family_from(family), n, fmt, out);
        }
        if (bijection->parsed()) {
            enforce_cap(n, resolve_cap(cap, default_partition_cap));
            return cmd_bijection(family_from(family), n, weight, fmt, out);
        }
        VerifyOptions opt{kind, {}, max_n, threads, fmt};
        if (family.empty()) {
            opt.families.assign(all_families.begin(), all_families.end());
        } else {
            opt.families.push_back(family_from(family));
        }
        if (kind == "partitions") {
            enforce_cap(max_n, resolve_cap(cap, default_partition_cap));
            return verify_partitions(opt, out);
        }
        enforce_cap(max_n, resolve_cap(cap, default_sweep_cap));
        return kind == "am" ? verify_am(opt, out) : verify_heights(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace spinblocks::cli
