#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "golden_tables.hpp"
#include "injscheme/bounds.hpp"
#include "injscheme/rsk.hpp"
#include "injscheme/table_cache.hpp"

using namespace injscheme;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct Options {
    RunConfig config;
    std::string out;
};

std::ostream& output_stream(const Options& opts, std::ofstream& file) {
    if (opts.out.empty()) return std::cout;
    file.open(opts.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file " + opts.out);
    return file;
}

// flag > environment > default
void apply_env(RunConfig& config, bool cache_dir_set) {
    if (!cache_dir_set)
        if (const char* dir = std::getenv("INJSCHEME_CACHE_DIR")) config.cache_dir = dir;
}

CharacterTable obtain_table(int k, int n, const RunConfig& config, bool write_cache) {
    if (!config.cache_dir.empty()) {
        if (auto cached = load_table(k, n, config.cache_dir)) return std::move(*cached);
    }
    CharacterTable ct = character_table(k, n, config);
    if (write_cache && !config.cache_dir.empty()) store_table(ct, config.cache_dir);
    return ct;
}

json bound_report_json(const BoundReport& r) {
    json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["distances"] = r.d.distances;
    j["presentation"] = r.d.kind == DistanceSet::Kind::min_distance ? "min-distance"
                        : r.d.kind == DistanceSet::Kind::equidistant ? "equidistant"
                                                                     : "explicit";
    j["lp_optimum"] = to_frac(r.lp_optimum);
    j["lp_bound"] = to_dec(r.lp_bound);
    j["singleton"] = r.singleton ? json(to_dec(*r.singleton)) : json(nullptr);
    j["sphere_packing"] = r.sphere_packing ? json(to_dec(*r.sphere_packing)) : json(nullptr);
    j["trivial_cc"] = r.trivial_cc ? json(to_dec(*r.trivial_cc)) : json(nullptr);
    j["best"] = to_dec(r.best);
    return j;
}

int cmd_classes(int k, int n, const Options& opts) {
    auto classes = enumerate_classes(k, n);
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    Int total = 0;
    if (opts.config.format == OutputFormat::json) {
        json rows = json::array();
        for (const auto& cls : classes) {
            Int v = sphere_size(cls, k, n);
            total += v;
            rows.push_back({{"type", cls.to_string()},
                            {"cycles", cls.cycles.parts()},
                            {"paths", cls.paths.parts()},
                            {"zero_paths", cls.zero_paths},
                            {"distance", class_distance(cls, k)},
                            {"valency", to_dec(v)}});
        }
        json j{{"k", k}, {"n", n}, {"classes", rows}, {"valency_sum", to_dec(total)},
               {"point_count", to_dec(injection_count(k, n))}};
        os << j.dump(1) << "\n";
    } else if (opts.config.format == OutputFormat::csv) {
        os << "index,type,distance,valency\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            Int v = sphere_size(classes[i], k, n);
            total += v;
            os << i << ",\"" << classes[i].to_string() << "\"," << class_distance(classes[i], k)
               << "," << to_dec(v) << "\n";
        }
    } else {
        os << "classes of the (" << k << "," << n << ") injection scheme\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            Int v = sphere_size(classes[i], k, n);
            total += v;
            os << "  " << i << "\t" << classes[i].to_string() << "\tdistance "
               << class_distance(classes[i], k) << "\tvalency " << to_dec(v) << "\n";
        }
        os << "total valency " << to_dec(total) << " = |S_{" << k << "," << n << "}| "
           << to_dec(injection_count(k, n)) << "\n";
    }
    if (total != injection_count(k, n)) throw IntegrityError("valency sum mismatch");
    return kExitOk;
}

int cmd_table(int k, int n, bool write_cache, const Options& opts) {
    CharacterTable ct = obtain_table(k, n, opts.config, write_cache);
    DualTable dual = dual_table(ct);
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    const int d = ct.size();
    if (opts.config.format == OutputFormat::json) {
        json j;
        j["k"] = k;
        j["n"] = n;
        j["point_count"] = to_dec(ct.point_count);
        json classes = json::array();
        for (int i = 0; i < d; ++i)
            classes.push_back({{"type", ct.classes[static_cast<std::size_t>(i)].to_string()},
                               {"valency", to_dec(ct.valencies[static_cast<std::size_t>(i)])}});
        j["classes"] = std::move(classes);
        json irreps = json::array();
        for (const auto& ir : ct.irreps)
            irreps.push_back({{"mu", ir.mu.parts()},
                              {"lambda", ir.lambda.parts()},
                              {"multiplicity", to_dec(ir.multiplicity)}});
        j["irreps"] = std::move(irreps);
        json p = json::array(), q = json::array();
        for (int i = 0; i < d; ++i) {
            json pr = json::array(), qr = json::array();
            for (int j2 = 0; j2 < d; ++j2) {
                pr.push_back(to_dec(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]));
                qr.push_back(to_frac(dual.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]));
            }
            p.push_back(std::move(pr));
            q.push_back(std::move(qr));
        }
        j["p"] = std::move(p);
        j["q"] = std::move(q);
        os << j.dump(1) << "\n";
    } else if (opts.config.format == OutputFormat::csv) {
        os << "P";
        for (int j2 = 0; j2 < d; ++j2)
            os << ",\"" << ct.classes[static_cast<std::size_t>(j2)].to_string() << "\"";
        os << "\n";
        for (int i = 0; i < d; ++i) {
            os << "\"" << ct.irreps[static_cast<std::size_t>(i)].to_string() << "\"";
            for (int j2 = 0; j2 < d; ++j2)
                os << "," << to_dec(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]);
            os << "\n";
        }
        os << "Q";
        for (int i = 0; i < d; ++i)
            os << ",\"" << ct.irreps[static_cast<std::size_t>(i)].to_string() << "\"";
        os << "\n";
        for (int j2 = 0; j2 < d; ++j2) {
            os << "\"" << ct.classes[static_cast<std::size_t>(j2)].to_string() << "\"";
            for (int i = 0; i < d; ++i)
                os << "," << to_frac(dual.q[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i)]);
            os << "\n";
        }
    } else {
        os << "character table of the (" << k << "," << n << ") injection scheme, |X| = "
           << to_dec(ct.point_count) << ", " << d << " classes\n\nclasses (valency):\n";
        for (int j2 = 0; j2 < d; ++j2)
            os << "  " << j2 << ": " << ct.classes[static_cast<std::size_t>(j2)].to_string() << " ("
               << to_dec(ct.valencies[static_cast<std::size_t>(j2)]) << ")\n";
        os << "\nirreps (multiplicity):\n";
        for (int i = 0; i < d; ++i)
            os << "  " << i << ": " << ct.irreps[static_cast<std::size_t>(i)].to_string() << " ("
               << to_dec(ct.irreps[static_cast<std::size_t>(i)].multiplicity) << ")\n";
        os << "\nP (rows = irreps, columns = classes):\n";
        for (int i = 0; i < d; ++i) {
            os << " ";
            for (int j2 = 0; j2 < d; ++j2)
                os << " " << to_dec(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]);
            os << "\n";
        }
        os << "\nQ (rows = classes, columns = irreps):\n";
        for (int j2 = 0; j2 < d; ++j2) {
            os << " ";
            for (int i = 0; i < d; ++i)
                os << " " << to_frac(dual.q[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i)]);
            os << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(int k, int n, const std::string& level, const Options& opts) {
    CharacterTable ct = obtain_table(k, n, opts.config, false);
    ValidateLevel lvl = level == "bruteforce" ? ValidateLevel::bruteforce : ValidateLevel::algebraic;
    auto report = validate(ct, lvl, opts.config);
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    if (opts.config.format == OutputFormat::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        os << json{{"k", k}, {"n", n}, {"level", level}, {"checks", checks},
                   {"all_passed", report.all_passed()}}
                  .dump(1)
           << "\n";
    } else {
        os << "verify (" << k << "," << n << ") at level " << level << "\n";
        for (const auto& c : report.checks)
            os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name
               << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
        os << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return report.all_passed() ? kExitOk : kExitMismatch;
}

int cmd_bound(int k, int n, const DistanceSet& dset, const Options& opts) {
    CharacterTable ct = obtain_table(k, n, opts.config, false);
    BoundReport r = delsarte_bound(ct, dset);
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    if (opts.config.format == OutputFormat::json) {
        os << bound_report_json(r).dump(1) << "\n";
    } else if (opts.config.format == OutputFormat::csv) {
        os << "k,n,distances,lp_optimum,lp_bound,singleton,sphere_packing,trivial_cc,best\n";
        os << k << "," << n << ",\"" << r.d.to_string() << "\"," << to_frac(r.lp_optimum) << ","
           << to_dec(r.lp_bound) << "," << (r.singleton ? to_dec(*r.singleton) : "") << ","
           << (r.sphere_packing ? to_dec(*r.sphere_packing) : "") << ","
           << (r.trivial_cc ? to_dec(*r.trivial_cc) : "") << "," << to_dec(r.best) << "\n";
    } else {
        os << "bounds for (k,n) = (" << k << "," << n << "), distances " << r.d.to_string() << "\n";
        os << "  lp optimum:      " << to_frac(r.lp_optimum) << "\n";
        os << "  lp bound:        " << to_dec(r.lp_bound) << "\n";
        if (r.singleton) os << "  singleton:       " << to_dec(*r.singleton) << "\n";
        if (r.sphere_packing) os << "  sphere packing:  " << to_dec(*r.sphere_packing) << "\n";
        if (r.trivial_cc) os << "  clique-coclique: " << to_dec(*r.trivial_cc) << "\n";
        os << "  best:            " << to_dec(r.best) << "\n";
    }
    return kExitOk;
}

int cmd_rsk(int k, int n, const std::string& word_text, const Options& opts) {
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    if (!word_text.empty()) {
        std::vector<int> word;
        std::stringstream ss(word_text);
        std::string item;
        while (std::getline(ss, item, ',')) word.push_back(std::stoi(item));
        if (static_cast<int>(word.size()) != k)
            throw std::invalid_argument("rsk: word length must equal k");
        Injection sigma(word, n);  // rejects non-injective words
        auto pair = rsk(sigma);
        if (opts.config.format == OutputFormat::json) {
            os << json{{"word", word},
                       {"p_shape", pair.p.shape().parts()},
                       {"q_shape", pair.q.shape().parts()},
                       {"p", pair.p.to_string()},
                       {"q", pair.q.to_string()}}
                      .dump(1)
               << "\n";
        } else {
            os << "P (shape " << pair.p.shape().to_string() << "): " << pair.p.to_string() << "\n";
            os << "Q (shape " << pair.q.shape().to_string() << "): " << pair.q.to_string() << "\n";
        }
        return kExitOk;
    }
    // batch: bijection and count identity over all of S_{k,n}
    Int expected = injection_count(k, n);
    if (expected > 1000000) throw BudgetError(expected, 1000000);
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> per_shape;
    long count = 0;
    bool round_trips = true;
    for (const auto& sigma : enumerate_injections(k, n)) {
        auto pair = rsk(sigma);
        ++per_shape[{pair.q.shape().parts(), pair.p.shape().parts()}];
        if (!(rsk_inverse(pair.p, pair.q) == sigma)) round_trips = false;
        ++count;
    }
    Int strip_sum = 0;
    bool shapes_match = true;
    auto pairs = strip_pairs(k, n);
    for (const auto& [mu, lambda] : pairs) {
        Int f = syt_count(mu) * syt_count(lambda);
        strip_sum += f;
        auto it = per_shape.find({mu.parts(), lambda.parts()});
        if (it == per_shape.end() || it->second != f) shapes_match = false;
    }
    bool ok = round_trips && shapes_match && Int(count) == expected && strip_sum == expected &&
              per_shape.size() == pairs.size();
    if (opts.config.format == OutputFormat::json) {
        os << json{{"k", k},
                   {"n", n},
                   {"injections", to_dec(expected)},
                   {"strip_pair_sum", to_dec(strip_sum)},
                   {"round_trips", round_trips},
                   {"per_shape_counts_match", shapes_match},
                   {"ok", ok}}
                  .dump(1)
           << "\n";
    } else {
        os << "rsk batch check on S_{" << k << "," << n << "}: " << to_dec(strip_sum) << " = "
           << to_dec(expected) << (ok ? " OK" : " MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_tables(int which, int max_n, const Options& opts) {
    std::ofstream file;
    std::ostream& os = output_stream(opts, file);
    std::map<std::pair<int, int>, CharacterTable> tables;
    int matched = 0, mismatched = 0, skipped = 0;
    json json_rows = json::array();
    for (const auto& row : golden::table_rows()) {
        if (row.table != which || row.n > max_n) continue;
        std::vector<int> dvals;
        {
            std::stringstream ss(row.dset);
            std::string item;
            while (std::getline(ss, item, ',')) dvals.push_back(std::stoi(item));
        }
        DistanceSet dset = row.table <= 2 ? DistanceSet::min_distance(dvals.front(), row.k)
                           : row.table == 3 ? DistanceSet::equidistant(dvals.front(), row.k)
                                            : DistanceSet::explicit_set(dvals, row.k);
        std::string label = "t" + std::to_string(which) + " n=" + std::to_string(row.n) +
                            " k=" + std::to_string(row.k) + " D=" + dset.to_string();
        try {
            auto key = std::make_pair(row.k, row.n);
            if (!tables.count(key)) tables.emplace(key, obtain_table(row.k, row.n, opts.config, false));
            BoundReport r = delsarte_bound(tables.at(key), dset);
            bool ok = to_dec(r.lp_bound) == row.bound;
            std::string triv_note;
            if (row.triv[0] != '\0') {
                bool triv_ok = r.trivial_cc && to_dec(*r.trivial_cc) == row.triv;
                ok = ok && triv_ok;
                triv_note = " triv=" + (r.trivial_cc ? to_dec(*r.trivial_cc) : "-") +
                            " ref=" + row.triv;
            }
            (ok ? matched : mismatched) += 1;
            if (opts.config.format == OutputFormat::json)
                json_rows.push_back({{"row", label},
                                     {"lp_bound", to_dec(r.lp_bound)},
                                     {"reference", row.bound},
                                     {"match", ok}});
            else
                os << "  " << label << ": lp=" << to_dec(r.lp_bound) << " ref=" << row.bound
                   << triv_note << (ok ? "  OK" : "  MISMATCH")
                   << (row.non_lp_source ? "  (reference printed from a non-LP derivation)" : "")
                   << "\n";
        } catch (const BudgetError& e) {
            ++skipped;
            if (opts.config.format == OutputFormat::json)
                json_rows.push_back({{"row", label}, {"skipped", true}});
            else
                os << "  " << label << ": skipped (cost estimate " << to_dec(e.estimate)
                   << " exceeds budget " << to_dec(e.budget) << ")\n";
        }
    }
    if (opts.config.format == OutputFormat::json) {
        os << json{{"table", which}, {"max_n", max_n}, {"rows", json_rows}, {"matched", matched},
                   {"mismatched", mismatched}, {"skipped", skipped}}
                  .dump(1)
           << "\n";
    } else {
        os << "table " << which << ": " << matched << " matched, " << mismatched << " mismatched, "
           << skipped << " skipped\n";
    }
    return mismatched == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character tables and Delsarte bounds for injection schemes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    int k = 0, n = 0;
    std::string format = "human", level = "algebraic", word, cache_dir;
    bool write_cache = false;
    int min_d = 0, equidistant = 0;
    std::vector<int> distances;
    int which_table = 0, max_n = 0;

    app.add_option("--cache-dir", cache_dir, "character table cache directory");
    app.add_option("--threads", opts.config.threads, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", opts.config.budget, "table assembly cost budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--out", opts.out, "write output to a file instead of stdout");

    auto* classes_cmd = app.add_subcommand("classes", "list associate classes with valencies");
    classes_cmd->add_option("--k", k)->required();
    classes_cmd->add_option("--n", n)->required();

    auto* table_cmd = app.add_subcommand("table", "compute or load the character table");
    table_cmd->add_option("--k", k)->required();
    table_cmd->add_option("--n", n)->required();
    table_cmd->add_flag("--write-cache", write_cache, "store the result in the cache");

    auto* verify_cmd = app.add_subcommand("verify", "validate a character table");
    verify_cmd->add_option("--k", k)->required();
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--level", level)->check(CLI::IsMember({"algebraic", "bruteforce"}));

    auto* bound_cmd = app.add_subcommand("bound", "Delsarte LP and classical bounds");
    bound_cmd->add_option("--k", k)->required();
    bound_cmd->add_option("--n", n)->required();
    auto* o_min = bound_cmd->add_option("--min-d", min_d, "minimum distance d");
    auto* o_eq = bound_cmd->add_option("--equidistant", equidistant, "single exact distance d");
    auto* o_set = bound_cmd->add_option("--distances", distances, "explicit distance list")
                      ->delimiter(',');
    o_min->excludes(o_eq)->excludes(o_set);
    o_eq->excludes(o_set);

    auto* rsk_cmd = app.add_subcommand("rsk", "insertion bijection; batch check without --word");
    rsk_cmd->add_option("--k", k)->required();
    rsk_cmd->add_option("--n", n)->required();
    rsk_cmd->add_option("--word", word, "comma-separated injection word, e.g. 2,3");

    auto* tables_cmd = app.add_subcommand("tables", "recompute published bound tables and diff");
    tables_cmd->add_option("which", which_table, "table number 1..4")
        ->required()
        ->check(CLI::Range(1, 4));
    tables_cmd->add_option("--max-n", max_n, "largest n to recompute (default per table)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    opts.config.format = format == "json" ? OutputFormat::json
                         : format == "csv" ? OutputFormat::csv
                                           : OutputFormat::human;
    apply_env(opts.config, !cache_dir.empty());
    if (!cache_dir.empty()) opts.config.cache_dir = cache_dir;

    try {
        if (classes_cmd->parsed()) return cmd_classes(k, n, opts);
        if (table_cmd->parsed()) return cmd_table(k, n, write_cache, opts);
        if (verify_cmd->parsed()) return cmd_verify(k, n, level, opts);
        if (bound_cmd->parsed()) {
            DistanceSet dset = o_min->count() ? DistanceSet::min_distance(min_d, k)
                               : o_eq->count() ? DistanceSet::equidistant(equidistant, k)
                               : o_set->count()
                                   ? DistanceSet::explicit_set(distances, k)
                                   : throw std::invalid_argument(
                                         "bound: one of --min-d, --equidistant, --distances is required");
            return cmd_bound(k, n, dset, opts);
        }
        if (rsk_cmd->parsed()) return cmd_rsk(k, n, word, opts);
        if (tables_cmd->parsed()) {
            if (max_n == 0) max_n = which_table == 1 ? 9 : which_table == 2 ? 12
                                    : which_table == 3 ? 7 : 5;
            return cmd_tables(which_table, max_n, opts);
        }
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
