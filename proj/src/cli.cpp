#include "heffter/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heffter/constructors.hpp"
#include "heffter/io.hpp"
#include "heffter/reduce.hpp"
#include "heffter/solver.hpp"
#include "heffter/supplier.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    bool json = false;
    std::string format = "grid";
    std::vector<std::string> ingredient_dirs;
    long long budget_nodes = 10'000'000;
    double budget_secs = 60.0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_budget = true) {
    cmd->add_flag("--json", o.json, "machine-readable JSON on stdout");
    cmd->add_option("--format", o.format, "array output format")
        ->check(CLI::IsMember({"grid", "json"}));
    cmd->add_option("--ingredients", o.ingredient_dirs,
                    "extra ingredient directory (repeatable)");
    if (with_budget) {
        cmd->add_option("--budget-nodes", o.budget_nodes,
                        "search node budget");
        cmd->add_option("--budget-secs", o.budget_secs,
                        "search time budget in seconds");
    }
}

void configure_supplier(IngredientSupplier& sup, const CommonOpts& o) {
    sup.add_dirs_from_env();
    for (const auto& d : o.ingredient_dirs) sup.add_search_dir(d);
    sup.set_search_budget(o.budget_nodes, o.budget_secs);
}

std::string emit_doc(const ArrayDocument& doc, const std::string& format) {
    return emit_array(doc,
                      format == "json" ? ArrayFormat::Json : ArrayFormat::Grid);
}

ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["passed"] = rep.passed;
    ordered_json viols = ordered_json::array();
    for (const auto& v : rep.violations)
        viols.push_back({{"kind", to_string(v.kind)},
                         {"location", v.location},
                         {"detail", v.detail}});
    j["violations"] = viols;
    if (rep.observed_constants)
        j["constants"] = {{"c1", rep.observed_constants->first},
                          {"c2", rep.observed_constants->second}};
    if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
    return j;
}

DesignParams params_for(const ArrayDocument& doc,
                        const std::optional<int>& m,
                        const std::optional<int>& n,
                        const std::optional<int>& s,
                        const std::optional<int>& k,
                        const std::optional<int>& t,
                        const std::optional<int>& lambda) {
    DesignParams p = doc.params;
    if (m) p.m = *m;
    if (n) p.n = *n;
    if (s) p.s = *s;
    if (k) p.k = *k;
    if (t) p.t = *t;
    if (lambda) p.lambda = *lambda;
    return p;
}

int cmd_construct(const std::string& kind_name, int m, int n, int s, int k,
                  const CommonOpts& opts, std::ostream& out,
                  std::ostream& err) {
    auto kind = construct_kind_from_string(kind_name);
    if (!kind) {
        err << "unknown construct kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    IngredientSupplier sup;
    configure_supplier(sup, opts);
    ConstructResult res = construct(*kind, m, n, s, k, sup);
    std::string doc_kind =
        *kind == ConstructKind::Heffter ? "integer-heffter" : kind_name;
    ArrayDocument doc = ArrayDocument::wrap(
        doc_kind, res.array,
        DesignParams{m, n, s, k, std::nullopt, std::nullopt},
        {"constructed", res.provenance});
    if (opts.json) {
        ordered_json j;
        j["command"] = "construct";
        j["status"] = "ok";
        j["provenance"] = res.provenance;
        j["array"] = ordered_json::parse(emit_array(doc, ArrayFormat::Json));
        out << j.dump() << "\n";
    } else {
        out << emit_doc(doc, opts.format);
    }
    (void)err;
    return kExitOk;
}

int cmd_verify(const std::string& kind_name, const std::string& file,
               const DesignParams& p, std::optional<int> diagonal,
               const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    auto kind = array_kind_from_string(kind_name);
    if (!kind) {
        err << "unknown kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    ArrayDocument doc = load_array_file(file);
    VerificationReport rep = verify_kind(*kind, doc.grid, p);
    if (diagonal) {
        VerificationReport dg = verify_diagonal(doc.grid, *diagonal);
        for (const auto& v : dg.violations)
            rep.add(v.kind, v.location, v.detail);
    }
    if (opts.json) {
        ordered_json j;
        j["command"] = "verify";
        j["kind"] = kind_name;
        j["status"] = rep.passed ? "ok" : "failed";
        j["report"] = report_to_json(rep);
        out << j.dump() << "\n";
    } else {
        out << (rep.passed ? "verified" : rep.summary()) << "\n";
        for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
    }
    return rep.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_reduce(const std::string& file, int m, int n, int s, int k,
               const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    ArrayDocument doc = load_array_file(file);
    DesignParams p{m, n, s, k, doc.params.t, doc.params.lambda};
    PartiallyFilledArray reduced = reduce(doc.grid, p);
    // Re-verify under the source kind when it names one.
    if (auto kind = array_kind_from_string(doc.kind)) {
        VerificationReport rep = verify_kind(*kind, reduced, p);
        if (!rep.passed) {
            err << "reduced array fails the " << doc.kind
                << " check: " << rep.summary() << "\n";
            return kExitVerifyFailed;
        }
    }
    ArrayDocument outdoc = ArrayDocument::wrap(
        doc.kind, reduced, p, {"reduced", "from " + std::filesystem::path(file).filename().string()});
    if (opts.json) {
        ordered_json j;
        j["command"] = "reduce";
        j["status"] = "ok";
        j["array"] = ordered_json::parse(emit_array(outdoc, ArrayFormat::Json));
        out << j.dump() << "\n";
    } else {
        out << emit_doc(outdoc, opts.format);
    }
    return kExitOk;
}

int cmd_solve(const std::string& kind_name, const SearchConstraints& base,
              const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    auto kind = array_kind_from_string(kind_name);
    if (!kind) {
        err << "unknown kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    SearchConstraints c = base;
    c.kind = *kind;
    SearchOutcome res = solve(c);
    if (opts.json) {
        ordered_json j;
        j["command"] = "solve";
        j["verdict"] = to_string(res.verdict);
        j["nodes"] = res.stats.nodes;
        if (res.array) {
            ArrayDocument doc = ArrayDocument::wrap(kind_name, *res.array,
                                                    c.params,
                                                    {"search", "exact search"});
            j["array"] =
                ordered_json::parse(emit_array(doc, ArrayFormat::Json));
        }
        out << j.dump() << "\n";
    } else if (res.array) {
        ArrayDocument doc = ArrayDocument::wrap(kind_name, *res.array, c.params,
                                                {"search", "exact search"});
        out << emit_doc(doc, opts.format);
        err << "found after " << res.stats.nodes << " nodes\n";
    } else {
        out << to_string(res.verdict) << " after " << res.stats.nodes
            << " nodes\n";
    }
    switch (res.verdict) {
        case SearchOutcome::Verdict::Found: return kExitOk;
        case SearchOutcome::Verdict::ExhaustedUnsat: return kExitNotCovered;
        case SearchOutcome::Verdict::BudgetExceeded: return kExitBudget;
    }
    return kExitUsage;
}

int cmd_show(const std::string& file, std::ostream& out) {
    ArrayDocument doc = load_array_file(file);
    out << std::to_string(doc.params.m) + "x" + std::to_string(doc.params.n)
        << " " << doc.kind;
    if (doc.params.s > 0)
        out << ", fills (" << doc.params.s << ", " << doc.params.k << ")";
    if (!doc.provenance.tag.empty()) out << " [" << doc.provenance.tag << "]";
    out << "\n" << render_grid(doc.grid);
    return kExitOk;
}

int cmd_ingredients(const std::string& action, const CommonOpts& opts,
                    std::ostream& out, std::ostream& err) {
    IngredientSupplier sup;
    configure_supplier(sup, opts);
    if (action == "list") {
        ordered_json items = ordered_json::array();
        for (const auto& item : sup.bundled_inventory()) {
            if (opts.json)
                items.push_back({{"name", item.name},
                                 {"satisfies", item.satisfies.describe()},
                                 {"source", item.source}});
            else
                out << item.name << ": " << item.satisfies.describe() << " ["
                    << item.source << "]\n";
        }
        for (const auto& dir : sup.search_dirs()) {
            std::error_code ec;
            std::vector<std::filesystem::path> files;
            for (const auto& entry :
                 std::filesystem::directory_iterator(dir, ec)) {
                auto ext = entry.path().extension();
                if (ext == ".grid" || ext == ".json")
                    files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& path : files) {
                std::string desc;
                try {
                    ArrayDocument doc = load_array_file(path.string());
                    desc = doc.kind + " " + std::to_string(doc.params.m) + "x" +
                           std::to_string(doc.params.n);
                } catch (const Error& e) {
                    desc = std::string("unreadable: ") + e.what();
                }
                if (opts.json)
                    items.push_back({{"name", path.string()},
                                     {"satisfies", desc},
                                     {"source", "file"}});
                else
                    out << path.string() << ": " << desc << "\n";
            }
        }
        if (opts.json) {
            ordered_json j;
            j["command"] = "ingredients";
            j["items"] = items;
            out << j.dump() << "\n";
        }
        return kExitOk;
    }
    // validate: parse and check every file in the search directories.
    bool all_ok = true;
    for (const auto& dir : sup.search_dirs()) {
        std::error_code ec;
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
            auto ext = entry.path().extension();
            if (ext == ".grid" || ext == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            try {
                ArrayDocument doc = load_array_file(path.string());
                auto kind = array_kind_from_string(doc.kind);
                if (!kind) {
                    out << path.string() << ": parsed (kind " << doc.kind
                        << ", not checked)\n";
                    continue;
                }
                VerificationReport rep =
                    verify_kind(*kind, doc.grid, doc.params);
                out << path.string() << ": "
                    << (rep.passed ? "verified" : "FAILED") << "\n";
                if (!rep.passed) all_ok = false;
            } catch (const Error& e) {
                out << path.string() << ": FAILED (" << e.what() << ")\n";
                all_ok = false;
            }
        }
    }
    (void)err;
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"construct, verify, reduce and search zero-sum and magic "
                 "partially filled arrays"};
    app.require_subcommand(1);

    // construct
    auto* c_construct =
        app.add_subcommand("construct", "build an array of a given kind");
    std::string kind;
    int m = 0, n = 0, s = 0, k = 0;
    CommonOpts c_opts;
    c_construct->add_option("kind", kind, "heffter | sma | mr")->required();
    c_construct->add_option("-m", m)->required();
    c_construct->add_option("-n", n)->required();
    c_construct->add_option("-s", s)->required();
    c_construct->add_option("-k", k)->required();
    add_common(c_construct, c_opts);

    // verify
    auto* c_verify = app.add_subcommand("verify", "check a file against a "
                                                  "definition");
    std::string v_kind, v_file;
    CommonOpts v_opts;
    std::optional<int> v_m, v_n, v_s, v_k, v_t, v_lambda, v_diag;
    c_verify->add_option("kind", v_kind,
                         "heffter | integer-heffter | relative | "
                         "integer-relative | sma | mr")
        ->required();
    c_verify->add_option("file", v_file)->required();
    c_verify->add_option("-m", v_m);
    c_verify->add_option("-n", v_n);
    c_verify->add_option("-s", v_s);
    c_verify->add_option("-k", v_k);
    c_verify->add_option("--t", v_t);
    c_verify->add_option("--lambda", v_lambda);
    c_verify->add_option("--diagonal", v_diag,
                         "also require this many full consecutive diagonals");
    add_common(c_verify, v_opts, false);

    // reduce
    auto* c_reduce = app.add_subcommand(
        "reduce", "rebuild an m x n array from a diagonal square");
    std::string r_file;
    int r_m = 0, r_n = 0, r_s = 0, r_k = 0;
    CommonOpts r_opts;
    c_reduce->add_option("file", r_file)->required();
    c_reduce->add_option("-m", r_m)->required();
    c_reduce->add_option("-n", r_n)->required();
    c_reduce->add_option("-s", r_s)->required();
    c_reduce->add_option("-k", r_k)->required();
    add_common(c_reduce, r_opts, false);

    // solve
    auto* c_solve = app.add_subcommand("solve", "exact backtracking search");
    std::string s_kind;
    CommonOpts s_opts;
    int s_m = 0, s_n = 0, s_s = 0, s_k = 0;
    bool s_diagonal = false, s_shiftable = false, s_no_break = false,
         s_diag_major = false;
    std::uint64_t s_seed = 0;
    std::optional<int> s_t, s_lambda;
    c_solve->add_option("kind", s_kind)->required();
    c_solve->add_option("-m", s_m);
    c_solve->add_option("-n", s_n)->required();
    c_solve->add_option("-s", s_s);
    c_solve->add_option("-k", s_k)->required();
    c_solve->add_flag("--diagonal", s_diagonal,
                      "square with -n side and -k consecutive diagonals");
    c_solve->add_flag("--shiftable", s_shiftable);
    c_solve->add_flag("--no-symmetry-breaking", s_no_break);
    c_solve->add_flag("--diagonal-major", s_diag_major,
                      "assign whole diagonals at a time");
    c_solve->add_option("--seed", s_seed);
    c_solve->add_option("--t", s_t);
    c_solve->add_option("--lambda", s_lambda);
    add_common(c_solve, s_opts);

    // show
    auto* c_show = app.add_subcommand("show", "pretty-print a file");
    std::string sh_file;
    c_show->add_option("file", sh_file)->required();

    // ingredients
    auto* c_ingr =
        app.add_subcommand("ingredients", "list or validate the inventory");
    std::string i_action = "list";
    CommonOpts i_opts;
    c_ingr->add_option("action", i_action)
        ->check(CLI::IsMember({"list", "validate"}));
    add_common(c_ingr, i_opts, false);

    std::vector<std::string> args = argv;
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_construct->parsed())
            return cmd_construct(kind, m, n, s, k, c_opts, out, err);
        if (c_verify->parsed()) {
            ArrayDocument probe = load_array_file(v_file);
            DesignParams p =
                params_for(probe, v_m, v_n, v_s, v_k, v_t, v_lambda);
            return cmd_verify(v_kind, v_file, p, v_diag, v_opts, out, err);
        }
        if (c_reduce->parsed())
            return cmd_reduce(r_file, r_m, r_n, r_s, r_k, r_opts, out, err);
        if (c_solve->parsed()) {
            SearchConstraints base;
            if (s_diagonal) {
                base.params = DesignParams{s_n, s_n, s_k, s_k, s_t, s_lambda};
                base.diagonal = true;
            } else {
                if (s_m == 0 || s_s == 0) {
                    err << "rectangular search needs -m and -s\n";
                    return kExitUsage;
                }
                base.params = DesignParams{s_m, s_n, s_s, s_k, s_t, s_lambda};
            }
            base.require_shiftable = s_shiftable;
            base.symmetry_breaking = !s_no_break;
            base.diagonal_major = s_diag_major;
            base.node_budget = s_opts.budget_nodes;
            base.time_budget_secs = s_opts.budget_secs;
            base.seed = s_seed;
            return cmd_solve(s_kind, base, s_opts, out, err);
        }
        if (c_show->parsed()) return cmd_show(sh_file, out);
        if (c_ingr->parsed()) return cmd_ingredients(i_action, i_opts, out, err);
    } catch (const NotCoveredError& e) {
        err << "not covered: " << e.what() << "\n";
        return kExitNotCovered;
    } catch (const IngredientUnavailableError& e) {
        err << "ingredient unavailable: " << e.what() << "\n";
        return kExitNotCovered;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionMismatchError& e) {
        err << "dimension mismatch: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace heffter
