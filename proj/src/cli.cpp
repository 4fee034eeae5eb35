#include "twistgen/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistgen/report.hpp"

namespace twistgen {

namespace {

namespace fs = std::filesystem;

struct Common {
    int genus = 0;
    std::string catalog_path;
    std::string claims_path;
    bool json = false;
    bool strict_signs = false;
    bool f3 = false;
    std::uint64_t cap = 1000000;
    std::uint64_t max_points = 1u << 19;
};

std::string data_dir() {
    const char* env = std::getenv("TWISTGEN_DATA");
    return env ? env : "";
}

Catalog resolve_catalog(const Common& c) {
    if (!c.catalog_path.empty()) {
        std::ifstream in(c.catalog_path);
        if (!in) throw error("cannot open catalog file " + c.catalog_path);
        return load_catalog(in);
    }
    std::string dd = data_dir();
    if (!dd.empty()) {
        fs::path p = fs::path(dd) / "catalogs" / ("g" + std::to_string(c.genus) + ".catalog");
        if (fs::exists(p)) {
            std::ifstream in(p);
            return load_catalog(in);
        }
    }
    return builtin_catalog(c.genus);
}

ReplaySuite resolve_suite(const Common& c, const std::string& id) {
    if (!c.claims_path.empty()) {
        std::ifstream in(c.claims_path);
        if (!in) throw error("cannot open claim file " + c.claims_path);
        return load_suite(in);
    }
    std::string dd = data_dir();
    if (!dd.empty()) {
        fs::path p = fs::path(dd) / "claims" / (id + "-g" + std::to_string(c.genus) + ".claims");
        if (fs::exists(p)) {
            std::ifstream in(p);
            return load_suite(in);
        }
    }
    return builtin_suite(id, c.genus);
}

VerifyOptions verify_options(const Common& c) {
    VerifyOptions opt;
    opt.strict_signs = c.strict_signs;
    opt.enable_f3 = c.f3;
    opt.group.closure_cap = c.cap;
    opt.group.max_points = c.max_points;
    return opt;
}

// a throwaway suite that carries macros and sets for ad-hoc commands
ReplaySuite adhoc_suite(const Common& c, const std::string& macro_suite) {
    ReplaySuite s;
    s.id = "adhoc";
    s.genus = c.genus;
    if (!macro_suite.empty())
        s.macros = builtin_macros(macro_suite, SurfaceParams::for_genus(c.genus));
    return s;
}

void print_claim_text(std::ostream& out, const ClaimResult& r) {
    out << "  [" << status_name(r.status) << "] " << r.id;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
}

int finish_claims(const Common& c, std::ostream& out, const Catalog& cat, const SuiteReport& rep,
                  const std::string& command) {
    if (c.json) {
        Json j = report_shell(cat, command);
        j["payload"] = suite_report_json(rep);
        j["timings"] = {{"total_ms", rep.total_ms}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.results) print_claim_text(out, r);
        out << "summary: " << rep.passed << " pass, " << rep.failed << " fail, " << rep.up_to_sign
            << " pass-up-to-sign, " << rep.skipped << " skipped\n";
    }
    if (rep.failed > 0) return 1;
    if (c.strict_signs && rep.up_to_sign > 0) return 1;
    return 0;
}

std::vector<std::string> split_words(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// named set lookup across the genus's builtin suites, or inline words
std::pair<std::vector<std::string>, MacroTable> resolve_set(const Common& c, const std::string& name) {
    for (const auto& sid : suite_ids_for(c.genus)) {
        ReplaySuite s = builtin_suite(sid, c.genus);
        if (const NamedSet* ns = find_set(s, name)) return {ns->words, s.macros};
    }
    if (name.find(',') != std::string::npos || name.find('*') != std::string::npos ||
        std::isupper(static_cast<unsigned char>(name[0])))
        return {split_words(name), MacroTable{}};
    throw unknown_name_error("generator set " + name);
}

int cmd_catalog_validate(const Common& c, std::ostream& out) {
    Catalog cat = resolve_catalog(c);
    ValidationReport rep = validate_catalog(cat);
    if (c.json) {
        Json j = report_shell(cat, "catalog-validate");
        j["payload"] = validation_report_json(rep);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& e : rep.entries)
            if (!e.ok) out << "  FAIL " << e.check << (e.detail.empty() ? "" : " -- " + e.detail) << "\n";
        out << "checks: " << rep.entries.size() << ", failures: " << rep.failures << "\n";
    }
    return rep.failures == 0 ? 0 : 1;
}

int cmd_eval(const Common& c, std::ostream& out, const std::string& text, const std::string& coeff,
             const std::string& macro_suite) {
    Catalog cat = resolve_catalog(c);
    ReplaySuite s = adhoc_suite(c, macro_suite);
    Word w = parse_word(text, s.macros);
    if (c.json) {
        Json j = report_shell(cat, "eval");
        Json p;
        p["word"] = print_word(w);
        if (coeff == "q") {
            IntMat m = evaluate_q(cat, w);
            p["matrix"] = format_matrix(m);
            p["det"] = d_value(cat, w);
        } else if (coeff == "f2") {
            F2Mat m = evaluate_f2(cat, w);
            p["matrix"] = format_matrix(m);
            p["orthogonal"] = m.transpose().mul(m).is_identity();
        } else {
            int pr = std::stoi(coeff.substr(1));
            p["matrix"] = format_matrix(evaluate_fp(cat, w, pr));
        }
        j["payload"] = p;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "word: " << print_word(w) << "\n";
    if (coeff == "q") {
        IntMat m = evaluate_q(cat, w);
        out << "matrix (rational, dim " << m.n << "): " << format_matrix(m) << "\n";
        out << "det: " << (d_value(cat, w) > 0 ? "+1" : "-1") << "\n";
        F2Mat m2 = evaluate_f2(cat, w);
        out << "f2 orthogonal: " << (m2.transpose().mul(m2).is_identity() ? "yes" : "no") << "\n";
    } else if (coeff == "f2") {
        F2Mat m = evaluate_f2(cat, w);
        out << "matrix (F2, dim " << m.n << "): " << format_matrix(m) << "\n";
        out << "f2 orthogonal: " << (m.transpose().mul(m).is_identity() ? "yes" : "no") << "\n";
    } else {
        int pr = std::stoi(coeff.substr(1));
        FpMat m = evaluate_fp(cat, w, pr);
        out << "matrix (F" << pr << ", dim " << m.n << "): " << format_matrix(m) << "\n";
    }
    return 0;
}

int cmd_check(const Common& c, std::ostream& out, const std::string& kind,
              const std::vector<std::string>& args, const std::string& macro_suite) {
    Catalog cat = resolve_catalog(c);
    ReplaySuite s = adhoc_suite(c, macro_suite);
    Claim cl;
    cl.id = "adhoc-" + kind;
    if (kind == "involution") {
        cl.kind = ClaimKind::involution;
        cl.word = args.at(0);
    } else if (kind == "identity") {
        cl.kind = ClaimKind::identity;
        cl.lhs = args.at(0);
        cl.rhs = args.at(1);
    } else if (kind == "dvalue") {
        cl.kind = ClaimKind::d_value;
        cl.word = args.at(0);
        cl.expect = std::stoi(args.at(1));
    } else if (kind == "image") {
        cl.kind = ClaimKind::curve_image;
        cl.word = args.at(0);
        cl.curve = args.at(1);
        cl.target = args.at(2);
    } else {
        throw error("unknown check kind " + kind +
                    " (expected involution, identity, dvalue or image)");
    }
    SuiteReport rep;
    rep.suite = "adhoc";
    rep.genus = c.genus;
    ClaimResult r = run_claim(cat, s, cl, verify_options(c));
    rep.total_ms = r.millis;
    switch (r.status) {
        case ClaimStatus::pass: ++rep.passed; break;
        case ClaimStatus::fail: ++rep.failed; break;
        case ClaimStatus::pass_up_to_sign: ++rep.up_to_sign; break;
        case ClaimStatus::skipped: ++rep.skipped; break;
    }
    rep.results.push_back(r);
    int code = finish_claims(c, out, cat, rep, "check");
    if (code == 0 && r.status == ClaimStatus::skipped) return 2;
    return code;
}

int cmd_replay(const Common& c, std::ostream& out, const std::string& suite_id) {
    Catalog cat = resolve_catalog(c);
    ReplaySuite s = resolve_suite(c, suite_id);
    SuiteReport rep = run_suite(cat, s, verify_options(c));
    return finish_claims(c, out, cat, rep, "replay " + suite_id);
}

int cmd_gens(const Common& c, std::ostream& out, const std::string& set_a, const std::string& set_b,
             const std::string& coeff) {
    Catalog cat = resolve_catalog(c);
    auto [wa, ma] = resolve_set(c, set_a);
    auto [wb, mb] = resolve_set(c, set_b);
    GroupOptions gopt;
    gopt.closure_cap = c.cap;
    gopt.max_points = c.max_points;
    bool eq = false;
    if (coeff == "f2") {
        std::vector<F2Mat> ga, gb;
        for (const auto& w : wa) ga.push_back(evaluate_f2(cat, parse_word(w, ma)));
        for (const auto& w : wb) gb.push_back(evaluate_f2(cat, parse_word(w, mb)));
        eq = same_subgroup(ga, gb, gopt);
    } else if (coeff == "f3" || coeff == "f5" || coeff == "f7") {
        int p = std::stoi(coeff.substr(1));
        std::vector<FpMat> ga, gb;
        for (const auto& w : wa) ga.push_back(evaluate_fp(cat, parse_word(w, ma), p));
        for (const auto& w : wb) gb.push_back(evaluate_fp(cat, parse_word(w, mb), p));
        eq = same_subgroup_fp(ga, gb, p, gopt);
    } else {
        throw error("gens requires a finite coefficient system (f2, f3, f5, f7)");
    }
    if (c.json) {
        Json j = report_shell(cat, "gens");
        j["payload"] = {{"set_a", set_a},
                        {"set_b", set_b},
                        {"coeff", coeff},
                        {"equal", eq},
                        {"meaning", "necessary condition at F2 level"}};
        out << j.dump(2) << "\n";
    } else {
        out << "images generate " << (eq ? "the same subgroup" : "different subgroups") << " over "
            << coeff << "\n";
        out << "note: equality is a necessary condition at F2 level, not a proof of the statement\n";
    }
    return eq ? 0 : 1;
}

int cmd_group_order(const Common& c, std::ostream& out, const std::string& set_name,
                    const std::string& coeff, bool brute) {
    Catalog cat = resolve_catalog(c);
    auto [ws, mt] = resolve_set(c, set_name);
    GroupOptions gopt;
    gopt.closure_cap = c.cap;
    gopt.max_points = c.max_points;
    std::string order_str;
    if (coeff == "f2") {
        std::vector<F2Mat> gs;
        for (const auto& w : ws) gs.push_back(evaluate_f2(cat, parse_word(w, mt)));
        if (brute) {
            order_str = std::to_string(brute_force_closure(gs, gopt.closure_cap).size());
        } else {
            F2Chain ch = build_chain(gs, gopt);
            order_str = ch.order().str();
        }
    } else {
        int p = std::stoi(coeff.substr(1));
        std::vector<FpMat> gs;
        for (const auto& w : ws) gs.push_back(evaluate_fp(cat, parse_word(w, mt), p));
        if (brute) {
            order_str = std::to_string(brute_force_closure_fp(gs, p, gopt.closure_cap).size());
        } else {
            FpChain ch = build_chain_fp(gs, p, gopt);
            order_str = ch.order().str();
        }
    }
    if (c.json) {
        Json j = report_shell(cat, "group-order");
        j["payload"] = {{"set", set_name}, {"coeff", coeff}, {"order", order_str}, {"method", brute ? "closure" : "chain"}};
        out << j.dump(2) << "\n";
    } else {
        out << "order of <" << set_name << "> over " << coeff << ": " << order_str << "\n";
    }
    return 0;
}

int cmd_list_suites(const Common& c, std::ostream& out) {
    Catalog cat = resolve_catalog(c);
    auto ids = suite_ids_for(c.genus);
    if (c.json) {
        Json j = report_shell(cat, "list-suites");
        j["payload"] = ids;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& id : ids) out << id << "\n";
    }
    return 0;
}

int cmd_dump_data(std::ostream& out, const std::string& dir, int gmin, int gmax) {
    fs::create_directories(fs::path(dir) / "catalogs");
    fs::create_directories(fs::path(dir) / "claims");
    for (int g = gmin; g <= gmax; ++g) {
        Catalog cat = builtin_catalog(g);
        std::ofstream cf(fs::path(dir) / "catalogs" / ("g" + std::to_string(g) + ".catalog"));
        cf << serialize_catalog(cat);
        for (const auto& sid : suite_ids_for(g)) {
            ReplaySuite s = builtin_suite(sid, g);
            std::ofstream sf(fs::path(dir) / "claims" / (sid + "-g" + std::to_string(g) + ".claims"));
            sf << serialize_suite(s);
        }
    }
    out << "wrote catalogs and claim files for genus " << gmin << ".." << gmax << " under " << dir
        << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification toolkit for involution generating sets of twist subgroups"};
    app.require_subcommand(1);

    Common c;
    app.add_option("--genus,-g", c.genus, "surface genus (>= 5)");
    app.add_option("--catalog", c.catalog_path, "catalog file (default: builtin)");
    app.add_option("--claims", c.claims_path, "claim file for replay (default: builtin)");
    app.add_flag("--json", c.json, "machine-readable JSON report");
    app.add_flag("--strict-signs", c.strict_signs, "treat pass-up-to-sign as failure (exit 1)");
    app.add_flag("--f3", c.f3, "also run generation claims over F3");
    app.add_option("--cap", c.cap, "closure cap for the brute-force oracle");
    app.add_option("--max-points", c.max_points, "largest permitted point set for chains");

    auto* validate = app.add_subcommand("catalog-validate", "validate a catalog");
    std::string eval_word, eval_coeff = "q", macro_suite;
    auto* eval = app.add_subcommand("eval", "evaluate a word in the homology representation");
    eval->add_option("word", eval_word, "word over the generator alphabet")->required();
    eval->add_option("--coeff", eval_coeff, "coefficients: q, f2, f3, f5, f7");
    eval->add_option("--suite", macro_suite, "macro scope (theorem suite id)");
    std::string check_kind;
    std::vector<std::string> check_args;
    auto* check = app.add_subcommand("check", "check a single ad-hoc claim");
    check->add_option("kind", check_kind, "involution | identity | dvalue | image")->required();
    check->add_option("args", check_args, "claim arguments")->expected(-1);
    check->add_option("--suite", macro_suite, "macro scope (theorem suite id)");
    std::string replay_suite;
    auto* replay = app.add_subcommand("replay", "replay a per-theorem claim suite");
    replay->add_option("suite", replay_suite, "suite id (see list-suites)")->required();
    std::string gens_a, gens_b, gens_coeff = "f2";
    auto* gens = app.add_subcommand("gens", "compare generated subgroups over a finite field");
    gens->add_option("seta", gens_a, "named set or comma-separated words")->required();
    gens->add_option("setb", gens_b, "named set or comma-separated words")->required();
    gens->add_option("--coeff", gens_coeff, "f2 (default), f3, f5, f7");
    std::string order_set, order_coeff = "f2";
    bool order_brute = false;
    auto* gorder = app.add_subcommand("group-order", "order of the group generated by a set's images");
    gorder->add_option("set", order_set, "named set or comma-separated words")->required();
    gorder->add_option("--coeff", order_coeff, "f2 (default), f3, f5, f7");
    gorder->add_flag("--brute", order_brute, "use the breadth-first closure oracle");
    auto* list = app.add_subcommand("list-suites", "list suites applicable at this genus");
    std::string dump_dir = "data";
    int dump_min = 5, dump_max = 20;
    auto* dump = app.add_subcommand("dump-data", "write builtin catalogs and claim files");
    dump->add_option("--out", dump_dir, "output directory");
    dump->add_option("--min-genus", dump_min, "first genus");
    dump->add_option("--max-genus", dump_max, "last genus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (dump->parsed()) return cmd_dump_data(out, dump_dir, dump_min, dump_max);
        if (c.genus == 0) {
            err << "error: --genus is required\n";
            return 2;
        }
        if (validate->parsed()) return cmd_catalog_validate(c, out);
        if (eval->parsed()) return cmd_eval(c, out, eval_word, eval_coeff, macro_suite);
        if (check->parsed()) return cmd_check(c, out, check_kind, check_args, macro_suite);
        if (replay->parsed()) return cmd_replay(c, out, replay_suite);
        if (gens->parsed()) return cmd_gens(c, out, gens_a, gens_b, gens_coeff);
        if (gorder->parsed()) return cmd_group_order(c, out, order_set, order_coeff, order_brute);
        if (list->parsed()) return cmd_list_suites(c, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace twistgen
