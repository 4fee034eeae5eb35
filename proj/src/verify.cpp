#include "twistgen/verify.hpp"

#include <chrono>
#include <istream>
#include <sstream>

namespace twistgen {

std::string kind_name(ClaimKind k) {
    switch (k) {
        case ClaimKind::involution: return "involution";
        case ClaimKind::identity: return "identity";
        case ClaimKind::curve_image: return "curve_image";
        case ClaimKind::d_value: return "d_value";
        case ClaimKind::generation: return "generation";
        case ClaimKind::catalog_action: return "catalog_action";
    }
    return "?";
}

ClaimKind kind_from_name(const std::string& s) {
    if (s == "involution") return ClaimKind::involution;
    if (s == "identity") return ClaimKind::identity;
    if (s == "curve_image") return ClaimKind::curve_image;
    if (s == "d_value") return ClaimKind::d_value;
    if (s == "generation") return ClaimKind::generation;
    if (s == "catalog_action") return ClaimKind::catalog_action;
    throw unknown_name_error("claim kind " + s);
}

std::string status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::pass_up_to_sign: return "pass-up-to-sign";
        case ClaimStatus::skipped: return "skipped";
    }
    return "?";
}

const NamedSet* find_set(const ReplaySuite& s, const std::string& name) {
    for (const auto& ns : s.sets)
        if (ns.name == name) return &ns;
    return nullptr;
}

Catalog bind_derived_curves(const Catalog& c, const ReplaySuite& s) {
    Catalog out = c;
    for (const auto& d : s.defines) {
        Word w = parse_word(d.word, s.macros);
        // transport class and pairing along the word on the x-lattice
        IntMat fwd = evaluate_x(out, w);
        IntMat bwd = evaluate_x(out, inverse(w));
        const CurveSpec& src = out.curve(d.source);
        CurveSpec nc;
        nc.name = d.name;
        nc.two_sided = src.two_sided;
        auto lift = fwd.apply(std::vector<Int>(src.lift.begin(), src.lift.end()));
        auto pair = bwd.apply_functional(std::vector<Int>(src.pairing.begin(), src.pairing.end()));
        nc.lift.resize(lift.size());
        nc.pairing.resize(pair.size());
        for (std::size_t i = 0; i < lift.size(); ++i) {
            nc.lift[i] = static_cast<std::int64_t>(lift[i]);
            nc.pairing[i] = static_cast<std::int64_t>(pair[i]);
        }
        if (out.find_curve(nc.name)) throw invariant_error("derived curve duplicates name " + nc.name);
        out.curves.push_back(std::move(nc));
    }
    return out;
}

namespace {

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

ClaimResult check_involution(const Catalog& c, const ReplaySuite& s, const Claim& cl) {
    ClaimResult r;
    r.id = cl.id;
    Word w = parse_word(cl.word, s.macros);
    IntMat mq = evaluate_q(c, w);
    F2Mat m2 = evaluate_f2(c, w);
    bool okq = mq.mul(mq).is_identity();
    bool ok2 = m2.mul(m2).is_identity();
    if (okq && ok2) {
        r.status = ClaimStatus::pass;
    } else {
        r.status = ClaimStatus::fail;
        r.detail = okq ? "square is not the identity over F2" : "square is not the identity over Q";
        r.witness = format_matrix(mq);
    }
    return r;
}

ClaimResult check_identity(const Catalog& c, const ReplaySuite& s, const Claim& cl) {
    ClaimResult r;
    r.id = cl.id;
    Word lhs = parse_word(cl.lhs, s.macros);
    Word rhs = parse_word(cl.rhs, s.macros);
    IntMat a = evaluate_q(c, lhs), b = evaluate_q(c, rhs);
    if (!(a == b)) {
        r.status = ClaimStatus::fail;
        r.detail = "sides differ over Q";
        r.witness = "lhs=" + format_matrix(a) + " rhs=" + format_matrix(b);
        return r;
    }
    F2Mat a2 = evaluate_f2(c, lhs), b2 = evaluate_f2(c, rhs);
    if (!(a2 == b2)) {
        r.status = ClaimStatus::fail;
        r.detail = "sides differ over F2";
        r.witness = "lhs=" + format_matrix(a2) + " rhs=" + format_matrix(b2);
        return r;
    }
    FpMat a3 = evaluate_fp(c, lhs, 3), b3 = evaluate_fp(c, rhs, 3);
    if (!(a3 == b3)) {
        r.status = ClaimStatus::fail;
        r.detail = "sides differ over F3";
        r.witness = "lhs=" + format_matrix(a3) + " rhs=" + format_matrix(b3);
        return r;
    }
    r.status = ClaimStatus::pass;
    return r;
}

ClaimResult check_image(const Catalog& c, const ReplaySuite& s, const Claim& cl) {
    ClaimResult r;
    r.id = cl.id;
    Word w = parse_word(cl.word, s.macros);
    auto img = image_of_class_q(c, w, cl.curve);
    auto tgt_red = reduce_rational(c.curve(cl.target).lift);
    std::vector<Int> tgt(tgt_red.begin(), tgt_red.end());
    bool plus = (img == tgt);
    bool minus = true;
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != -tgt[i]) { minus = false; break; }
    if (!plus && !minus) {
        r.status = ClaimStatus::fail;
        r.detail = "image is not +-" + cl.target + " over Q";
        r.witness = "image=" + vec_str(img);
        return r;
    }
    if (image_of_class_f2(c, w, cl.curve) != reduce_f2(c.curve(cl.target).lift)) {
        r.status = ClaimStatus::fail;
        r.detail = "image differs from " + cl.target + " over F2";
        return r;
    }
    r.status = plus ? ClaimStatus::pass : ClaimStatus::pass_up_to_sign;
    if (!plus) r.detail = "matches -" + cl.target + " (orientation convention)";
    return r;
}

ClaimResult check_dvalue(const Catalog& c, const ReplaySuite& s, const Claim& cl) {
    ClaimResult r;
    r.id = cl.id;
    Word w = parse_word(cl.word, s.macros);
    int d = d_value(c, w);
    if (d == cl.expect) {
        r.status = ClaimStatus::pass;
    } else {
        r.status = ClaimStatus::fail;
        r.detail = "D=" + std::to_string(d) + ", stated " + std::to_string(cl.expect);
    }
    return r;
}

ClaimResult check_generation(const Catalog& c, const ReplaySuite& s, const Claim& cl,
                             const VerifyOptions& opt) {
    ClaimResult r;
    r.id = cl.id;
    auto resolve = [&](const std::string& name) {
        const NamedSet* ns = find_set(s, name);
        if (!ns) throw unknown_name_error("generator set " + name);
        std::vector<F2Mat> out;
        for (const auto& ws : ns->words) out.push_back(evaluate_f2(c, parse_word(ws, s.macros)));
        return out;
    };
    auto ga = resolve(cl.set_a);
    auto gb = resolve(cl.set_b);
    bool eq = same_subgroup(ga, gb, opt.group);
    if (eq && opt.enable_f3 && c.params.genus - 1 <= opt.f3_max_dim) {
        const NamedSet* na = find_set(s, cl.set_a);
        const NamedSet* nb = find_set(s, cl.set_b);
        std::vector<FpMat> fa, fb;
        for (const auto& ws : na->words) fa.push_back(evaluate_fp(c, parse_word(ws, s.macros), 3));
        for (const auto& ws : nb->words) fb.push_back(evaluate_fp(c, parse_word(ws, s.macros), 3));
        eq = same_subgroup_fp(fa, fb, 3, opt.group);
        r.detail = eq ? "necessary condition at F2 level (and F3 level)"
                      : "F2 images agree but F3 images differ";
    } else {
        r.detail = eq ? "necessary condition at F2 level" : "the F2 images generate different groups";
    }
    r.status = eq ? ClaimStatus::pass : ClaimStatus::fail;
    return r;
}

ClaimResult check_action(const Catalog& c, const Claim& cl) {
    ClaimResult r;
    r.id = cl.id;
    const auto& sy = c.symmetry(cl.sym);
    int g = c.params.genus;
    auto xindex = [&](const std::string& name) {
        if (name.size() < 2 || name[0] != 'x') throw unknown_name_error(name);
        return std::stoi(name.substr(1));
    };
    int from = xindex(cl.from), to = xindex(cl.to);
    bool ok = true;
    for (int i = 1; i <= g; ++i) {
        std::int64_t v = sy.action[static_cast<std::size_t>(i - 1) * g + (from - 1)];
        std::int64_t want = (i == to) ? 1 : 0;
        if ((v < 0 ? -v : v) != want) ok = false;
    }
    r.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
    if (!ok) r.detail = cl.sym + " does not map " + cl.from + " to +-" + cl.to;
    return r;
}

}  // namespace

ClaimResult run_claim(const Catalog& c, const ReplaySuite& s, const Claim& cl,
                      const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimResult r;
    if (!cl.skip_reason.empty()) {
        r.id = cl.id;
        r.status = ClaimStatus::skipped;
        r.detail = cl.skip_reason;
    } else {
        try {
            switch (cl.kind) {
                case ClaimKind::involution: r = check_involution(c, s, cl); break;
                case ClaimKind::identity: r = check_identity(c, s, cl); break;
                case ClaimKind::curve_image: r = check_image(c, s, cl); break;
                case ClaimKind::d_value: r = check_dvalue(c, s, cl); break;
                case ClaimKind::generation: r = check_generation(c, s, cl, opt); break;
                case ClaimKind::catalog_action: r = check_action(c, cl); break;
            }
        } catch (const error& e) {
            r.id = cl.id;
            r.status = ClaimStatus::skipped;
            r.detail = std::string("did not resolve: ") + e.what();
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

SuiteReport run_suite(const Catalog& c, const ReplaySuite& s, const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = s.id;
    rep.genus = s.genus;
    Catalog working = bind_derived_curves(c, s);
    for (const auto& cl : s.claims) {
        ClaimResult r = run_claim(working, s, cl, opt);
        rep.total_ms += r.millis;
        switch (r.status) {
            case ClaimStatus::pass: ++rep.passed; break;
            case ClaimStatus::fail: ++rep.failed; break;
            case ClaimStatus::pass_up_to_sign: ++rep.up_to_sign; break;
            case ClaimStatus::skipped: ++rep.skipped; break;
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

std::string serialize_suite(const ReplaySuite& s) {
    std::ostringstream os;
    os << "# twistgen claims\n";
    os << "schema_version 1\n";
    os << "suite " << s.id << "\n";
    os << "genus " << s.genus << "\n\n";
    for (const auto& [name, word] : s.macros.defs)
        os << "macro " << name << " " << print_word(word) << "\n";
    for (const auto& d : s.defines) os << "define " << d.name << " " << d.word << " " << d.source << "\n";
    for (const auto& ns : s.sets) {
        os << "set " << ns.name;
        for (const auto& w : ns.words) os << " " << w;
        os << "\n";
    }
    os << "\n";
    for (const auto& cl : s.claims) {
        os << "claim " << cl.id << "\n";
        os << "  kind " << kind_name(cl.kind) << "\n";
        switch (cl.kind) {
            case ClaimKind::involution:
                os << "  word " << cl.word << "\n";
                break;
            case ClaimKind::identity:
                os << "  lhs " << cl.lhs << "\n  rhs " << cl.rhs << "\n";
                break;
            case ClaimKind::curve_image:
                os << "  word " << cl.word << "\n  curve " << cl.curve << "\n  target " << cl.target << "\n";
                break;
            case ClaimKind::d_value:
                os << "  word " << cl.word << "\n  expect " << (cl.expect > 0 ? "+1" : "-1") << "\n";
                break;
            case ClaimKind::generation:
                os << "  seta " << cl.set_a << "\n  setb " << cl.set_b << "\n";
                break;
            case ClaimKind::catalog_action:
                os << "  sym " << cl.sym << "\n  from " << cl.from << "\n  to " << cl.to << "\n";
                break;
        }
        if (!cl.anchor.empty()) os << "  anchor " << cl.anchor << "\n";
        if (!cl.note.empty()) os << "  note " << cl.note << "\n";
        if (!cl.skip_reason.empty()) os << "  skip " << cl.skip_reason << "\n";
        os << "end\n";
    }
    return os.str();
}

ReplaySuite load_suite(std::istream& in) {
    ReplaySuite s;
    std::string line;
    std::size_t lineno = 0;
    bool have_suite = false, have_genus = false;
    auto strip = [](std::string x) {
        std::size_t h = x.find('#');
        if (h == 0) x = "";
        std::size_t a = x.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        std::size_t b = x.find_last_not_of(" \t\r");
        return x.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string cur = strip(line);
        if (cur.empty()) continue;
        auto toks = split_ws(cur);
        if (toks[0] == "schema_version") {
            if (toks.size() != 2 || toks[1] != "1")
                throw error("unsupported claim-file schema_version");
        } else if (toks[0] == "suite") {
            s.id = toks.at(1);
            s.macros.scope = s.id;
            have_suite = true;
        } else if (toks[0] == "genus") {
            s.genus = std::stoi(toks.at(1));
            have_genus = true;
        } else if (toks[0] == "macro") {
            if (toks.size() != 3) throw parse_error("macro needs: name word", lineno, 1);
            s.macros.defs[toks[1]] = parse_word(toks[2]);
        } else if (toks[0] == "define") {
            if (toks.size() != 4) throw parse_error("define needs: name word source", lineno, 1);
            s.defines.push_back({toks[1], toks[2], toks[3]});
        } else if (toks[0] == "set") {
            if (toks.size() < 2) throw parse_error("set needs a name", lineno, 1);
            NamedSet ns;
            ns.name = toks[1];
            for (std::size_t i = 2; i < toks.size(); ++i) ns.words.push_back(toks[i]);
            s.sets.push_back(std::move(ns));
        } else if (toks[0] == "claim") {
            Claim cl;
            cl.id = toks.at(1);
            bool closed = false;
            while (std::getline(in, line)) {
                ++lineno;
                std::string c2 = strip(line);
                if (c2.empty()) continue;
                auto t = split_ws(c2);
                if (t[0] == "end") { closed = true; break; }
                std::string rest = c2.size() > t[0].size() ? c2.substr(t[0].size() + 1) : "";
                if (t[0] == "kind") cl.kind = kind_from_name(t.at(1));
                else if (t[0] == "word") cl.word = t.at(1);
                else if (t[0] == "lhs") cl.lhs = t.at(1);
                else if (t[0] == "rhs") cl.rhs = t.at(1);
                else if (t[0] == "curve") cl.curve = t.at(1);
                else if (t[0] == "target") cl.target = t.at(1);
                else if (t[0] == "sym") cl.sym = t.at(1);
                else if (t[0] == "from") cl.from = t.at(1);
                else if (t[0] == "to") cl.to = t.at(1);
                else if (t[0] == "seta") cl.set_a = t.at(1);
                else if (t[0] == "setb") cl.set_b = t.at(1);
                else if (t[0] == "expect") cl.expect = std::stoi(t.at(1));
                else if (t[0] == "anchor") cl.anchor = rest;
                else if (t[0] == "note") cl.note = rest;
                else if (t[0] == "skip") cl.skip_reason = rest;
                else throw parse_error("unknown claim field '" + t[0] + "'", lineno, 1);
            }
            if (!closed) throw parse_error("unterminated claim block", lineno, 1);
            s.claims.push_back(std::move(cl));
        } else {
            throw parse_error("unknown directive '" + toks[0] + "'", lineno, 1);
        }
    }
    if (!have_suite || !have_genus) throw error("claim file missing suite or genus");
    return s;
}

ReplaySuite load_suite_string(const std::string& text) {
    std::istringstream is(text);
    return load_suite(is);
}

}  // namespace twistgen
