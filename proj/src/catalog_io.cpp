#include <istream>
#include <sstream>

#include "twistgen/catalog.hpp"

namespace twistgen {

namespace {

void put_vec(std::ostream& os, const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
}

struct Cursor {
    std::istream& in;
    std::size_t line = 0;
    std::string cur;

    bool next() {
        while (std::getline(in, cur)) {
            ++line;
            std::size_t a = cur.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t h = cur.find('#');
            std::string body = (h == std::string::npos) ? cur : cur.substr(0, h);
            std::size_t b = body.find_last_not_of(" \t\r");
            if (b == std::string::npos || a > b) continue;
            cur = body.substr(a, b - a + 1);
            return true;
        }
        return false;
    }
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::int64_t to_int(const std::string& s, std::size_t line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected integer, got '" + s + "'", line, 1);
    }
}

}  // namespace

std::string serialize_catalog(const Catalog& c) {
    std::ostringstream os;
    os << "# twistgen catalog\n";
    os << "schema_version " << c.schema_version << "\n";
    os << "genus " << c.params.genus << "\n\n";
    for (const auto& cv : c.curves) {
        os << "curve " << cv.name << "\n";
        os << "  sided " << (cv.two_sided ? "two" : "one") << "\n";
        os << "  lift ";
        put_vec(os, std::vector<std::int64_t>(cv.lift.begin(), cv.lift.end()));
        os << "\n  pairing ";
        put_vec(os, cv.pairing);
        os << "\nend\n";
    }
    os << "\n";
    for (const auto& sy : c.symmetries) {
        os << "symmetry " << sy.name << "\n";
        os << "  d " << (sy.declared_d > 0 ? "+1" : "-1") << "\n";
        int g = c.params.genus;
        for (int i = 0; i < g; ++i) {
            os << "  act ";
            std::vector<std::int64_t> row(sy.action.begin() + static_cast<std::ptrdiff_t>(i) * g,
                                          sy.action.begin() + static_cast<std::ptrdiff_t>(i + 1) * g);
            put_vec(os, row);
            os << "\n";
        }
        for (const auto& cl : sy.curve_claims)
            os << "  maps " << cl.from << " " << cl.to << " " << (cl.sign > 0 ? "+1" : "-1") << "\n";
        if (sy.provisional) os << "  provisional\n";
        if (!sy.note.empty()) os << "  note " << sy.note << "\n";
        os << "end\n";
    }
    os << "\n";
    for (const auto& [a, b] : c.disjoint_pairs) os << "disjoint " << a << " " << b << "\n";
    return os.str();
}

Catalog load_catalog(std::istream& in) {
    Catalog c;
    Cursor cur{in};
    bool have_version = false, have_genus = false;
    int g = 0;
    while (cur.next()) {
        auto toks = split(cur.cur);
        const std::string& key = toks[0];
        if (key == "schema_version") {
            if (toks.size() != 2) throw parse_error("schema_version needs one value", cur.line, 1);
            auto v = to_int(toks[1], cur.line);
            if (v != 1) throw error("unsupported catalog schema_version " + std::to_string(v));
            c.schema_version = static_cast<int>(v);
            have_version = true;
        } else if (key == "genus") {
            if (toks.size() != 2) throw parse_error("genus needs one value", cur.line, 1);
            g = static_cast<int>(to_int(toks[1], cur.line));
            c.params = SurfaceParams::for_genus(g);
            have_genus = true;
        } else if (key == "curve") {
            if (!have_genus) throw parse_error("curve block before genus", cur.line, 1);
            if (toks.size() != 2) throw parse_error("curve needs a name", cur.line, 1);
            CurveSpec cs;
            cs.name = toks[1];
            bool closed = false;
            while (cur.next()) {
                auto t = split(cur.cur);
                if (t[0] == "end") { closed = true; break; }
                if (t[0] == "sided") {
                    if (t.size() != 2 || (t[1] != "one" && t[1] != "two"))
                        throw parse_error("sided must be 'one' or 'two'", cur.line, 1);
                    cs.two_sided = (t[1] == "two");
                } else if (t[0] == "lift" || t[0] == "pairing") {
                    if (static_cast<int>(t.size()) != g + 1)
                        throw parse_error(t[0] + " needs " + std::to_string(g) + " integers", cur.line, 1);
                    std::vector<std::int64_t> v;
                    for (std::size_t i = 1; i < t.size(); ++i) v.push_back(to_int(t[i], cur.line));
                    if (t[0] == "lift") cs.lift.assign(v.begin(), v.end());
                    else cs.pairing = std::move(v);
                } else {
                    throw parse_error("unknown curve field '" + t[0] + "'", cur.line, 1);
                }
            }
            if (!closed) throw parse_error("unterminated curve block", cur.line, 1);
            if (static_cast<int>(cs.lift.size()) != g || static_cast<int>(cs.pairing.size()) != g)
                throw parse_error("curve " + cs.name + " missing lift or pairing", cur.line, 1);
            if (c.find_curve(cs.name)) throw invariant_error("duplicate curve name " + cs.name);
            // type invariants
            bool even_weight = (f2_weight(cs.lift) % 2 == 0);
            if (cs.two_sided != even_weight)
                throw invariant_error("curve " + cs.name + ": sidedness contradicts F2 weight");
            for (int i = 0; i < g; ++i) {
                long long want = ((cs.lift[static_cast<std::size_t>(i)] % 2) + 2) % 2;
                long long got = ((cs.pairing[static_cast<std::size_t>(i)] % 2) + 2) % 2;
                if (want != got)
                    throw invariant_error("curve " + cs.name + ": pairing row mismatches mod-2 pairing");
            }
            if (cs.two_sided) {
                std::int64_t s = 0, q = 0;
                for (int i = 0; i < g; ++i) {
                    s += cs.pairing[static_cast<std::size_t>(i)];
                    q += cs.pairing[static_cast<std::size_t>(i)] * cs.lift[static_cast<std::size_t>(i)];
                }
                if (s != 0) throw invariant_error("curve " + cs.name + ": pairing row does not kill w");
                if (q != 0) throw invariant_error("curve " + cs.name + ": pairing row does not kill the lift");
            }
            c.curves.push_back(std::move(cs));
        } else if (key == "symmetry") {
            if (!have_genus) throw parse_error("symmetry block before genus", cur.line, 1);
            if (toks.size() != 2) throw parse_error("symmetry needs a name", cur.line, 1);
            SymmetrySpec sy;
            sy.name = toks[1];
            bool closed = false;
            while (cur.next()) {
                auto t = split(cur.cur);
                if (t[0] == "end") { closed = true; break; }
                if (t[0] == "d") {
                    if (t.size() != 2) throw parse_error("d needs one value", cur.line, 1);
                    auto v = to_int(t[1], cur.line);
                    if (v != 1 && v != -1) throw parse_error("d must be +1 or -1", cur.line, 1);
                    sy.declared_d = static_cast<int>(v);
                } else if (t[0] == "act") {
                    if (static_cast<int>(t.size()) != g + 1)
                        throw parse_error("act rows need " + std::to_string(g) + " integers", cur.line, 1);
                    for (std::size_t i = 1; i < t.size(); ++i) sy.action.push_back(to_int(t[i], cur.line));
                } else if (t[0] == "maps") {
                    if (t.size() != 4) throw parse_error("maps needs: from to sign", cur.line, 1);
                    auto v = to_int(t[3], cur.line);
                    if (v != 1 && v != -1) throw parse_error("maps sign must be +1 or -1", cur.line, 1);
                    sy.curve_claims.push_back({t[1], t[2], static_cast<int>(v)});
                } else if (t[0] == "provisional") {
                    sy.provisional = true;
                } else if (t[0] == "note") {
                    sy.note = cur.cur.substr(5);
                } else {
                    throw parse_error("unknown symmetry field '" + t[0] + "'", cur.line, 1);
                }
            }
            if (!closed) throw parse_error("unterminated symmetry block", cur.line, 1);
            if (static_cast<int>(sy.action.size()) != g * g)
                throw parse_error("symmetry " + sy.name + " needs " + std::to_string(g) + " act rows", cur.line, 1);
            if (c.find_symmetry(sy.name)) throw invariant_error("duplicate symmetry name " + sy.name);
            c.symmetries.push_back(std::move(sy));
        } else if (key == "disjoint") {
            if (toks.size() != 3) throw parse_error("disjoint needs two curve names", cur.line, 1);
            c.disjoint_pairs.push_back({toks[1], toks[2]});
        } else {
            throw parse_error("unknown directive '" + key + "'", cur.line, 1);
        }
    }
    if (!have_version) throw error("catalog missing schema_version");
    if (!have_genus) throw error("catalog missing genus");
    // referential and action invariants enforced on load
    for (const auto& sy : c.symmetries) {
        IntMat m = sy.matrix(g);
        IntMat red(g - 1);
        for (int i = 0; i + 1 < g; ++i)
            for (int j = 0; j + 1 < g; ++j) red(i, j) = m(i, j) - m(g - 1, j);
        std::vector<Int> w(static_cast<std::size_t>(g), 1);
        auto mw = m.apply(w);
        bool plus = true, minus = true;
        for (auto& x : mw) {
            if (x != 1) plus = false;
            if (x != -1) minus = false;
        }
        if (!plus && !minus)
            throw invariant_error("symmetry " + sy.name + ": action does not preserve w");
        if (!red.mul(red).is_identity())
            throw invariant_error("symmetry " + sy.name + ": square is not the identity on homology");
        for (const auto& cl : sy.curve_claims) {
            if (!c.find_curve(cl.from) || !c.find_curve(cl.to))
                throw invariant_error("symmetry " + sy.name + ": claim references unknown curve");
        }
    }
    for (const auto& [a, b] : c.disjoint_pairs) {
        if (!c.find_curve(a) || !c.find_curve(b))
            throw invariant_error("disjoint pair references unknown curve");
        if (mod2_pairing(c.curve(a).lift, c.curve(b).lift) != 0)
            throw invariant_error("disjoint pair " + a + "," + b + " has odd mod-2 pairing");
    }
    return c;
}

Catalog load_catalog_string(const std::string& text) {
    std::istringstream is(text);
    return load_catalog(is);
}

void ValidationReport::add(const std::string& check, bool ok, const std::string& detail) {
    entries.push_back({check, ok, detail});
    if (!ok) ++failures;
}

ValidationReport validate_catalog(const Catalog& c) {
    ValidationReport rep;
    int g = c.params.genus;
    std::vector<Int> w(static_cast<std::size_t>(g), 1);

    for (const auto& cv : c.curves) {
        bool even_weight = (f2_weight(cv.lift) % 2 == 0);
        rep.add("curve/" + cv.name + "/sidedness", cv.two_sided == even_weight);
        bool pm = true;
        for (int i = 0; i < g; ++i) {
            long long a = ((cv.lift[static_cast<std::size_t>(i)] % 2) + 2) % 2;
            long long b = ((cv.pairing[static_cast<std::size_t>(i)] % 2) + 2) % 2;
            if (a != b) pm = false;
        }
        rep.add("curve/" + cv.name + "/pairing-mod2", pm);
        if (cv.two_sided) {
            std::int64_t s = 0, q = 0;
            for (int i = 0; i < g; ++i) {
                s += cv.pairing[static_cast<std::size_t>(i)];
                q += cv.pairing[static_cast<std::size_t>(i)] * cv.lift[static_cast<std::size_t>(i)];
            }
            rep.add("curve/" + cv.name + "/pairing-kills-w", s == 0);
            rep.add("curve/" + cv.name + "/pairing-kills-lift", q == 0);
        }
    }

    for (const auto& sy : c.symmetries) {
        IntMat m = sy.matrix(g);
        auto mw = m.apply(w);
        bool plus = true, minus = true;
        for (auto& x : mw) {
            if (x != 1) plus = false;
            if (x != -1) minus = false;
        }
        rep.add("symmetry/" + sy.name + "/w-preserved", plus || minus);
        if (!(plus || minus)) continue;
        IntMat red(g - 1);
        for (int i = 0; i + 1 < g; ++i)
            for (int j = 0; j + 1 < g; ++j) red(i, j) = m(i, j) - m(g - 1, j);
        rep.add("symmetry/" + sy.name + "/order-2", red.mul(red).is_identity());
        Int d = det_bareiss(red);
        rep.add("symmetry/" + sy.name + "/determinant",
                d == sy.declared_d, "det=" + d.str() + " declared=" + std::to_string(sy.declared_d));
        // F2: orthogonal for the identity form and fixes w
        F2Mat f2(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                if (sy.action[static_cast<std::size_t>(i) * g + j] & 1)
                    f2.cols[static_cast<std::size_t>(j)] |= (1ull << i);
        bool orth = f2.transpose().mul(f2).is_identity();
        std::uint64_t wf = (g == 64) ? ~0ull : ((1ull << g) - 1);
        rep.add("symmetry/" + sy.name + "/f2-orthogonal", orth);
        rep.add("symmetry/" + sy.name + "/f2-fixes-w", f2.apply(wf) == wf);
        for (const auto& cl : sy.curve_claims) {
            const auto* u = c.find_curve(cl.from);
            const auto* v = c.find_curve(cl.to);
            if (!u || !v) {
                rep.add("symmetry/" + sy.name + "/claim-" + cl.from + ">" + cl.to, false, "unknown curve");
                continue;
            }
            auto img = m.apply(std::vector<Int>(u->lift.begin(), u->lift.end()));
            auto ri = std::vector<Int>(static_cast<std::size_t>(g - 1));
            for (int i = 0; i + 1 < g; ++i) ri[static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(i)] - img[static_cast<std::size_t>(g - 1)];
            std::vector<Int> rt(static_cast<std::size_t>(g - 1));
            for (int i = 0; i + 1 < g; ++i)
                rt[static_cast<std::size_t>(i)] = Int(v->lift[static_cast<std::size_t>(i)]) - v->lift[static_cast<std::size_t>(g - 1)];
            bool cls_plus = (ri == rt);
            bool cls_minus = true;
            for (int i = 0; i + 1 < g; ++i)
                if (ri[static_cast<std::size_t>(i)] != -rt[static_cast<std::size_t>(i)]) cls_minus = false;
            bool ok = cls_plus || cls_minus;
            if (ok && u->two_sided && v->two_sided) {
                // the recorded sign is the twist conjugation sign
                IntMat tu = IntMat::identity(g), tv = IntMat::identity(g);
                for (int i = 0; i < g; ++i)
                    for (int j = 0; j < g; ++j) {
                        tu(i, j) += Int(u->lift[static_cast<std::size_t>(i)]) * u->pairing[static_cast<std::size_t>(j)];
                        tv(i, j) += Int(cl.sign) * Int(v->lift[static_cast<std::size_t>(i)]) * v->pairing[static_cast<std::size_t>(j)];
                    }
                ok = (m.mul(tu).mul(m) == tv);
            } else if (ok) {
                ok = (cl.sign > 0) ? cls_plus : cls_minus;
            }
            rep.add("symmetry/" + sy.name + "/claim-" + cl.from + ">" + cl.to, ok);
        }
    }

    for (const auto& [a, b] : c.disjoint_pairs) {
        const auto* ca = c.find_curve(a);
        const auto* cb = c.find_curve(b);
        bool ok = ca && cb && mod2_pairing(ca->lift, cb->lift) == 0;
        rep.add("disjoint/" + a + "," + b, ok);
    }
    return rep;
}

std::uint64_t catalog_digest(const Catalog& c) {
    std::string s = serialize_catalog(c);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace twistgen
