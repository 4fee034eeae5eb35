#include "twistgen/words.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace twistgen {

Word reduce_word(const std::vector<Factor>& factors) {
    Word out;
    for (const auto& f : factors) {
        if (f.exp == 0) continue;
        if (!out.factors.empty() && out.factors.back().gen == f.gen) {
            out.factors.back().exp += f.exp;
            if (out.factors.back().exp == 0) out.factors.pop_back();
        } else {
            out.factors.push_back(f);
        }
    }
    return out;
}

Word multiply(const Word& u, const Word& v) {
    std::vector<Factor> fs = u.factors;
    fs.insert(fs.end(), v.factors.begin(), v.factors.end());
    return reduce_word(fs);
}

Word inverse(const Word& u) {
    std::vector<Factor> fs;
    for (auto it = u.factors.rbegin(); it != u.factors.rend(); ++it)
        fs.push_back({it->gen, -it->exp});
    return reduce_word(fs);
}

Word conjugate(const Word& u, const Word& by) {
    return multiply(multiply(by, u), inverse(by));
}

Word word_power(const Word& u, int e) {
    Word base = (e < 0) ? inverse(u) : u;
    int n = (e < 0) ? -e : e;
    Word out;
    for (int i = 0; i < n; ++i) out = multiply(out, base);
    return out;
}

std::string print_word(const Word& w) {
    if (w.factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) os << "*";
        os << w.factors[i].gen;
        if (w.factors[i].exp != 1) os << "^" << w.factors[i].exp;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    const MacroTable& macros;
    std::size_t pos = 0;
    std::set<std::string> expanding;  // macro cycle detection

    Parser(const std::string& t, const MacroTable& m) : text(t), macros(m) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, 1, pos + 1);
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected identifier");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer exponent");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        int v = std::stoi(text.substr(start, pos - start));
        if (v == 0) fail("zero exponent is not allowed");
        return v;
    }

    Word expand(const std::string& name) {
        auto it = macros.defs.find(name);
        if (it == macros.defs.end()) return Word{{Factor{name, 1}}};
        if (expanding.count(name)) throw error("macro cycle through '" + name + "'");
        expanding.insert(name);
        Word out;
        for (const auto& f : it->second.factors) {
            Word sub = expand(f.gen);
            out = multiply(out, word_power(sub, f.exp));
        }
        expanding.erase(name);
        return out;
    }

    Word term() {
        skip_ws();
        if (peek('(')) {
            expect('(');
            Word w = word();
            expect(')');
            return w;
        }
        std::string name = ident();
        int e = 1;
        if (peek('^')) {
            expect('^');
            e = integer();
        }
        Word base = expand(name);
        return word_power(base, e);
    }

    Word word() {
        Word out = term();
        while (peek('*')) {
            expect('*');
            out = multiply(out, term());
        }
        return out;
    }

    Word parse() {
        Word w = word();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return w;
    }
};

std::string idx(const std::string& base, int i, int r) {
    return base + std::to_string(((i - 1) % r + r) % r + 1);
}

Word w_of(const std::string& text) {
    MacroTable empty;
    return parse_word(text, empty);
}

}  // namespace

Word parse_word(const std::string& text, const MacroTable& macros) {
    Parser p(text, macros);
    return p.parse();
}

MacroTable builtin_macros(const std::string& suite, const SurfaceParams& sp) {
    MacroTable t;
    t.scope = suite;
    int r = sp.r;
    int g = sp.genus;
    auto def = [&](const std::string& n, const std::string& w) { t.defs[n] = w_of(w); };
    auto C = [&](int i) { return idx("C", i, r); };
    auto B = [&](int i) { return idx("B", i, r); };
    auto A = [&](int i) { return idx("A", i, r); };

    if (suite == "g12") {
        if (g != 12) throw applicability_error("suite g12 requires genus 12");
        def("R", "rho2*rho1");
        def("E1", "A1*B2*C4*A3");
        def("E2", "A2*B3*C5*A4");
        def("E3", "B2*A3*C5*A4");
        def("E4", "A3*B4*C1*A5");
        def("E5", "A3*A4*B2*A5");
        def("E6", "A4*A5*B3*A1");
        def("E7", "A4*A5*A3*A1");
        def("E8", "A1*A2*C4*B3");
        def("E9", "A3*A4*C1*B5");
        def("E10", "B3*A4*C1*C4");
        return t;
    }
    if (suite == "r-odd") {
        if (!sp.even || r < 7 || r % 2 == 0)
            throw applicability_error("suite r-odd requires even genus with r odd, r >= 7");
        int h = (r + 3) / 2;
        def("R", "rho2*rho1");
        def("G1", "A1*B2*" + C(h) + "*A3");
        def("G2", "A2*B3*" + C(h + 1) + "*A4");
        def("G3", "B2*A3*" + C(h + 1) + "*A4");
        def("G4", "B3*A4*" + C(h + 2) + "*A5");
        def("G5", "A3*A4*" + C(h + 2) + "*A5");
        if (r > 7) {
            def("G6", B(h) + "*" + A(h + 1) + "*C2*" + A(h + 2));
            def("G7", B(h) + "*" + A(h + 1) + "*B3*" + A(h + 2));
            def("G8", B(h + 1) + "*" + A(h + 2) + "*C3*" + A(h + 3));
            def("G9", B(h + 1) + "*" + A(h + 2) + "*B3*" + A(h + 3));
        } else {
            def("G6", "B5*A6*C2*A7");
            def("G7", "A5*A6*B3*A7");  // r=7 reading of the stated special case
            def("G8", "B6*A7*C3*A1");
            def("G9", "B6*A7*B3*A1");
        }
        return t;
    }
    if (suite == "r-even" || suite == "odd-4k1") {
        bool ok = (suite == "r-even") ? (sp.even && r >= 6 && r % 2 == 0)
                                      : (!sp.even && g % 4 == 1 && (g - 1) / 4 >= 3);
        if (!ok)
            throw applicability_error(suite == "r-even"
                                          ? "suite r-even requires even genus with r even, r >= 6"
                                          : "suite odd-4k1 requires g = 4k+1 with k >= 3");
        def("R", "rho2*rho1");
        def("H1", "A2*" + C(r / 2) + "*" + B((r + 4) / 2) + "*" + C((r + 6) / 2));
        def("H2", "A3*" + C((r + 2) / 2) + "*" + B((r + 6) / 2) + "*" + C((r + 8) / 2));
        def("H3", "A3*" + B((r + 4) / 2) + "*" + C((r + 6) / 2) + "*" + C((r + 8) / 2));
        def("H4", "A4*" + B((r + 6) / 2) + "*" + C((r + 8) / 2) + "*" + C((r + 10) / 2));
        def("H5", "A4*" + C((r + 6) / 2) + "*" + C((r + 8) / 2) + "*" + C((r + 10) / 2));
        def("H6", B((r + 6) / 2) + "*" + B(r / 2) + "*A2*" + B((r + 4) / 2));
        def("H7", A(r / 2) + "*" + B(r - 2) + "*" + B(r) + "*B1");
        def("H8", B(r / 2) + "*" + B(r - 2) + "*" + B(r) + "*B1");
        return t;
    }
    if (suite == "odd-4k1-tau" || suite == "odd-4k3" || suite == "g7") {
        bool ok = (suite == "odd-4k1-tau") ? (!sp.even && g % 4 == 1)
                  : (suite == "odd-4k3")   ? (!sp.even && g % 4 == 3 && g >= 11)
                                           : (g == 7);
        if (!ok) throw applicability_error("suite " + suite + " not applicable at genus " + std::to_string(g));
        def("T", "tau1*tau2");
        return t;
    }
    if (suite == "g5g9") {
        if (g != 5 && g != 9) throw applicability_error("suite g5g9 requires genus 5 or 9");
        int k = (g - 1) / 4;
        std::string s = "B" + std::to_string(2 * k);
        for (int i = 2 * k - 1; i >= 1; --i) s += "*C" + std::to_string(i) + "*B" + std::to_string(i);
        s += "*A1";
        def("S", s);
        def("T", "tau1*tau2");
        return t;
    }
    if (suite == "gensets-even") {
        if (!sp.even) throw applicability_error("suite gensets-even requires even genus");
        if (r >= 3) def("R", "rho2*rho1");
        return t;
    }
    if (suite == "gensets-odd") {
        if (sp.even) throw applicability_error("suite gensets-odd requires odd genus");
        def("R", "rho2*rho1");
        def("T", "tau1*tau2");
        return t;
    }
    if (suite == "g10" || suite == "g8" || suite == "g6") {
        int want = (suite == "g10") ? 10 : (suite == "g8") ? 8 : 6;
        if (g != want) throw applicability_error("suite " + suite + " requires genus " + std::to_string(want));
        return t;
    }
    throw unknown_name_error("suite " + suite);
}

}  // namespace twistgen
