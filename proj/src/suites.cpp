#include <algorithm>

#include "twistgen/verify.hpp"

// Builders for the thirteen replay suites.  Each claim carries an anchor
// locating the statement it re-checks in the source text; indices are taken
// mod r (1-based) so that the parametric families instantiate at any
// applicable genus.

namespace twistgen {

namespace {

std::string num(int i) { return std::to_string(i); }

struct SuiteBuilder {
    ReplaySuite s;
    int r = 0;
    int g = 0;
    int seq = 0;

    std::string next_id(const std::string& tag) {
        ++seq;
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%03d", seq);
        return s.id + "-" + buf + "-" + tag;
    }

    int wrap(int i) const { return ((i - 1) % r + r) % r + 1; }
    std::string A(int i) const { return "A" + num(wrap(i)); }
    std::string B(int i) const { return "B" + num(wrap(i)); }
    std::string C(int i) const { return "C" + num(wrap(i)); }
    std::string a(int i) const { return "a" + num(wrap(i)); }
    std::string b(int i) const { return "b" + num(wrap(i)); }
    std::string c(int i) const { return "c" + num(wrap(i)); }

    void involution(const std::string& w, const std::string& anchor, const std::string& note = "") {
        Claim cl;
        cl.id = next_id("inv");
        cl.kind = ClaimKind::involution;
        cl.word = w;
        cl.anchor = anchor;
        cl.note = note;
        s.claims.push_back(cl);
    }
    void identity(const std::string& lhs, const std::string& rhs, const std::string& anchor,
                  const std::string& note = "") {
        Claim cl;
        cl.id = next_id("id");
        cl.kind = ClaimKind::identity;
        cl.lhs = lhs;
        cl.rhs = rhs;
        cl.anchor = anchor;
        cl.note = note;
        s.claims.push_back(cl);
    }
    void image(const std::string& w, const std::string& curve, const std::string& target,
               const std::string& anchor, const std::string& note = "") {
        Claim cl;
        cl.id = next_id("img");
        cl.kind = ClaimKind::curve_image;
        cl.word = w;
        cl.curve = curve;
        cl.target = target;
        cl.anchor = anchor;
        cl.note = note;
        s.claims.push_back(cl);
    }
    void dvalue(const std::string& w, int expect, const std::string& anchor,
                const std::string& note = "") {
        Claim cl;
        cl.id = next_id("d");
        cl.kind = ClaimKind::d_value;
        cl.word = w;
        cl.expect = expect;
        cl.anchor = anchor;
        cl.note = note;
        s.claims.push_back(cl);
    }
    void generation(const std::string& set_a, const std::string& set_b, const std::string& anchor,
                    const std::string& skip = "") {
        Claim cl;
        cl.id = next_id("gen");
        cl.kind = ClaimKind::generation;
        cl.set_a = set_a;
        cl.set_b = set_b;
        cl.anchor = anchor;
        cl.skip_reason = skip;
        s.claims.push_back(cl);
    }
    void action(const std::string& sym, int from, int to, const std::string& anchor) {
        Claim cl;
        cl.id = next_id("act");
        cl.kind = ClaimKind::catalog_action;
        cl.sym = sym;
        cl.from = "x" + num(from);
        cl.to = "x" + num(to);
        cl.anchor = anchor;
        s.claims.push_back(cl);
    }
    void define(const std::string& name, const std::string& word, const std::string& source) {
        s.defines.push_back({name, word, source});
    }
    void set(const std::string& name, std::vector<std::string> words) {
        s.sets.push_back({name, std::move(words)});
    }

    std::vector<std::string> omori_words() const {
        std::vector<std::string> ws = {"A1", "A2"};
        for (int i = 1; i <= r; ++i) ws.push_back("B" + num(i));
        for (int i = 1; i + 1 <= r; ++i) ws.push_back("C" + num(i));
        if (g % 2 == 0) ws.push_back("D" + num(r));
        ws.push_back("E");
        return ws;
    }

    // string form of the inverse of a '*'-joined word
    static std::string inv(const std::string& w) {
        return print_word(inverse(parse_word(w)));
    }
    static std::string conj(const std::string& f, const std::string& u) {
        return f + "*" + u + "*" + inv(f);
    }
};

void sigma_actions(SuiteBuilder& sb) {
    int g = sb.g;
    sb.action("sigma", 2, 3, "S3.2: sigma(x_2)=x_3");
    sb.action("sigma", 4, 5, "S3.2: sigma(x_4)=x_5");
    sb.action("sigma", g - 2, g, "S3.2: sigma(x_{g-2})=x_g");
    sb.action("sigma", 1, 1, "S3.2: sigma(x_i)=x_i if i=1,g-1");
    sb.action("sigma", g - 1, g - 1, "S3.2: sigma(x_i)=x_i if i=1,g-1");
    for (int i = 6; i <= g - 3; ++i)
        sb.action("sigma", i, i, "S3.2: sigma(x_i)=x_i if i=6..g-3");
}

void even_finale(SuiteBuilder& sb) {
    sb.identity("A1*A2^-1", "A1*C1^-1*C1*B2^-1*B2*A2^-1",
                "S3: A_1A_2^{-1}=(A_1C_1^{-1})(C_1B_2^{-1})(B_2A_2^{-1})");
    sb.identity("B1*B2^-1", "B1*C1^-1*C1*B2^-1", "S3: B_1B_2^{-1}=(B_1C_1^{-1})(C_1B_2^{-1})");
    sb.identity("C1*C2^-1", "C1*B2^-1*B2*C2^-1", "S3: C_1C_2^{-1}=(C_1B_2^{-1})(B_2C_2^{-1})");
    sb.image("sigma", "a1", "f", "S3: sigma(a_1)=f");
    sb.image("sigma", "b" + num(sb.r), "d" + num(sb.r), "S3: sigma(b_r)=d_r");
    sb.image("A1", "f", "e", "S3: A_1(f)=e");
}

ReplaySuite build_g12(int genus) {
    SuiteBuilder sb;
    sb.s.id = "g12";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = 5;
    sb.s.macros = builtin_macros("g12", SurfaceParams::for_genus(genus));
    sb.set("omori", sb.omori_words());
    sb.set("inv-g12", {"rho1", "rho2", "rho1*E1", "sigma"});

    sb.image("rho1", "a1", "a3", "S3: rho_1(a_1)=a_3");
    sb.image("rho1", "b2", "b2", "S3: rho_1(b_2)=b_2");
    sb.image("rho1", "c4", "c4", "S3: rho_1(c_4)=c_4");
    sb.identity("rho1*A1*rho1", "A3^-1", "S3: rho_1A_1rho_1=A_3^{-1}");
    sb.identity("rho1*B2*rho1", "B2^-1", "S3: rho_1B_2rho_1=B_2^{-1}");
    sb.identity("rho1*C4*rho1", "C4^-1", "S3: rho_1C_4rho_1=C_4^{-1}");
    sb.involution("rho1", "S3: the involutions rho_1 and rho_2");
    sb.involution("rho2", "S3: the involutions rho_1 and rho_2");
    sb.involution("sigma", "S3.2: the reflection sigma");
    sb.involution("rho1*E1", "S3: it is easy to verify that rho_1A_1B_2C_4A_3 is an involution");
    sb.identity(SuiteBuilder::conj("R", "E1"), "E2", "S3: E_2=RE_1R^{-1}=A_2B_3C_5A_4");
    sb.image("E2*E1", "a2", "b2", "S3: E_2E_1(a_2,b_3,c_5,a_4)=(b_2,a_3,c_5,a_4)");
    sb.image("E2*E1", "b3", "a3", "S3: E_2E_1(a_2,b_3,c_5,a_4)=(b_2,a_3,c_5,a_4)");
    sb.image("E2*E1", "c5", "c5", "S3: E_2E_1(a_2,b_3,c_5,a_4)=(b_2,a_3,c_5,a_4)");
    sb.image("E2*E1", "a4", "a4", "S3: E_2E_1(a_2,b_3,c_5,a_4)=(b_2,a_3,c_5,a_4)");
    sb.identity(SuiteBuilder::conj("E2*E1", "E2"), "E3", "S3: so that E_3=B_2A_3C_5A_4 is in H");
    sb.identity("R^2*E1*R^-2", "E4", "S3: E_4=R^2E_1R^{-2}=A_3B_4C_1A_5");
    sb.image("E4*E3", "a3", "a3", "S3: E_4E_3(a_3,b_4,c_1,a_5)=(a_3,a_4,b_2,a_5)");
    sb.image("E4*E3", "b4", "a4", "S3: E_4E_3(a_3,b_4,c_1,a_5)=(a_3,a_4,b_2,a_5)");
    sb.image("E4*E3", "c1", "b2", "S3: E_4E_3(a_3,b_4,c_1,a_5)=(a_3,a_4,b_2,a_5)");
    sb.image("E4*E3", "a5", "a5", "S3: E_4E_3(a_3,b_4,c_1,a_5)=(a_3,a_4,b_2,a_5)");
    sb.identity(SuiteBuilder::conj("E4*E3", "E4"), "E5", "S3: so that E_5=A_3A_4B_2A_5");
    sb.identity("E5*E3^-1", "A5*C5^-1", "S3: E_5E_3^{-1}=A_5C_5^{-1}");
    for (int k = 1; k <= 4; ++k)
        sb.identity("R^" + num(k) + "*A5*C5^-1*R^-" + num(k), sb.A(5 + k) + "*" + sb.C(5 + k) + "^-1",
                    "S3: the elements A_iC_i^{-1} by conjugating with powers of R");
    sb.identity(SuiteBuilder::conj("R", "E5"), "E6", "S3: E_6=RE_5R^{-1}=A_4A_5B_3A_1");
    sb.image("E6*E5", "a4", "a4", "S3: E_6E_5(a_4,a_5,b_3,a_1)=(a_4,a_5,a_3,a_1)");
    sb.image("E6*E5", "a5", "a5", "S3: E_6E_5(a_4,a_5,b_3,a_1)=(a_4,a_5,a_3,a_1)");
    sb.image("E6*E5", "b3", "a3", "S3: E_6E_5(a_4,a_5,b_3,a_1)=(a_4,a_5,a_3,a_1)");
    sb.image("E6*E5", "a1", "a1", "S3: E_6E_5(a_4,a_5,b_3,a_1)=(a_4,a_5,a_3,a_1)");
    sb.identity(SuiteBuilder::conj("E6*E5", "E6"), "E7", "S3: so that E_7=A_4A_5A_3A_1 is in H");
    sb.identity("E7*E6^-1", "A3*B3^-1", "S3: E_7E_6^{-1}=A_3B_3^{-1}");
    for (int k = 1; k <= 4; ++k)
        sb.identity("R^" + num(k) + "*A3*B3^-1*R^-" + num(k), sb.A(3 + k) + "*" + sb.B(3 + k) + "^-1",
                    "S3: by conjugating with powers of R we get A_iB_i^{-1}");
    sb.identity("B5*C5^-1", "B5*A5^-1*A5*C5^-1", "S3: B_5C_5^{-1}=(B_5A_5^{-1})(A_5C_5^{-1})");
    for (int k = 1; k <= 4; ++k)
        sb.identity("R^" + num(k) + "*B5*C5^-1*R^-" + num(k), sb.B(5 + k) + "*" + sb.C(5 + k) + "^-1",
                    "S3: the elements B_iC_i^{-1} by conjugating with powers of R");
    sb.identity("A2*B2^-1*B3*A3^-1*E1", "E8", "S3: E_8=(A_2B_2^{-1})(B_3A_3^{-1})E_1=A_1A_2C_4B_3");
    sb.identity("R^2*E8*R^-2", "E9", "S3: E_9=R^2F_8R^{-2}=A_3A_4C_1B_5",
                "the source text writes F_8; only E_8 is defined, so E_8 is used");
    sb.image("E9*E8", "a3", "b3", "S3: E_9E_8(a_3,a_4,c_1,b_5)=(b_3,a_4,c_1,c_4)");
    sb.image("E9*E8", "a4", "a4", "S3: E_9E_8(a_3,a_4,c_1,b_5)=(b_3,a_4,c_1,c_4)");
    sb.image("E9*E8", "c1", "c1", "S3: E_9E_8(a_3,a_4,c_1,b_5)=(b_3,a_4,c_1,c_4)");
    sb.image("E9*E8", "b5", "c4", "S3: E_9E_8(a_3,a_4,c_1,b_5)=(b_3,a_4,c_1,c_4)");
    sb.identity(SuiteBuilder::conj("E9*E8", "E9"), "E10", "S3: so that E_10=B_3A_4C_1C_4");
    sb.identity("E9*E10^-1*B3*A3^-1", "B5*C4^-1", "S3: E_9E_10^{-1}B_3A_3^{-1}=B_5C_4^{-1}");
    for (int k = 1; k <= 4; ++k)
        sb.identity("R^" + num(k) + "*B5*C4^-1*R^-" + num(k), sb.B(5 + k) + "*" + sb.C(4 + k) + "^-1",
                    "S3: conjugation with powers of R gives B_{i+1}C_i^{-1}");
    even_finale(sb);
    sb.image("sigma", "f", "a1", "S3.2: sigma(f)=a_1");
    sb.image("sigma", "d5", "b5", "S3.2: sigma(b_r)=d_r");
    sigma_actions(sb);
    sb.generation("inv-g12", "omori", "S3: we conclude that H=T_12");
    return sb.s;
}

ReplaySuite build_rodd(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "r-odd";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int r = sb.r;
    sb.s.macros = builtin_macros("r-odd", sp);
    int h = (r + 3) / 2;
    sb.set("omori", sb.omori_words());
    sb.set("inv-r-odd", {"rho1", "rho2", "rho1*G1", "sigma"});

    sb.image("rho1", "a1", "a3", "S3: rho_1(a_1)=a_3");
    sb.image("rho1", "b2", "b2", "S3: rho_1(b_2)=b_2");
    sb.image("rho1", sb.c(h), sb.c(h), "S3: rho_1(c_{(r+3)/2})=c_{(r+3)/2}");
    sb.identity("rho1*A1*rho1", "A3^-1", "S3: rho_1A_1rho_1=A_3^{-1}");
    sb.identity("rho1*B2*rho1", "B2^-1", "S3: rho_1B_2rho_1=B_2^{-1}");
    sb.identity("rho1*" + sb.C(h) + "*rho1", sb.C(h) + "^-1",
                "S3: rho_1C_{(r+3)/2}rho_1=C_{(r+3)/2}^{-1}");
    sb.involution("rho1", "S3: the involutions rho_1 and rho_2");
    sb.involution("rho2", "S3: the involutions rho_1 and rho_2");
    sb.involution("sigma", "S3.2: the reflection sigma");
    sb.involution("rho1*G1", "S3: rho_1A_1B_2C_{(r+3)/2}A_3 is an involution");
    sb.identity(SuiteBuilder::conj("R", "G1"), "G2", "S3: G_2=RG_1R^{-1}=A_2B_3C_{(r+5)/2}A_4");
    sb.identity(SuiteBuilder::conj("G2*G1", "G2"), "G3",
                "S3: G_3=(G_2G_1)G_2(G_2G_1)^{-1}=B_2A_3C_{(r+5)/2}A_4");
    sb.identity(SuiteBuilder::conj("R", "G3"), "G4", "S3: G_4=RG_3R^{-1}=B_3A_4C_{(r+7)/2}A_5");
    sb.identity(SuiteBuilder::conj("G4*G3", "G4"), "G5",
                "S3: G_5=(G_4G_3)G_4(G_4G_3)^{-1}=A_3A_4C_{(r+7)/2}A_5");
    sb.identity("G4*G5^-1", "B3*A3^-1", "S3: G_4G_5^{-1}=B_3A_3^{-1}");
    for (int k = 1; k < r; ++k)
        sb.identity("R^" + num(k) + "*B3*A3^-1*R^-" + num(k), sb.B(3 + k) + "*" + sb.A(3 + k) + "^-1",
                    "S3: the elements B_iA_i^{-1} by conjugating with powers of R");
    int q1 = (r - 3) / 2;
    sb.identity("R^" + num(q1) + "*G4*R^-" + num(q1), "G6",
                "S3: G_6=R^{(r-3)/2}G_4R^{(3-r)/2}=B_{(r+3)/2}A_{(r+5)/2}C_2A_{(r+7)/2}");
    sb.identity(SuiteBuilder::conj("G6*G4", "G6"), "G7",
                "S3: G_7=(G_6G_4)G_6(G_6G_4)^{-1}",
                r == 7 ? "the source text states G_7=A_5A_6B_3A_7 'if g=7'; r=7 is the consistent reading"
                       : "");
    if (r > 7) {
        sb.identity("G7*G6^-1", "B3*C2^-1", "S3: G_7G_6^{-1}=B_3C_2^{-1} if r>7");
    } else {
        sb.identity("G7*G6^-1*B5*A5^-1", "B3*C2^-1", "S3: G_7G_6^{-1}B_5A_5^{-1}=B_3C_2^{-1} if r=7");
    }
    for (int k = 1; k < r; ++k)
        sb.identity("R^" + num(k) + "*B3*C2^-1*R^-" + num(k), sb.B(3 + k) + "*" + sb.C(2 + k) + "^-1",
                    "S3: the elements B_{i+1}C_i^{-1} by conjugating with powers of R");
    int q2 = (r - 1) / 2;
    sb.identity("R^" + num(q2) + "*G4*R^-" + num(q2), "G8",
                "S3: G_8=R^{(r-1)/2}G_4R^{(1-r)/2}",
                r == 7 ? "instantiated as G_8=B_6A_7C_3A_1 at r=7" : "");
    sb.identity(SuiteBuilder::conj("G8*G4", "G8"), "G9",
                "S3: G_9=(G_8G_4)G_8(G_8G_4)^{-1}",
                r == 7 ? "instantiated as G_9=B_6A_7B_3A_1 at r=7" : "");
    sb.identity("G9*G8^-1", "B3*C3^-1", "S3: G_9G_8^{-1}=B_3C_3^{-1} if r>=7");
    for (int k = 1; k < r; ++k)
        sb.identity("R^" + num(k) + "*B3*C3^-1*R^-" + num(k), sb.B(3 + k) + "*" + sb.C(3 + k) + "^-1",
                    "S3: the subgroup contains B_iC_i^{-1} by conjugating with powers of R");
    even_finale(sb);
    sb.generation("inv-r-odd", "omori", "S3: the twist subgroup is generated by these involutions");
    return sb.s;
}

ReplaySuite build_reven_like(const std::string& id, int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = id;
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int r = sb.r;
    sb.s.macros = builtin_macros(id, sp);
    sb.set("omori", sb.omori_words());
    std::string invset = (id == "r-even") ? "inv-r-even" : "inv-odd-4k1";
    std::string third = (id == "r-even") ? "sigma" : "beta";
    sb.set(invset, {"rho1", "rho2", "rho1*H1", third});

    sb.image("rho1", "a2", "a2", "S3: rho_1(a_2)=a_2");
    sb.image("rho1", sb.b((r + 4) / 2), sb.b((r + 4) / 2), "S3: rho_1(b_{(r+4)/2})=b_{(r+4)/2}");
    sb.image("rho1", sb.c(r / 2), sb.c((r + 6) / 2), "S3: rho_1(c_{r/2})=c_{(r+6)/2}");
    sb.identity("rho1*A2*rho1", "A2^-1", "S3: rho_1A_2rho_1=A_2^{-1}");
    sb.identity("rho1*" + sb.B((r + 4) / 2) + "*rho1", sb.B((r + 4) / 2) + "^-1",
                "S3: rho_1B_{(r+4)/2}rho_1=B_{(r+4)/2}^{-1}");
    sb.identity("rho1*" + sb.C(r / 2) + "*rho1", sb.C((r + 6) / 2) + "^-1",
                "S3: rho_1C_{r/2}rho_1=C_{(r+6)/2}^{-1}");
    sb.involution("rho1", "the involutions rho_1 and rho_2");
    sb.involution("rho2", "the involutions rho_1 and rho_2");
    if (id == "r-even") sb.involution("sigma", "S3.2: the reflection sigma");
    else {
        sb.involution("beta", "S4: the reflection beta");
        sb.dvalue("rho1", 1, "S4: D(rho_1)=D(rho_2)=1 if g=4k+1");
        sb.dvalue("rho2", 1, "S4: D(rho_1)=D(rho_2)=1 if g=4k+1");
        sb.dvalue("beta", 1, "S4: D(beta)=1 and hence beta is in the twist subgroup");
    }
    sb.involution("rho1*H1", "rho_1A_2C_{r/2}B_{(r+4)/2}C_{(r+6)/2} is an involution");
    sb.identity(SuiteBuilder::conj("R", "H1"), "H2",
                "H_2=RH_1R^{-1}=A_3C_{(r+2)/2}B_{(r+6)/2}C_{(r+8)/2}");
    sb.identity(SuiteBuilder::conj("H2*H1", "H2"), "H3",
                "H_3=(H_2H_1)H_2(H_2H_1)^{-1}=A_3B_{(r+4)/2}C_{(r+6)/2}C_{(r+8)/2}");
    sb.identity(SuiteBuilder::conj("R", "H3"), "H4",
                "H_4=RH_3R^{-1}=A_4B_{(r+6)/2}C_{(r+8)/2}C_{(r+10)/2}");
    sb.identity(SuiteBuilder::conj("H4*H3", "H4"), "H5",
                "H_5=(H_4H_3)H_4(H_4H_3)^{-1}=A_4C_{(r+6)/2}C_{(r+8)/2}C_{(r+10)/2}");
    sb.identity("H4*H5^-1", sb.B((r + 6) / 2) + "*" + sb.C((r + 6) / 2) + "^-1",
                "H_4H_5^{-1}=B_{(r+6)/2}C_{(r+6)/2}^{-1}");
    sb.identity("H2*H3^-1*" + sb.C((r + 6) / 2) + "*" + sb.B((r + 6) / 2) + "^-1",
                sb.C((r + 2) / 2) + "*" + sb.B((r + 4) / 2) + "^-1",
                "H_2H_3^{-1}(C_{(r+6)/2}B_{(r+6)/2}^{-1})=C_{(r+2)/2}B_{(r+4)/2}^{-1}");
    for (int k = 1; k < r; ++k) {
        sb.identity("R^" + num(k) + "*" + sb.B((r + 6) / 2) + "*" + sb.C((r + 6) / 2) + "^-1*R^-" + num(k),
                    sb.B((r + 6) / 2 + k) + "*" + sb.C((r + 6) / 2 + k) + "^-1",
                    "B_iC_i^{-1} by conjugating with powers of R");
        sb.identity("R^" + num(k) + "*" + sb.C((r + 2) / 2) + "*" + sb.B((r + 4) / 2) + "^-1*R^-" + num(k),
                    sb.C((r + 2) / 2 + k) + "*" + sb.B((r + 4) / 2 + k) + "^-1",
                    "C_iB_{i+1}^{-1} by conjugating with powers of R");
    }
    sb.identity(sb.B((r + 6) / 2) + "*" + sb.C((r + 6) / 2) + "^-1*" + sb.B(r / 2) + "*" + sb.C(r / 2) +
                    "^-1*H1",
                "H6", "H_6=(B_{(r+6)/2}C_{(r+6)/2}^{-1})(B_{r/2}C_{r/2}^{-1})H_1=B_{(r+6)/2}B_{r/2}A_2B_{(r+4)/2}");
    int q = (r - 4) / 2;
    sb.identity("R^" + num(q) + "*H6*R^-" + num(q), "H7",
                "H_7=R^{(r-4)/2}H_6R^{(4-r)/2}=A_{r/2}B_{r-2}B_rB_1");
    sb.identity(SuiteBuilder::conj("H7*H6", "H7"), "H8",
                "H_8=(H_7H_6)H_7(H_7H_6)^{-1}=B_{r/2}B_{r-2}B_rB_1");
    sb.identity("H8*H7^-1", sb.B(r / 2) + "*" + sb.A(r / 2) + "^-1", "H_8H_7^{-1}=B_{r/2}A_{r/2}^{-1}");
    for (int k = 1; k < r; ++k)
        sb.identity("R^" + num(k) + "*" + sb.B(r / 2) + "*" + sb.A(r / 2) + "^-1*R^-" + num(k),
                    sb.B(r / 2 + k) + "*" + sb.A(r / 2 + k) + "^-1",
                    "B_iA_i^{-1} by conjugating with powers of R");
    if (id == "r-even") {
        even_finale(sb);
        sb.generation("inv-r-even", "omori", "the twist subgroup is generated by these involutions");
    } else {
        sb.image("beta", "a1", "f", "S4: beta(a_1)=f");
        sb.image("A1*beta", "a1", "e", "S4: since A_1beta(a_1)=e the element E is in H");
        sb.generation("inv-odd-4k1", "omori", "S4: we conclude that T_g=H");
    }
    return sb.s;
}

void trivial_pair(SuiteBuilder& sb, const std::string& s1, const std::string& s2,
                  const std::string& third_word) {
    // A_1 = s2 (s2 A_1) and A_2 = (s2 s1 s2)(s2 s1 s2 A_2) patterns
    sb.identity("A1", s2 + "*" + s2 + "*A1", "A_1=" + s2 + "(" + s2 + "A_1)");
    sb.identity("A2", third_word + "*" + third_word + "*A2",
                "A_2=(" + third_word + ")(" + third_word + "A_2)");
    (void)s1;
}

ReplaySuite build_g10(int genus) {
    SuiteBuilder sb;
    sb.s.id = "g10";
    sb.s.genus = genus;
    sb.g = 10;
    sb.r = 4;
    sb.s.macros = builtin_macros("g10", SurfaceParams::for_genus(genus));
    sb.set("omori", sb.omori_words());
    sb.set("inv-g10", {"delta1", "delta2", "delta2*delta1*delta2*A2", "delta1*A1", "delta3"});

    sb.action("delta1", 1, 2, "S3: delta_1(x_i)=x_{i+1} if i=1,5,9");
    sb.action("delta1", 5, 6, "S3: delta_1(x_i)=x_{i+1} if i=1,5,9");
    sb.action("delta1", 9, 10, "S3: delta_1(x_i)=x_{i+1} if i=1,5,9");
    sb.action("delta1", 3, 8, "S3: delta_1(x_3)=x_8");
    sb.action("delta1", 4, 7, "S3: delta_1(x_4)=x_7");
    for (int i : {2, 6, 9, 10}) sb.action("delta2", i, i, "S3: delta_2(x_i)=x_i if i=2,6,9,10");
    sb.action("delta2", 1, 3, "S3: delta_2(x_1)=x_3");
    sb.action("delta2", 4, 8, "S3: delta_2(x_4)=x_8");
    sb.action("delta2", 5, 7, "S3: delta_2(x_5)=x_7");
    for (int i : {1, 4, 5, 6}) sb.action("delta3", i, i, "S3: delta_3(x_i)=x_i if i=1,4,5,6");
    sb.action("delta3", 2, 3, "S3: delta_3(x_2)=x_3");
    sb.action("delta3", 8, 9, "S3: delta_3(x_8)=x_9");
    sb.action("delta3", 7, 10, "S3: delta_3(x_7)=x_10");
    for (int i = 1; i <= 3; ++i)
        sb.dvalue("delta" + num(i), 1, "S3: since D(delta_i)=1 the involutions are in T_10");
    sb.involution("delta1", "S3: the reflections delta_1, delta_2, delta_3");
    sb.involution("delta2", "S3: the reflections delta_1, delta_2, delta_3");
    sb.involution("delta3", "S3: the reflections delta_1, delta_2, delta_3");
    sb.involution("delta2*delta1*delta2*A2", "S3: delta_2delta_1delta_2A_2 is an involution");
    sb.involution("delta1*A1", "S3: delta_1A_1 is an involution");
    trivial_pair(sb, "delta1", "delta1", "delta2*delta1*delta2");
    sb.identity("A1", "delta1*delta1*A1", "S3: A_1=delta_1(delta_1A_1)");
    sb.image("delta2", "a1", "b1", "S3: delta_2(a_1)=b_1");
    for (int i = 1; i <= 3; ++i)
        sb.image("delta2*delta1", "b" + num(i), "c" + num(i), "S3: delta_2delta_1(b_i)=c_i for i=1,2,3");
    for (int i = 1; i <= 2; ++i)
        sb.image("delta2*delta1", "c" + num(i), "b" + num(i + 1),
                 "S3: delta_2delta_1(c_i)=b_{i+1} for i=1,2");
    sb.image("delta3", "c3", "d4", "S3: delta_3(c_3)=d_4");
    sb.image("delta1*delta2*delta3*delta1*delta3", "c1", "b4",
             "S3: delta_1delta_2delta_3delta_1delta_3(c_1)=b_4");
    sb.image("A1*delta3", "a1", "e", "S3: A_1delta_3(a_1)=e");
    sb.generation("inv-g10", "omori", "S3: we conclude that K=T_10");
    return sb.s;
}

ReplaySuite build_g8(int genus) {
    SuiteBuilder sb;
    sb.s.id = "g8";
    sb.s.genus = genus;
    sb.g = 8;
    sb.r = 3;
    sb.s.macros = builtin_macros("g8", SurfaceParams::for_genus(genus));
    sb.set("omori", sb.omori_words());
    sb.set("inv-g8", {"lambda1", "lambda2", "lambda2*lambda1*lambda2*A2", "lambda1*A1", "lambda3"});

    for (int i : {7, 8}) sb.action("lambda1", i, i, "S3: lambda_1(x_i)=x_i if i=7,8");
    sb.action("lambda1", 1, 2, "S3: lambda_1(x_i)=x_{i+1} if i=1,4");
    sb.action("lambda1", 4, 5, "S3: lambda_1(x_i)=x_{i+1} if i=1,4");
    sb.action("lambda1", 3, 6, "S3: lambda_1(x_3)=x_6");
    for (int i : {2, 5}) sb.action("lambda2", i, i, "S3: lambda_2(x_i)=x_i if i=2,5");
    sb.action("lambda2", 1, 3, "S3: lambda_2(x_1)=x_3");
    sb.action("lambda2", 4, 6, "S3: lambda_2(x_4)=x_6");
    sb.action("lambda2", 7, 8, "S3: lambda_2(x_7)=x_8");
    for (int i : {1, 4}) sb.action("lambda3", i, i, "S3: lambda_3(x_i)=x_i if i=1,4");
    sb.action("lambda3", 2, 3, "S3: lambda_3(x_2)=x_3");
    sb.action("lambda3", 5, 8, "S3: lambda_3(x_5)=x_8");
    sb.action("lambda3", 6, 7, "S3: lambda_3(x_6)=x_7");
    for (int i = 1; i <= 3; ++i)
        sb.dvalue("lambda" + num(i), 1, "S3: since D(delta_i)=1 ... contained in T_8",
                  "the source statement names delta_i; the reflections here are the lambda_i");
    sb.involution("lambda1", "S3: the reflections lambda_1, lambda_2, lambda_3");
    sb.involution("lambda2", "S3: the reflections lambda_1, lambda_2, lambda_3");
    sb.involution("lambda3", "S3: the reflections lambda_1, lambda_2, lambda_3");
    sb.involution("lambda2*lambda1*lambda2*A2", "S3: lambda_2lambda_1lambda_2A_2 is an involution");
    sb.involution("lambda1*A1", "S3: lambda_1A_1 is an involution");
    sb.identity("A1", "lambda1*lambda1*A1", "S3: A_1=lambda_1(lambda_1A_1)");
    sb.identity("A2", "lambda2*lambda1*lambda2*lambda2*lambda1*lambda2*A2",
                "S3: A_2=(lambda_2lambda_1lambda_2)(lambda_2lambda_1lambda_2A_2)");
    sb.image("lambda2*lambda1", "a1", "b1", "S3: lambda_2lambda_1(a_1)=b_1");
    for (int i = 1; i <= 2; ++i)
        sb.image("lambda2*lambda1", "b" + num(i), "c" + num(i),
                 "S3: lambda_2lambda_1(b_i)=c_i for i=1,2");
    sb.image("lambda2*lambda1", "c1", "b2", "S3: lambda_2lambda_1(c_1)=b_2");
    sb.image("lambda3", "c2", "d3", "S3: lambda_3(c_2)=d_3");
    sb.image("lambda1*lambda2*lambda3*lambda1*lambda3", "c1", "b3",
             "S3: lambda_1lambda_2lambda_3lambda_1lambda_3(c_1)=b_3");
    sb.image("A1*lambda3", "a1", "e", "S3: A_1lambda_3(a_1)=e");
    sb.generation("inv-g8", "omori", "S3: all generators of T_8 are contained in K");
    return sb.s;
}

ReplaySuite build_g6(int genus) {
    SuiteBuilder sb;
    sb.s.id = "g6";
    sb.s.genus = genus;
    sb.g = 6;
    sb.r = 2;
    sb.s.macros = builtin_macros("g6", SurfaceParams::for_genus(genus));
    sb.set("omori", sb.omori_words());
    sb.set("inv-g6", {"delta1", "delta2", "delta2*delta1*delta2*A2", "delta1*A1", "xi1", "xi2"});

    sb.action("delta1", 1, 2, "S3: delta_1(x_i)=x_{i+1} if i=1,3,5");
    sb.action("delta1", 3, 4, "S3: delta_1(x_i)=x_{i+1} if i=1,3,5");
    sb.action("delta1", 5, 6, "S3: delta_1(x_i)=x_{i+1} if i=1,3,5");
    for (int i : {2, 4, 5, 6}) sb.action("delta2", i, i, "S3: delta_2(x_i)=x_i if i!=1,3");
    sb.action("delta2", 1, 3, "S3: delta_2(x_1)=x_3");
    for (int i : {1, 4, 5, 6}) sb.action("xi1", i, i, "S3: xi_1(x_i)=x_i if i!=2,3");
    sb.action("xi1", 2, 3, "S3: xi_1(x_2)=x_3");
    sb.action("xi2", 1, 2, "S3: xi_2(x_i)=x_{i+1} if i=1,4");
    sb.action("xi2", 4, 5, "S3: xi_2(x_i)=x_{i+1} if i=1,4");
    sb.action("xi2", 3, 6, "S3: xi_2(x_3)=x_6");
    for (int i = 1; i <= 2; ++i) {
        sb.dvalue("delta" + num(i), 1, "S3: D(delta_i)=D(xi_i)=1");
        sb.dvalue("xi" + num(i), 1, "S3: D(delta_i)=D(xi_i)=1");
    }
    sb.involution("delta1", "S3: the reflections delta_1, delta_2, xi_1, xi_2");
    sb.involution("delta2", "S3: the reflections delta_1, delta_2, xi_1, xi_2");
    sb.involution("xi1", "S3: the reflections delta_1, delta_2, xi_1, xi_2");
    sb.involution("xi2", "S3: the reflections delta_1, delta_2, xi_1, xi_2");
    sb.involution("delta2*delta1*delta2*A2", "S3: delta_2delta_1delta_2A_2 is an involution");
    sb.involution("delta1*A1", "S3: delta_1A_1 is an involution");
    sb.identity("A1", "delta1*delta1*A1", "S3: A_1=delta_1(delta_1A_1)");
    sb.identity("A2", "delta2*delta1*delta2*delta2*delta1*delta2*A2",
                "S3: A_2=(delta_2delta_1delta_2)(delta_2delta_1delta_2A_2)");
    sb.image("delta2", "a1", "b1", "S3: delta_2(a_1)=b_1");
    sb.image("delta2*delta1", "b1", "c1", "S3: delta_2delta_1(b_1)=c_1");
    sb.image("delta1*delta2*xi2", "b1", "b2", "S3: delta_1delta_2xi_2(b_1)=b_2");
    sb.image("xi2", "c1", "d2", "S3: xi_2(c_1)=d_2");
    sb.image("A1*xi1", "a1", "e", "S3: A_1xi_1(a_1)=e");
    sb.generation("inv-g6", "omori", "S3: all generators of T_6 are contained in K");
    return sb.s;
}

void tau_basics(SuiteBuilder& sb) {
    sb.involution("tau1", "S4: the reflections tau_1 and tau_2");
    sb.involution("tau2", "S4: the reflections tau_1 and tau_2");
    sb.dvalue("tau1", 1, "S4: D(tau_1)=D(tau_2)=1",
              "the source text conditions this on r even; the determinant is 1 at every odd genus here");
    sb.dvalue("tau2", 1, "S4: D(tau_1)=D(tau_2)=1",
              "the source text conditions this on r even; the determinant is 1 at every odd genus here");
    sb.involution("tau1*tau2*tau1*A2", "S4: tau_1tau_2tau_1A_2 is an involution");
    sb.involution("tau2*A1", "S4: tau_2A_1 is an involution");
    sb.identity("A1", "tau2*tau2*A1", "S4: A_1=tau_2(tau_2A_1)");
    sb.identity("A2", "tau1*tau2*tau1*tau1*tau2*tau1*A2",
                "S4: A_2=(tau_1tau_2tau_1)(tau_1tau_2tau_1A_2)");
}

void t_conjugation_images(SuiteBuilder& sb, int circle) {
    int r = sb.r;
    for (int i = 1; i <= r; ++i) {
        if (2 * i + 1 > circle) break;
        int j = 2 * i - 1;
        sb.image("T^" + num(j), "a1", "b" + num(i),
                 "S4: by conjugating A_1 with powers of T we obtain B_i");
    }
    for (int i = 1; i + 1 <= r; ++i) {
        if (2 * i + 2 > circle) break;
        int j = 2 * i;
        sb.image("T^" + num(j), "a1", "c" + num(i),
                 "S4: by conjugating A_1 with powers of T we obtain C_i");
    }
}

ReplaySuite build_odd_tau(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "odd-4k1-tau";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    sb.s.macros = builtin_macros("odd-4k1-tau", sp);
    sb.set("omori", sb.omori_words());
    sb.set("inv-odd-4k1-tau", {"tau1", "tau2", "tau1*tau2*tau1*A2", "tau2*A1", "beta"});

    sb.action("beta", 2, 3, "S4: beta(x_2)=x_3");
    sb.action("beta", 4, 5, "S4: beta(x_4)=x_5");
    sb.action("beta", 1, 1, "S4: beta(x_1)=x_1");
    for (int i = 6; i <= sb.g; ++i) sb.action("beta", i, i, "S4: beta(x_i)=x_i for i=6..g");
    sb.dvalue("beta", 1, "S4: D(beta)=1 and hence beta is an element of T_g");
    sb.involution("beta", "S4: the reflection beta");
    tau_basics(sb);
    t_conjugation_images(sb, genus);
    sb.image("beta", "a1", "f", "S4: beta(a_1)=f");
    sb.image("A1*beta", "a1", "e", "S4: A_1(f)=e");
    sb.generation("inv-odd-4k1-tau", "omori", "S4: this finishes the proof (five involutions)");
    return sb.s;
}

ReplaySuite build_odd_4k3(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "odd-4k3";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int k = (genus - 3) / 4;
    sb.s.macros = builtin_macros("odd-4k3", sp);
    sb.set("omori", sb.omori_words());
    sb.set("inv-odd-4k3", {"tau1", "tau2", "tau1*tau2*tau1*A2", "tau2*A1", "mu"});
    sb.define("x", "T", "b" + num(2 * k));
    sb.define("y", "mu", "x");

    sb.dvalue("mu", 1, "S4: D(mu)=1 if k>=2");
    sb.involution("mu", "S4: the reflection mu");
    tau_basics(sb);
    t_conjugation_images(sb, genus - 2);
    sb.identity(SuiteBuilder::conj("T", "B" + num(2 * k)), "X",
                "S4: T(b_{2k})=x, so X is contained in K");
    sb.identity(SuiteBuilder::conj("mu", "X"), "Y", "S4: mu(x)=y, so Y is contained in K");
    sb.image("T^-1", "y", "c" + num(2 * k), "S4: T^{-1}(y)=c_{2k}");
    sb.image("mu", "b" + num(2 * k), "b" + num(2 * k + 1), "S4: mu(b_{2k})=b_{2k+1}");
    sb.generation("inv-odd-4k3", "omori", "S4: this completes the proof (five involutions)");
    return sb.s;
}

ReplaySuite build_g7(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "g7";
    sb.s.genus = genus;
    sb.g = 7;
    sb.r = 3;
    sb.s.macros = builtin_macros("g7", sp);
    sb.set("omori", sb.omori_words());
    sb.set("inv-g7", {"tau1", "tau2", "tau1*tau2*tau1*A2", "tau2*A1", "sigma1", "sigma2"});
    sb.define("x", "T", "b2");
    sb.define("y", "sigma2", "x");

    sb.dvalue("sigma1", 1, "S4: D(sigma_1)=D(sigma_2)=1");
    sb.dvalue("sigma2", 1, "S4: D(sigma_1)=D(sigma_2)=1");
    sb.involution("sigma1", "S4: the reflections sigma_1 and sigma_2");
    sb.involution("sigma2", "S4: the reflections sigma_1 and sigma_2");
    tau_basics(sb);
    t_conjugation_images(sb, 5);
    sb.identity(SuiteBuilder::conj("T", "B2"), "X", "S4: T(b_2)=x, so X is contained in K");
    sb.identity(SuiteBuilder::conj("sigma2", "X"), "Y", "S4: sigma_2(x)=y, so Y is contained in K");
    sb.image("T^-1", "y", "c2", "S4: T^{-1}(y)=c_2");
    sb.image("sigma2", "b2", "b3", "S4: sigma_2(b_2)=b_3");
    sb.image("A1*sigma1", "a1", "e", "S4: since A_1sigma_1(a_1)=e, E is in K");
    sb.generation("inv-g7", "omori", "S4: this completes the proof (six involutions)");
    return sb.s;
}

ReplaySuite build_g5g9(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "g5g9";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int k = (genus - 1) / 4;
    sb.s.macros = builtin_macros("g5g9", sp);
    // third generator: S^{2k-1} gamma S^{2-2k} A_2
    std::string sc = "S";
    if (2 * k - 1 > 1) sc = "S^" + num(2 * k - 1);
    sc += "*gamma";
    if (2 * k - 2 > 0) sc += "*S^-" + num(2 * k - 2);
    sc += "*A2";
    sb.set("omori", sb.omori_words());
    sb.set("inv-g5g9", {"gamma", "S*gamma", sc, "beta"});

    sb.dvalue("gamma", 1, "S4: D(gamma)=D(Sgamma)=D(S^{2k-2}(Sgamma)S^{2-2k}A_2)=1");
    sb.dvalue("S*gamma", 1, "S4: D(gamma)=D(Sgamma)=D(S^{2k-2}(Sgamma)S^{2-2k}A_2)=1");
    sb.dvalue(sc, 1, "S4: D(gamma)=D(Sgamma)=D(S^{2k-2}(Sgamma)S^{2-2k}A_2)=1");
    sb.dvalue("beta", 1, "S4: D(beta)=1");
    sb.involution("gamma", "S4: the reflection gamma in the xz-plane");
    sb.involution("S*gamma", "S4: the involution Sgamma");
    sb.involution(sc, "S4: the involution S^{2k-2}(Sgamma)S^{2-2k}A_2");
    sb.involution("beta", "S4: the reflection beta");
    // S shifts the twist chain downwards; these realize "conjugating by
    // powers of S" from the proof
    {
        std::vector<std::string> chain = {"a1"};
        for (int i = 1; i + 1 <= sb.r; ++i) {
            chain.push_back("b" + num(i));
            chain.push_back("c" + num(i));
        }
        chain.push_back("b" + num(sb.r));
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            sb.image("S", chain[j + 1], chain[j],
                     "S4: by conjugating with powers of S the elements B_i and C_i belong to T_g");
    }
    sb.image("A1*beta", "a1", "e", "S4: the generator E is contained since A_1beta(a_1)=e");
    sb.generation("inv-g5g9", "omori", "S4: T_5 and T_9 are generated by these involutions");
    return sb.s;
}

ReplaySuite build_gensets_even(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "gensets-even";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int r = sb.r;
    sb.s.macros = builtin_macros("gensets-even", sp);
    sb.set("omori", sb.omori_words());
    bool have_rot = r >= 3;
    if (have_rot) {
        sb.set("genset-even",
               {"R", "A1*A2^-1", "B1*B2^-1", "C1*C2^-1", "D" + num(r), "E"});
        sb.dvalue("tau", -1, "S3: note that D(tau)=-1");
        sb.dvalue("rho1p", -1, "S3: D(rho_1')=D(rho_2')=-1");
        sb.dvalue("rho2p", -1, "S3: D(rho_1')=D(rho_2')=-1");
        sb.dvalue("rho1", 1, "S3: rho_1 and rho_2 are contained in T_g by the determinant lemma");
        sb.dvalue("rho2", 1, "S3: rho_1 and rho_2 are contained in T_g by the determinant lemma");
        sb.dvalue("sigma", 1, "S3.2: D(sigma)=1 if g is even");
        sb.involution("tau", "S3: the reflection tau");
        sb.involution("rho1p", "S3: the rotations rho_1' and rho_2'");
        sb.involution("rho2p", "S3: the rotations rho_1' and rho_2'");
        sb.involution("rho1", "S3: the involutions rho_1 and rho_2");
        sb.involution("rho2", "S3: the involutions rho_1 and rho_2");
        sb.identity("rho1", "rho1p*tau", "S3: let rho_1=rho_1'tau");
        sb.identity("rho2", "rho2p*tau", "S3: let rho_2=rho_2'tau");
        for (int i = 1; i <= r; ++i)
            sb.image("R", "b" + num(i), sb.b(i + 1),
                     "S3: the rotation R maps b_i to b_{i+1} and b_r to b_1");
        sb.generation("genset-even", "omori",
                      "S3: T_g is generated by R, A_1A_2^{-1}, B_1B_2^{-1}, C_1C_2^{-1}, D_r and E");
    } else {
        Claim cl;
        cl.id = "gensets-even-001-gen";
        cl.kind = ClaimKind::generation;
        cl.set_a = "genset-even";
        cl.set_b = "omori";
        cl.anchor = "S3: T_g is generated by R, A_1A_2^{-1}, B_1B_2^{-1}, C_1C_2^{-1}, D_r and E";
        cl.skip_reason = "the generating-set statement requires r >= 3";
        sb.s.claims.push_back(cl);
    }
    return sb.s;
}

ReplaySuite build_gensets_odd(int genus) {
    SuiteBuilder sb;
    auto sp = SurfaceParams::for_genus(genus);
    sb.s.id = "gensets-odd";
    sb.s.genus = genus;
    sb.g = genus;
    sb.r = sp.r;
    int r = sb.r;
    sb.s.macros = builtin_macros("gensets-odd", sp);
    sb.set("omori", sb.omori_words());
    int dr = (genus % 4 == 1) ? 1 : -1;
    sb.dvalue("rho1", dr, "S4: D(rho_1)=D(rho_2)=1 if g=4k+1");
    sb.dvalue("rho2", dr, "S4: D(rho_1)=D(rho_2)=1 if g=4k+1");
    sb.involution("rho1", "S4: the surface is invariant under the involutions rho_1 and rho_2");
    sb.involution("rho2", "S4: the surface is invariant under the involutions rho_1 and rho_2");
    for (int i = 1; i <= r; ++i)
        sb.image("R", "b" + num(i), sb.b(i + 1),
                 "S4: the rotation R maps b_i to b_{i+1} and b_r to b_1");
    // the crosscap rotation T of the circular model
    int circle = (genus % 4 == 1) ? genus : genus - 2;
    for (int i = 1; i <= circle; ++i) {
        int j = (i % circle) + 1;
        sb.image("T", "x" + num(i), "x" + num(j),
                 "S4: the rotation T maps the crosscap C_i to C_{i+1}");
    }
    if (genus % 4 == 3) {
        sb.image("T", "x" + num(genus - 1), "x" + num(genus - 1),
                 "S4: the crosscap C_{g-1} is on the +x-axis");
        sb.image("T", "x" + num(genus), "x" + num(genus),
                 "S4: C_g is obtained by rotating C_{g-1} by pi about the +z-axis");
    }
    if (r >= 3) {
        sb.set("genset-odd", {"R", "A1*A2^-1", "B1*B2^-1", "C1*C2^-1", "E"});
        sb.generation("genset-odd", "omori",
                      "S4: T_g is generated by R, A_1A_2^{-1}, B_1B_2^{-1}, C_1C_2^{-1} and E");
    } else {
        Claim cl;
        cl.id = "gensets-odd-090-gen";
        cl.kind = ClaimKind::generation;
        cl.set_a = "genset-odd";
        cl.set_b = "omori";
        cl.anchor = "S4: T_g is generated by R, A_1A_2^{-1}, B_1B_2^{-1}, C_1C_2^{-1} and E";
        cl.skip_reason = "the generating-set statement requires r >= 3";
        sb.s.claims.push_back(cl);
    }
    return sb.s;
}

}  // namespace

std::vector<std::string> all_suite_ids() {
    return {"gensets-even", "gensets-odd", "g12", "r-odd", "r-even", "g10", "g8", "g6",
            "odd-4k1",      "odd-4k1-tau", "odd-4k3", "g7", "g5g9"};
}

std::vector<std::string> suite_ids_for(int genus) {
    auto sp = SurfaceParams::for_genus(genus);
    std::vector<std::string> out;
    if (sp.even) {
        out.push_back("gensets-even");
        if (genus == 12) out.push_back("g12");
        else if (sp.r >= 7 && sp.r % 2 == 1) out.push_back("r-odd");
        else if (sp.r >= 6 && sp.r % 2 == 0) out.push_back("r-even");
        if (genus == 10) out.push_back("g10");
        if (genus == 8) out.push_back("g8");
        if (genus == 6) out.push_back("g6");
    } else {
        out.push_back("gensets-odd");
        if (genus % 4 == 1 && (genus - 1) / 4 >= 3) out.push_back("odd-4k1");
        if (genus % 4 == 1) out.push_back("odd-4k1-tau");
        if (genus % 4 == 3 && genus >= 11) out.push_back("odd-4k3");
        if (genus == 7) out.push_back("g7");
        if (genus == 5 || genus == 9) out.push_back("g5g9");
    }
    return out;
}

ReplaySuite builtin_suite(const std::string& id, int genus) {
    auto ids = suite_ids_for(genus);
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw applicability_error("suite " + id + " is not applicable at genus " + std::to_string(genus));
    if (id == "g12") return build_g12(genus);
    if (id == "r-odd") return build_rodd(genus);
    if (id == "r-even") return build_reven_like("r-even", genus);
    if (id == "odd-4k1") return build_reven_like("odd-4k1", genus);
    if (id == "g10") return build_g10(genus);
    if (id == "g8") return build_g8(genus);
    if (id == "g6") return build_g6(genus);
    if (id == "odd-4k1-tau") return build_odd_tau(genus);
    if (id == "odd-4k3") return build_odd_4k3(genus);
    if (id == "g7") return build_g7(genus);
    if (id == "g5g9") return build_g5g9(genus);
    if (id == "gensets-even") return build_gensets_even(genus);
    if (id == "gensets-odd") return build_gensets_odd(genus);
    throw unknown_name_error("suite " + id);
}

std::vector<ReplaySuite> builtin_suites(int genus) {
    std::vector<ReplaySuite> out;
    for (const auto& id : suite_ids_for(genus)) out.push_back(builtin_suite(id, genus));
    return out;
}

}  // namespace twistgen
