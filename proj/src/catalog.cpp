#include "twistgen/catalog.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace twistgen {
namespace {

using Vec = std::vector<std::int64_t>;

Vec basis(int i, int g) {
    Vec v(static_cast<std::size_t>(g), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] + b[i];
    return o;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] - b[i];
    return o;
}

Vec neg(const Vec& a) {
    Vec o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = -a[i];
    return o;
}

std::int64_t dot(const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMat to_mat(const std::vector<Vec>& cols) {
    int g = static_cast<int>(cols.size());
    IntMat m(g);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

std::vector<std::int64_t> flatten(const IntMat& m) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(m.n) * m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            const Int& v = m(i, j);
            out[static_cast<std::size_t>(i) * m.n + j] = static_cast<std::int64_t>(v);
        }
    return out;
}

Vec apply_i64(const IntMat& m, const Vec& v) {
    auto big = m.apply(std::vector<Int>(v.begin(), v.end()));
    Vec out(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) out[i] = static_cast<std::int64_t>(big[i]);
    return out;
}

Vec apply_functional_i64(const IntMat& m, const Vec& p) {
    auto big = m.apply_functional(std::vector<Int>(p.begin(), p.end()));
    Vec out(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) out[i] = static_cast<std::int64_t>(big[i]);
    return out;
}

// Reduced (g-1)-dimensional rational action; defined when M w = +-w.
IntMat reduce_action(const IntMat& m) {
    int g = m.n;
    IntMat out(g - 1);
    for (int i = 0; i + 1 < g; ++i)
        for (int j = 0; j + 1 < g; ++j) out(i, j) = m(i, j) - m(g - 1, j);
    return out;
}

int reduced_det(const IntMat& m) {
    Int d = det_bareiss(reduce_action(m));
    if (d == 1) return 1;
    if (d == -1) return -1;
    throw invariant_error("action determinant not +-1");
}

bool preserves_w(const IntMat& m) {
    int g = m.n;
    std::vector<Int> w(static_cast<std::size_t>(g), 1);
    auto mw = m.apply(w);
    bool plus = true, minus = true;
    for (auto& x : mw) {
        if (x != 1) plus = false;
        if (x != -1) minus = false;
    }
    return plus || minus;
}

struct Builder {
    int g;
    SurfaceParams sp;
    int r;
    Catalog cat;
    std::map<std::string, std::size_t> curve_index;
    IntMat R;

    explicit Builder(int genus) : g(genus), sp(SurfaceParams::for_genus(genus)), r(sp.r) {
        cat.params = sp;
    }

    void add_curve(const std::string& name, Vec lift, Vec pairing) {
        CurveSpec cs;
        cs.name = name;
        cs.two_sided = (f2_weight(Lift(lift.begin(), lift.end())) % 2 == 0);
        cs.lift.assign(lift.begin(), lift.end());
        cs.pairing = std::move(pairing);
        curve_index[name] = cat.curves.size();
        cat.curves.push_back(std::move(cs));
    }

    const CurveSpec& curve(const std::string& n) const { return cat.curves[curve_index.at(n)]; }
    Vec lift_of(const std::string& n) const {
        const auto& l = curve(n).lift;
        return Vec(l.begin(), l.end());
    }

    std::string bname(int i) const { return "b" + std::to_string(((i - 1) % r + r) % r + 1); }
    std::string cnamew(int i) const { return "c" + std::to_string(((i - 1) % r + r) % r + 1); }

    IntMat twist(const std::string& n) const {
        const auto& cs = curve(n);
        IntMat m = IntMat::identity(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                m(i, j) += Int(cs.lift[static_cast<std::size_t>(i)]) * cs.pairing[static_cast<std::size_t>(j)];
        return m;
    }

    void base_curves() {
        add_curve("a1", add(basis(1, g), basis(2, g)), sub(basis(1, g), basis(2, g)));
        {
            Vec l(static_cast<std::size_t>(g), 0), p(static_cast<std::size_t>(g), 0);
            for (int k = 1; k <= 4; ++k) {
                l[static_cast<std::size_t>(k - 1)] = 1;
                p[static_cast<std::size_t>(k - 1)] = (k % 2 == 1) ? 1 : -1;
            }
            add_curve("a2", l, p);
        }
        for (int i = 3; i <= r; ++i) {
            Vec l(static_cast<std::size_t>(g), 0), p(static_cast<std::size_t>(g), 0);
            for (int k = 1; k <= 2 * i; ++k) {
                l[static_cast<std::size_t>(k - 1)] = 1;
                p[static_cast<std::size_t>(k - 1)] = (k % 2 == 1) ? 1 : -1;
            }
            add_curve("a" + std::to_string(i), l, p);
        }
        for (int i = 1; i <= r; ++i)
            add_curve("b" + std::to_string(i), add(basis(2 * i, g), basis(2 * i + 1, g)),
                      sub(basis(2 * i, g), basis(2 * i + 1, g)));
        for (int i = 1; i + 1 <= r; ++i)
            add_curve("c" + std::to_string(i), add(basis(2 * i + 1, g), basis(2 * i + 2, g)),
                      sub(basis(2 * i + 1, g), basis(2 * i + 2, g)));
        if (sp.even)
            add_curve("d" + std::to_string(r), add(basis(g - 1, g), basis(g, g)),
                      sub(basis(g - 1, g), basis(g, g)));
        add_curve("f", add(basis(1, g), basis(3, g)), sub(basis(1, g), basis(3, g)));
        {
            // e is the image of f under the twist about a1; transport class and pairing.
            Vec fl = lift_of("f"), fp = curve("f").pairing;
            Vec a1l = lift_of("a1"), a1p = curve("a1").pairing;
            std::int64_t q = dot(a1p, fl);
            Vec el = fl;
            for (std::size_t i = 0; i < el.size(); ++i) el[i] += q * a1l[i];
            std::int64_t qq = dot(fp, a1l);
            Vec ep = fp;
            for (std::size_t i = 0; i < ep.size(); ++i) ep[i] -= qq * a1p[i];
            add_curve("e", el, ep);
        }
        for (int i = 1; i <= g; ++i) add_curve("x" + std::to_string(i), basis(i, g), basis(i, g));
    }

    // The rotation of the circular model: fixes the axis crosscap classes,
    // shifts the chain by one handle.  Columns are derived by walking the
    // chain; the last two handle columns come from a_r and b_r.
    void build_rotation() {
        std::vector<Vec> col(static_cast<std::size_t>(g + 1), Vec(static_cast<std::size_t>(g), 0));
        col[1] = basis(1, g);
        // chain images: alpha_1 = a1 -> a2, then b_i -> b_{i+1}, c_i -> c_{i+1}
        std::vector<Vec> img;
        img.push_back(lift_of("a2"));
        for (int i = 1; i + 1 <= r; ++i) {
            img.push_back(lift_of("b" + std::to_string(i + 1)));
            if (i + 2 <= r) img.push_back(lift_of("c" + std::to_string(i + 1)));
            else img.push_back(Vec());  // placeholder for c_{r-1} -> c_r (unknown here)
        }
        // columns x2 .. x_{2r-1} from alpha_1 .. alpha_{2r-2}
        for (int j = 1; j <= 2 * r - 2; ++j) {
            const Vec& im = img[static_cast<std::size_t>(j - 1)];
            if (im.empty()) break;
            col[static_cast<std::size_t>(j + 1)] = sub(im, col[static_cast<std::size_t>(j)]);
        }
        // column x_{2r} from a_r -> a1; column x_{2r+1} from b_r -> b1
        Vec ar = (r >= 3) ? lift_of("a" + std::to_string(r)) : lift_of("a" + std::to_string(r));
        Vec sum(static_cast<std::size_t>(g), 0);
        for (int k = 1; k <= 2 * r - 1; ++k) sum = add(sum, col[static_cast<std::size_t>(k)]);
        col[static_cast<std::size_t>(2 * r)] = sub(lift_of("a1"), sum);
        col[static_cast<std::size_t>(2 * r + 1)] =
            sub(lift_of("b1"), col[static_cast<std::size_t>(2 * r)]);
        if (sp.even) col[static_cast<std::size_t>(g)] = basis(g, g);
        std::vector<Vec> cols(static_cast<std::size_t>(g));
        for (int j = 1; j <= g; ++j) cols[static_cast<std::size_t>(j - 1)] = col[static_cast<std::size_t>(j)];
        R = to_mat(cols);
        // wrap bridge c_r transported along the rotation
        Vec crl = apply_i64(R, lift_of("c" + std::to_string(r - 1)));
        IntMat Rinv = R.pow(r - 1);  // R has order r
        Vec crp = apply_functional_i64(Rinv, curve("c" + std::to_string(r - 1)).pairing);
        add_curve("c" + std::to_string(r), crl, crp);
        if (!R.pow(r).is_identity()) throw invariant_error("rotation order broken");
        if (!preserves_w(R)) throw invariant_error("rotation does not preserve w");
    }

    IntMat build_reflection() {
        // rho1: a1 -> a3, b_i -> -b_{4-i}, c_i -> -c_{3-i}, x1 -> -x1
        auto bmap = [&](int i) { return ((4 - i - 1) % r + r) % r + 1; };
        auto cmap = [&](int i) { return ((3 - i - 1) % r + r) % r + 1; };
        std::vector<Vec> col(static_cast<std::size_t>(g + 1), Vec(static_cast<std::size_t>(g), 0));
        col[1] = neg(basis(1, g));
        std::vector<Vec> img;
        img.push_back(r >= 3 ? lift_of("a3") : lift_of("a1"));
        for (int i = 1; i <= r; ++i) {
            if (i < r) {
                img.push_back(neg(lift_of("b" + std::to_string(bmap(i)))));
                img.push_back(neg(lift_of("c" + std::to_string(cmap(i)))));
            } else {
                img.push_back(neg(lift_of("b" + std::to_string(bmap(r)))));
            }
        }
        // chain alpha_1..alpha_{2r} gives columns x2..x_{2r+1}
        for (int j = 1; j <= 2 * r; ++j)
            col[static_cast<std::size_t>(j + 1)] =
                sub(img[static_cast<std::size_t>(j - 1)], col[static_cast<std::size_t>(j)]);
        if (sp.even) {
            Vec sum(static_cast<std::size_t>(g), 0);
            for (int k = 1; k < g; ++k) sum = add(sum, col[static_cast<std::size_t>(k)]);
            Vec w(static_cast<std::size_t>(g), 1);
            col[static_cast<std::size_t>(g)] = sub(w, sum);
        }
        std::vector<Vec> cols(static_cast<std::size_t>(g));
        for (int j = 1; j <= g; ++j) cols[static_cast<std::size_t>(j - 1)] = col[static_cast<std::size_t>(j)];
        IntMat m = to_mat(cols);
        if (sp.even && reduced_det(m) == -1) {
            for (auto& x : m.a) x = -x;
        }
        return m;
    }

    // The blackboard reflection tau: fixes each b-class, flips the odd chain
    // classes and keeps e; solved from those eigenvector constraints.
    IntMat build_tau() {
        using Rat = boost::rational<long long>;
        std::vector<std::pair<Vec, Vec>> pairs;
        pairs.emplace_back(lift_of("a1"), neg(lift_of("a1")));
        for (int i = 1; i <= r; ++i) pairs.emplace_back(lift_of("b" + std::to_string(i)), lift_of("b" + std::to_string(i)));
        for (int i = 1; i + 1 <= r; ++i)
            pairs.emplace_back(lift_of("c" + std::to_string(i)), neg(lift_of("c" + std::to_string(i))));
        pairs.emplace_back(lift_of("d" + std::to_string(r)), neg(lift_of("d" + std::to_string(r))));
        pairs.emplace_back(lift_of("e"), lift_of("e"));
        int n = g;
        // solve M * S = D column-wise via Gauss on [S^T | D^T] transposed system
        std::vector<std::vector<Rat>> aug(static_cast<std::size_t>(n),
                                          std::vector<Rat>(static_cast<std::size_t>(2 * n), Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    Rat(pairs[static_cast<std::size_t>(j)].first[static_cast<std::size_t>(i)]);
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)] = Rat(i == j ? 1 : 0);
            }
        // invert S (columns = sources)
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = c; i < n; ++i)
                if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != Rat(0)) { piv = i; break; }
            if (piv < 0) throw invariant_error("tau solve: singular source set");
            std::swap(aug[static_cast<std::size_t>(c)], aug[static_cast<std::size_t>(piv)]);
            Rat pv = aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            for (auto& x : aug[static_cast<std::size_t>(c)]) x /= pv;
            for (int i = 0; i < n; ++i) {
                if (i == c) continue;
                Rat f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                if (f == Rat(0)) continue;
                for (int j = 0; j < 2 * n; ++j)
                    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        f * aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
            }
        }
        // M = D * S^{-1}
        IntMat m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s(0);
                for (int t = 0; t < n; ++t)
                    s += Rat(pairs[static_cast<std::size_t>(t)].second[static_cast<std::size_t>(i)]) *
                         aug[static_cast<std::size_t>(t)][static_cast<std::size_t>(n + j)];
                if (s.denominator() != 1) throw invariant_error("tau solve: non-integral entry");
                m(i, j) = s.numerator();
            }
        if (reduced_det(m) == 1)
            for (auto& x : m.a) x = -x;
        return m;
    }

    // +-P symmetries given by involutive crosscap pairings; global sign -1
    // (these reflections reverse neighbourhood orientations).
    std::vector<std::int64_t> pm_perm(const std::vector<std::pair<int, int>>& swaps) const {
        std::vector<int> p(static_cast<std::size_t>(g + 1));
        for (int i = 1; i <= g; ++i) p[static_cast<std::size_t>(i)] = i;
        for (auto [a, b] : swaps) {
            p[static_cast<std::size_t>(a)] = b;
            p[static_cast<std::size_t>(b)] = a;
        }
        std::vector<std::int64_t> m(static_cast<std::size_t>(g) * g, 0);
        for (int j = 1; j <= g; ++j)
            m[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1) * g + (j - 1)] = -1;
        return m;
    }

    void add_symmetry(const std::string& name, std::vector<std::int64_t> action,
                      bool provisional = false, const std::string& note = "") {
        SymmetrySpec s;
        s.name = name;
        s.action = std::move(action);
        IntMat m = s.matrix(g);
        if (!preserves_w(m)) throw invariant_error(name + ": action does not preserve w");
        s.declared_d = reduced_det(m);
        s.provisional = provisional;
        s.note = note;
        cat.symmetries.push_back(std::move(s));
    }

    void add_claim(const std::string& sym, const std::string& from, const std::string& to) {
        auto& s = const_cast<SymmetrySpec&>(cat.symmetry(sym));
        IntMat m = s.matrix(g);
        const auto& u = curve(from);
        const auto& v = curve(to);
        Vec img = apply_i64(m, Vec(u.lift.begin(), u.lift.end()));
        Vec tgt(v.lift.begin(), v.lift.end());
        int cls = 0;
        auto ri = reduce_rational(Lift(img.begin(), img.end()));
        auto rt = reduce_rational(Lift(tgt.begin(), tgt.end()));
        auto rtn = rt;
        for (auto& x : rtn) x = -x;
        if (ri == rt) cls = 1;
        else if (ri == rtn) cls = -1;
        else throw invariant_error(sym + " does not map " + from + " to +-" + to);
        int sgn = cls;
        if (u.two_sided && v.two_sided) {
            // conjugation sign from the twist transport (symmetries are involutions)
            IntMat conj = m.mul(twist(from)).mul(m);
            if (conj == twist(to)) sgn = 1;
            else {
                IntMat tv = twist(to);
                IntMat inv = IntMat::identity(g);
                for (int i = 0; i < g; ++i)
                    for (int j = 0; j < g; ++j)
                        inv(i, j) -= Int(v.lift[static_cast<std::size_t>(i)]) * v.pairing[static_cast<std::size_t>(j)];
                if (conj == inv) sgn = -1;
                else throw invariant_error(sym + ": twist conjugation of " + from + " is not " + to + "^+-1");
            }
        }
        s.curve_claims.push_back({from, to, sgn});
    }

    void symmetries() {
        if (sp.even && r >= 3) {
            IntMat rho1 = build_reflection();
            IntMat rho2 = R.mul(rho1);
            IntMat tau = build_tau();
            add_symmetry("rho1", flatten(rho1));
            add_symmetry("rho2", flatten(rho2));
            add_symmetry("tau", flatten(tau));
            add_symmetry("rho1p", flatten(rho1.mul(tau)));
            add_symmetry("rho2p", flatten(rho2.mul(tau)));
            add_symmetry("sigma", pm_perm({{2, 3}, {4, 5}, {g - 2, g}}));
            add_claim("sigma", "f", "a1");
            add_claim("sigma", "a1", "f");
            add_claim("sigma", "b" + std::to_string(r), "d" + std::to_string(r));
            add_claim("sigma", "d" + std::to_string(r), "b" + std::to_string(r));
            if (r % 2 == 1) {
                add_claim("rho1", "a1", "a3");
                add_claim("rho1", "b2", "b2");
                add_claim("rho1", "c" + std::to_string((r + 3) / 2), "c" + std::to_string((r + 3) / 2));
            } else {
                add_claim("rho1", "a2", "a2");
                add_claim("rho1", "a1", "a3");
                add_claim("rho1", "b" + std::to_string((r + 4) / 2), "b" + std::to_string((r + 4) / 2));
                add_claim("rho1", cnamew(r / 2), cnamew((r + 6) / 2));
            }
            // tau fixes every chain curve; record the conjugation signs
            add_claim("tau", "a1", "a1");
            for (int i = 1; i <= r; ++i) add_claim("tau", "b" + std::to_string(i), "b" + std::to_string(i));
            for (int i = 1; i < r; ++i) add_claim("tau", "c" + std::to_string(i), "c" + std::to_string(i));
            add_claim("tau", "d" + std::to_string(r), "d" + std::to_string(r));
            add_claim("tau", "e", "e");
            add_claim("tau", "a2", "a2");
        }
        if (sp.even && g == 10) {
            add_symmetry("delta1", pm_perm({{1, 2}, {5, 6}, {9, 10}, {3, 8}, {4, 7}}));
            add_symmetry("delta2", pm_perm({{1, 3}, {4, 8}, {5, 7}}));
            add_symmetry("delta3", pm_perm({{2, 3}, {8, 9}, {7, 10}}));
            add_claim("delta2", "a1", "b1");
            add_claim("delta3", "c3", "d4");
            add_claim("delta1", "a1", "a1");
        }
        if (sp.even && g == 8) {
            std::string note = "source text says D(delta_i)=1 here; the reflections are the lambda_i";
            add_symmetry("lambda1", pm_perm({{1, 2}, {4, 5}, {3, 6}}), false, note);
            add_symmetry("lambda2", pm_perm({{1, 3}, {4, 6}, {7, 8}}), false, note);
            add_symmetry("lambda3", pm_perm({{2, 3}, {5, 8}, {6, 7}}), false, note);
            add_claim("lambda3", "c2", "d3");
        }
        if (sp.even && g == 6) {
            add_symmetry("delta1", pm_perm({{1, 2}, {3, 4}, {5, 6}}));
            add_symmetry("delta2", pm_perm({{1, 3}}));
            add_symmetry("xi1", pm_perm({{2, 3}}));
            add_symmetry("xi2", pm_perm({{1, 2}, {4, 5}, {3, 6}}));
            add_claim("delta2", "a1", "b1");
            add_claim("xi2", "c1", "d2");
            add_claim("xi1", "a1", "f");
        }
        if (!sp.even) {
            IntMat rho1 = build_reflection();
            IntMat rho2 = R.mul(rho1);
            add_symmetry("rho1", flatten(rho1));
            add_symmetry("rho2", flatten(rho2));
            add_symmetry("beta", pm_perm({{2, 3}, {4, 5}}));
            add_claim("beta", "a1", "f");
            int n = (g % 4 == 1) ? g : g - 2;
            auto circ = [&](int i) { return (i - 1 + 10 * n) % n + 1; };
            std::vector<std::pair<int, int>> t1p, t2p;
            for (int i = 1; i <= n; ++i) {
                int j = circ(4 - i);
                if (i < j) t1p.push_back({i, j});
                j = circ(3 - i);
                if (i < j) t2p.push_back({i, j});
            }
            add_symmetry("tau1", pm_perm(t1p));
            add_symmetry("tau2", pm_perm(t2p));
            add_claim("tau2", "a1", "a1");
            if (g % 4 == 1) {
                std::vector<std::pair<int, int>> gp;
                for (int i = 1; i < g + 1 - i; ++i) gp.push_back({i, g + 1 - i});
                add_symmetry("gamma", pm_perm(gp), true,
                             "reflection fixed only up to the stated order/determinant data");
                add_claim("gamma", "a1", "b" + std::to_string(r));
                int kk = (g - 1) / 4;
                if (kk >= 3) {
                    add_claim("rho1", "a2", "a2");
                    add_claim("rho1", "b" + std::to_string((r + 4) / 2), "b" + std::to_string((r + 4) / 2));
                    add_claim("rho1", cnamew(r / 2), cnamew((r + 6) / 2));
                }
            }
            if (g % 4 == 3 && g >= 11) {
                add_symmetry("mu", pm_perm({{g - 3, g}, {g - 2, g - 1}}), false,
                             "crosscap pairing reconstructed from the stated curve images");
                int kk = (g - 3) / 4;
                add_claim("mu", "b" + std::to_string(2 * kk), "b" + std::to_string(2 * kk + 1));
            }
            if (g == 7) {
                add_symmetry("sigma1", pm_perm({{2, 3}, {4, 5}}));
                add_symmetry("sigma2", pm_perm({{4, 7}, {5, 6}}));
                add_claim("sigma1", "a1", "f");
                add_claim("sigma2", "b2", "b3");
            }
        }
    }

    void disjoint_pairs() {
        // structural disjointness of the standard configuration, filtered by
        // exact pairing orthogonality in both directions
        std::vector<std::string> two_sided;
        for (const auto& c : cat.curves)
            if (c.two_sided) two_sided.push_back(c.name);
        auto orthogonal = [&](const std::string& x, const std::string& y) {
            const auto& cx = curve(x);
            const auto& cy = curve(y);
            if (mod2_pairing(cx.lift, cy.lift) != 0) return false;
            std::int64_t p1 = 0, p2 = 0;
            for (std::size_t i = 0; i < cx.lift.size(); ++i) {
                p1 += cx.pairing[i] * cy.lift[i];
                p2 += cy.pairing[i] * cx.lift[i];
            }
            return p1 == 0 && p2 == 0;
        };
        std::vector<std::pair<std::string, std::string>> structural;
        auto push = [&](const std::string& x, const std::string& y) {
            if (x != y && orthogonal(x, y)) structural.push_back({x, y});
        };
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                push("a" + std::to_string(i), "a" + std::to_string(j));
                push("b" + std::to_string(i), "b" + std::to_string(j));
            }
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                if (i != j) push("a" + std::to_string(i), "b" + std::to_string(j));
                push("a" + std::to_string(i), "c" + std::to_string(j));
                if (j != i && j != i - 1 && !(i == 1 && j == r))
                    push("b" + std::to_string(i), "c" + std::to_string(j));
            }
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) push("c" + std::to_string(i), "c" + std::to_string(j));
        if (sp.even) {
            std::string dr = "d" + std::to_string(r);
            for (int i = 1; i <= r; ++i) {
                push("a" + std::to_string(i), dr);
                if (i < r) push("b" + std::to_string(i), dr);
            }
            for (int i = 1; i + 1 <= r; ++i) push("c" + std::to_string(i), dr);
            push("e", dr);
            push("f", dr);
        }
        push("e", "b1");
        push("f", "b1");
        for (int i = 2; i <= r; ++i) {
            push("e", "b" + std::to_string(i));
            push("f", "b" + std::to_string(i));
            push("e", "a" + std::to_string(i));
        }
        for (int i = 2; i + 1 <= r; ++i) {
            push("e", "c" + std::to_string(i));
            push("f", "c" + std::to_string(i));
        }
        cat.disjoint_pairs = std::move(structural);
    }

    Catalog build() {
        base_curves();
        build_rotation();
        symmetries();
        disjoint_pairs();
        return cat;
    }
};

}  // namespace

const CurveSpec* Catalog::find_curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

const SymmetrySpec* Catalog::find_symmetry(const std::string& name) const {
    for (const auto& s : symmetries)
        if (s.name == name) return &s;
    return nullptr;
}

const CurveSpec& Catalog::curve(const std::string& name) const {
    if (const auto* c = find_curve(name)) return *c;
    throw unknown_name_error(name);
}

const SymmetrySpec& Catalog::symmetry(const std::string& name) const {
    if (const auto* s = find_symmetry(name)) return *s;
    throw unknown_name_error(name);
}

bool Catalog::operator==(const Catalog& o) const {
    auto curve_eq = [](const CurveSpec& a, const CurveSpec& b) {
        return a.name == b.name && a.two_sided == b.two_sided && a.lift == b.lift && a.pairing == b.pairing;
    };
    auto sym_eq = [](const SymmetrySpec& a, const SymmetrySpec& b) {
        if (a.name != b.name || a.action != b.action || a.declared_d != b.declared_d ||
            a.provisional != b.provisional || a.note != b.note ||
            a.curve_claims.size() != b.curve_claims.size())
            return false;
        for (std::size_t i = 0; i < a.curve_claims.size(); ++i) {
            const auto& x = a.curve_claims[i];
            const auto& y = b.curve_claims[i];
            if (x.from != y.from || x.to != y.to || x.sign != y.sign) return false;
        }
        return true;
    };
    if (schema_version != o.schema_version || params.genus != o.params.genus) return false;
    if (curves.size() != o.curves.size() || symmetries.size() != o.symmetries.size()) return false;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (!curve_eq(curves[i], o.curves[i])) return false;
    for (std::size_t i = 0; i < symmetries.size(); ++i)
        if (!sym_eq(symmetries[i], o.symmetries[i])) return false;
    return disjoint_pairs == o.disjoint_pairs;
}

Catalog builtin_catalog(int genus) {
    if (genus < 5) throw genus_error("unsupported genus " + std::to_string(genus) + " (minimum is 5)");
    if (genus > 26) throw genus_error("unsupported genus " + std::to_string(genus) + " (maximum is 26)");
    Builder b(genus);
    return b.build();
}

}  // namespace twistgen
