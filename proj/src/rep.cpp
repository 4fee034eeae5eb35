#include "twistgen/rep.hpp"

#include <cctype>
#include <sstream>

namespace twistgen {

namespace {

IntMat reduce_x_action(const IntMat& m) {
    int g = m.n;
    IntMat out(g - 1);
    for (int i = 0; i + 1 < g; ++i)
        for (int j = 0; j + 1 < g; ++j) out(i, j) = m(i, j) - m(g - 1, j);
    return out;
}

const CurveSpec& twist_curve(const Catalog& c, const std::string& name) {
    std::string lower = name;
    lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
    const auto& cv = c.curve(lower);
    if (!cv.two_sided)
        throw invariant_error("cannot twist about one-sided curve " + lower);
    return cv;
}

}  // namespace

IntMat twist_matrix_q(const Catalog& c, const std::string& curve) {
    const auto& cv = c.curve(curve);
    if (!cv.two_sided) throw invariant_error("cannot twist about one-sided curve " + curve);
    int g = c.params.genus;
    // v -> v + <v,curve> * curve on the x-lattice, then reduce
    IntMat m = IntMat::identity(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            m(i, j) += Int(cv.lift[static_cast<std::size_t>(i)]) * cv.pairing[static_cast<std::size_t>(j)];
    return reduce_x_action(m);
}

F2Mat twist_matrix_f2(const Catalog& c, const std::string& curve) {
    const auto& cv = c.curve(curve);
    if (!cv.two_sided) throw invariant_error("cannot twist about one-sided curve " + curve);
    int g = c.params.genus;
    std::uint64_t a = reduce_f2(cv.lift);
    F2Mat m = F2Mat::identity(g);
    for (int j = 0; j < g; ++j)
        if ((a >> j) & 1) m.cols[static_cast<std::size_t>(j)] ^= a;
    return m;
}

FpMat twist_matrix_fp(const Catalog& c, const std::string& curve, int p) {
    IntMat q = twist_matrix_q(c, curve);
    FpMat m(q.n, p);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            Int v = q(i, j) % p;
            if (v < 0) v += p;
            m(i, j) = static_cast<std::uint8_t>(v);
        }
    return m;
}

IntMat symmetry_matrix_q(const Catalog& c, const std::string& sym) {
    return reduce_x_action(c.symmetry(sym).matrix(c.params.genus));
}

F2Mat symmetry_matrix_f2(const Catalog& c, const std::string& sym) {
    const auto& s = c.symmetry(sym);
    int g = c.params.genus;
    F2Mat m(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (s.action[static_cast<std::size_t>(i) * g + j] & 1)
                m.cols[static_cast<std::size_t>(j)] |= (1ull << i);
    return m;
}

FpMat symmetry_matrix_fp(const Catalog& c, const std::string& sym, int p) {
    IntMat q = symmetry_matrix_q(c, sym);
    FpMat m(q.n, p);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            Int v = q(i, j) % p;
            if (v < 0) v += p;
            m(i, j) = static_cast<std::uint8_t>(v);
        }
    return m;
}

IntMat generator_matrix_q(const Catalog& c, const std::string& gen, int exp) {
    IntMat base;
    bool is_sym = c.find_symmetry(gen) != nullptr;
    if (is_sym) {
        base = symmetry_matrix_q(c, gen);
        return (exp % 2 == 0) ? IntMat::identity(base.n) : base;  // involutions
    }
    if (!std::isupper(static_cast<unsigned char>(gen[0]))) throw unknown_name_error(gen);
    const auto& cv = twist_curve(c, gen);
    int g = c.params.genus;
    IntMat m = IntMat::identity(g);
    int e = exp < 0 ? -1 : 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            m(i, j) += Int(e) * Int(cv.lift[static_cast<std::size_t>(i)]) * cv.pairing[static_cast<std::size_t>(j)];
    IntMat red = reduce_x_action(m);
    return red.pow(exp < 0 ? -exp : exp);
}

F2Mat generator_matrix_f2(const Catalog& c, const std::string& gen, int exp) {
    bool is_sym = c.find_symmetry(gen) != nullptr;
    F2Mat base;
    if (is_sym) base = symmetry_matrix_f2(c, gen);
    else if (std::isupper(static_cast<unsigned char>(gen[0]))) {
        twist_curve(c, gen);  // validates
        std::string lower = gen;
        lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
        base = twist_matrix_f2(c, lower);
    } else {
        throw unknown_name_error(gen);
    }
    // every generator squares to the identity mod 2
    return (exp % 2 == 0) ? F2Mat::identity(base.n) : base;
}

FpMat generator_matrix_fp(const Catalog& c, const std::string& gen, int exp, int p) {
    IntMat q = generator_matrix_q(c, gen, exp);
    FpMat m(q.n, p);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            Int v = q(i, j) % p;
            if (v < 0) v += p;
            m(i, j) = static_cast<std::uint8_t>(v);
        }
    return m;
}

IntMat generator_matrix_x(const Catalog& c, const std::string& gen, int exp) {
    int g = c.params.genus;
    if (const auto* s = c.find_symmetry(gen)) {
        return (exp % 2 == 0) ? IntMat::identity(g) : s->matrix(g);
    }
    if (!std::isupper(static_cast<unsigned char>(gen[0]))) throw unknown_name_error(gen);
    const auto& cv = twist_curve(c, gen);
    IntMat m = IntMat::identity(g);
    int e = exp < 0 ? -1 : 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            m(i, j) += Int(e) * Int(cv.lift[static_cast<std::size_t>(i)]) * cv.pairing[static_cast<std::size_t>(j)];
    return m.pow(exp < 0 ? -exp : exp);
}

IntMat evaluate_x(const Catalog& c, const Word& w) {
    IntMat out = IntMat::identity(c.params.genus);
    for (const auto& f : w.factors) out = out.mul(generator_matrix_x(c, f.gen, f.exp));
    return out;
}

IntMat evaluate_q(const Catalog& c, const Word& w) {
    IntMat out = IntMat::identity(c.params.genus - 1);
    for (const auto& f : w.factors) out = out.mul(generator_matrix_q(c, f.gen, f.exp));
    return out;
}

F2Mat evaluate_f2(const Catalog& c, const Word& w) {
    F2Mat out = F2Mat::identity(c.params.genus);
    for (const auto& f : w.factors) out = out.mul(generator_matrix_f2(c, f.gen, f.exp));
    return out;
}

FpMat evaluate_fp(const Catalog& c, const Word& w, int p) {
    FpMat out = FpMat::identity(c.params.genus - 1, p);
    for (const auto& f : w.factors) out = out.mul(generator_matrix_fp(c, f.gen, f.exp, p));
    return out;
}

int d_value(const Catalog& c, const Word& w) {
    Int d = det_bareiss(evaluate_q(c, w));
    if (d == 1) return 1;
    if (d == -1) return -1;
    throw invariant_error("word evaluates to a non-unimodular matrix");
}

std::vector<Int> image_of_class_q(const Catalog& c, const Word& w, const std::string& curve) {
    const auto& cv = c.curve(curve);
    auto red = reduce_rational(cv.lift);
    return evaluate_q(c, w).apply(std::vector<Int>(red.begin(), red.end()));
}

std::uint64_t image_of_class_f2(const Catalog& c, const Word& w, const std::string& curve) {
    return evaluate_f2(c, w).apply(reduce_f2(c.curve(curve).lift));
}

F2Mat f2_quotient_action(const F2Mat& m) {
    int g = m.n;
    std::uint64_t wmask = (g == 64) ? ~0ull : ((1ull << g) - 1);
    if (m.apply(wmask) != wmask) throw invariant_error("matrix does not fix w mod 2");
    F2Mat out(g - 1);
    std::uint64_t low = (1ull << (g - 1)) - 1;
    for (int j = 0; j + 1 < g; ++j) {
        std::uint64_t v = m.cols[static_cast<std::size_t>(j)];
        if ((v >> (g - 1)) & 1) v ^= wmask;
        out.cols[static_cast<std::size_t>(j)] = v & low;
    }
    return out;
}

F2Mat q_mod2(const IntMat& m) {
    F2Mat out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m(i, j) % 2 != 0) out.cols[static_cast<std::size_t>(j)] |= (1ull << i);
    return out;
}

std::string format_matrix(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.n; ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string format_matrix(const F2Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.n; ++j)
            os << (j ? ", " : "") << ((m.cols[static_cast<std::size_t>(j)] >> i) & 1);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string format_matrix(const FpMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.n; ++j) os << (j ? ", " : "") << static_cast<int>(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace twistgen
