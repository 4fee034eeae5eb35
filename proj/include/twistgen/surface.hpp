#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistgen/common.hpp"

namespace twistgen {

// Coefficient systems for the first homology of N_g.  Over the rationals
// (and over F_p for odd p) the relation 2(x_1+...+x_g)=0 kills the class
// w = x_1+...+x_g, so the rank drops to g-1; over F_2 all g crosscap
// classes survive.
struct Coeff {
    enum class Tag { f2, rational, fp };
    Tag tag = Tag::rational;
    int p = 0;  // set for Tag::fp, an odd prime <= 7

    static Coeff f2() { return {Tag::f2, 0}; }
    static Coeff rational() { return {Tag::rational, 0}; }
    static Coeff fp(int p) {
        if (p != 3 && p != 5 && p != 7)
            throw invariant_error("fp coefficients require p in {3,5,7}");
        return {Tag::fp, p};
    }
    bool operator==(const Coeff&) const = default;
    std::string name() const {
        switch (tag) {
            case Tag::f2: return "f2";
            case Tag::rational: return "q";
            default: return "f" + std::to_string(p);
        }
    }
};

struct SurfaceParams {
    int genus = 0;
    bool even = false;
    int r = 0;                 // g = 2r+2 (even) or g = 2r+1 (odd)
    std::optional<int> k;      // set when g = 4k+1 or 4k+3

    static SurfaceParams for_genus(int g) {
        if (g < 5)
            throw genus_error("genus must be at least 5, got " + std::to_string(g));
        SurfaceParams sp;
        sp.genus = g;
        sp.even = (g % 2 == 0);
        sp.r = sp.even ? (g - 2) / 2 : (g - 1) / 2;
        if (!sp.even) sp.k = (g % 4 == 1) ? (g - 1) / 4 : (g - 3) / 4;
        return sp;
    }
};

inline int dim(const SurfaceParams& sp, const Coeff& c) {
    return c.tag == Coeff::Tag::f2 ? sp.genus : sp.genus - 1;
}

// A homology class as an integer vector over the formal basis x_1..x_g.
using Lift = std::vector<std::int64_t>;

inline Lift basis_class(int i, int g) {
    Lift v(static_cast<std::size_t>(g), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

// w = x_1 + ... + x_g, the unique 2-torsion class.
inline Lift characteristic_class(const SurfaceParams& sp) {
    return Lift(static_cast<std::size_t>(sp.genus), 1);
}

// Canonical reduction: substitute x_g = -(x_1+...+x_{g-1}).
inline std::vector<std::int64_t> reduce_rational(const Lift& lift) {
    std::size_t g = lift.size();
    std::vector<std::int64_t> out(g - 1);
    for (std::size_t i = 0; i + 1 < g; ++i) out[i] = lift[i] - lift[g - 1];
    return out;
}

inline std::uint64_t reduce_f2(const Lift& lift) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < lift.size(); ++i)
        if (lift[i] & 1) m |= (1ull << i);
    return m;
}

inline std::vector<std::uint8_t> reduce_fp(const Lift& lift, int p) {
    auto q = reduce_rational(lift);
    std::vector<std::uint8_t> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::int64_t v = q[i] % p;
        if (v < 0) v += p;
        out[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

// Mod-2 intersection pairing; the crosscap cores form an orthonormal basis
// for it (one-sided cores self-intersect once, distinct cores are disjoint).
inline int mod2_pairing(const Lift& u, const Lift& v) {
    if (u.size() != v.size()) throw invariant_error("pairing: length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return static_cast<int>(((s % 2) + 2) % 2);
}

inline int f2_weight(const Lift& lift) {
    int w = 0;
    for (auto x : lift) w += static_cast<int>(((x % 2) + 2) % 2);
    return w;
}

}  // namespace twistgen
