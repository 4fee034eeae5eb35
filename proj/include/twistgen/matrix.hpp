#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistgen/common.hpp"

namespace twistgen {

using Int = boost::multiprecision::cpp_int;

// Dense square integer matrix, column-vector convention: columns are the
// images of the basis vectors, (A*B) means B acts first.
struct IntMat {
    int n = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    explicit IntMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

    static IntMat identity(int n) {
        IntMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMat mul(const IntMat& o) const {
        IntMat out(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n; ++j) out(i, j) += v * o(k, j);
            }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        std::vector<Int> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }

    // Functional transport: returns p . M (row vector times matrix).
    std::vector<Int> apply_functional(const std::vector<Int>& p) const {
        std::vector<Int> out(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int i = 0; i < n; ++i) s += p[static_cast<std::size_t>(i)] * (*this)(i, j);
            out[static_cast<std::size_t>(j)] = s;
        }
        return out;
    }

    IntMat pow(int e) const {
        IntMat out = identity(n), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) out = out.mul(base);
            base = base.mul(base);
        }
        return out;
    }
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_bareiss(IntMat m) {
    int n = m.n;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// F2 matrix with columns packed as bit masks (bit i of cols[j] is entry (i,j)).
struct F2Mat {
    int n = 0;
    std::vector<std::uint64_t> cols;

    F2Mat() = default;
    explicit F2Mat(int n_) : n(n_), cols(static_cast<std::size_t>(n_), 0) {}

    static F2Mat identity(int n) {
        F2Mat m(n);
        for (int j = 0; j < n; ++j) m.cols[static_cast<std::size_t>(j)] = 1ull << j;
        return m;
    }

    bool operator==(const F2Mat& o) const { return n == o.n && cols == o.cols; }

    std::uint64_t apply(std::uint64_t v) const {
        std::uint64_t out = 0;
        while (v) {
            int j = std::countr_zero(v);
            out ^= cols[static_cast<std::size_t>(j)];
            v &= v - 1;
        }
        return out;
    }

    F2Mat mul(const F2Mat& o) const {
        F2Mat out(n);
        for (int j = 0; j < n; ++j) out.cols[static_cast<std::size_t>(j)] = apply(o.cols[static_cast<std::size_t>(j)]);
        return out;
    }

    bool is_identity() const { return *this == identity(n); }

    F2Mat transpose() const {
        F2Mat out(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if ((cols[static_cast<std::size_t>(j)] >> i) & 1)
                    out.cols[static_cast<std::size_t>(i)] |= (1ull << j);
        return out;
    }

    F2Mat inverse() const {
        // Gauss-Jordan on rows of [A | I].
        std::vector<std::uint64_t> rowsA(static_cast<std::size_t>(n), 0), rowsI(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if ((cols[static_cast<std::size_t>(j)] >> i) & 1) rowsA[static_cast<std::size_t>(i)] |= (1ull << j);
            rowsI[static_cast<std::size_t>(i)] = 1ull << i;
        }
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = c; i < n; ++i)
                if ((rowsA[static_cast<std::size_t>(i)] >> c) & 1) { piv = i; break; }
            if (piv < 0) throw invariant_error("singular F2 matrix");
            std::swap(rowsA[static_cast<std::size_t>(c)], rowsA[static_cast<std::size_t>(piv)]);
            std::swap(rowsI[static_cast<std::size_t>(c)], rowsI[static_cast<std::size_t>(piv)]);
            for (int i = 0; i < n; ++i)
                if (i != c && ((rowsA[static_cast<std::size_t>(i)] >> c) & 1)) {
                    rowsA[static_cast<std::size_t>(i)] ^= rowsA[static_cast<std::size_t>(c)];
                    rowsI[static_cast<std::size_t>(i)] ^= rowsI[static_cast<std::size_t>(c)];
                }
        }
        F2Mat out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rowsI[static_cast<std::size_t>(i)] >> j) & 1) out.cols[static_cast<std::size_t>(j)] |= (1ull << i);
        return out;
    }

    bool invertible() const {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((cols[static_cast<std::size_t>(j)] >> i) & 1) rows[static_cast<std::size_t>(i)] |= (1ull << j);
        int rank = 0;
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = rank; i < n; ++i)
                if ((rows[static_cast<std::size_t>(i)] >> c) & 1) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
            for (int i = 0; i < n; ++i)
                if (i != rank && ((rows[static_cast<std::size_t>(i)] >> c) & 1))
                    rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(rank)];
            ++rank;
        }
        return rank == n;
    }
};

// Small dense matrix over F_p, row-major.
struct FpMat {
    int n = 0;
    int p = 3;
    std::vector<std::uint8_t> a;

    FpMat() = default;
    FpMat(int n_, int p_) : n(n_), p(p_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    static FpMat identity(int n, int p) {
        FpMat m(n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::uint8_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const FpMat& o) const { return n == o.n && p == o.p && a == o.a; }

    FpMat mul(const FpMat& o) const {
        FpMat out(n, p);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                int v = (*this)(i, k);
                if (!v) continue;
                for (int j = 0; j < n; ++j)
                    out(i, j) = static_cast<std::uint8_t>((out(i, j) + v * o(k, j)) % p);
            }
        return out;
    }

    bool is_identity() const { return *this == identity(n, p); }

    FpMat inverse() const {
        std::vector<int> inv_tab(static_cast<std::size_t>(p), 0);
        for (int x = 1; x < p; ++x)
            for (int y = 1; y < p; ++y)
                if (x * y % p == 1) inv_tab[static_cast<std::size_t>(x)] = y;
        std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
        }
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = c; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) { piv = i; break; }
            if (piv < 0) throw invariant_error("singular Fp matrix");
            std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(piv)]);
            int f = inv_tab[static_cast<std::size_t>(m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)])];
            for (int j = 0; j < 2 * n; ++j)
                m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] * f % p;
            for (int i = 0; i < n; ++i) {
                if (i == c) continue;
                int v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                if (!v) continue;
                for (int j = 0; j < 2 * n; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - v * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        FpMat out(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) = static_cast<std::uint8_t>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
        return out;
    }
};

}  // namespace twistgen
