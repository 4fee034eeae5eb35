#pragma once

#include <cstdint>
#include <vector>

#include "twistgen/matrix.hpp"

namespace twistgen {

// Natural action on the nonzero vectors of F_q^n, with points encoded as
// integers: bit masks over F2, base-p digit strings over F_p.

struct GroupOptions {
    // Limits: refuse point sets beyond this size (resource_error).
    std::uint64_t max_points = 1u << 19;
    std::uint64_t closure_cap = 1000000;
};

struct F2Action {
    int n = 0;
    std::uint64_t npoints() const { return (1ull << n); }
    static std::uint32_t apply(const F2Mat& m, std::uint32_t pt) {
        return static_cast<std::uint32_t>(m.apply(pt));
    }
};

struct FpAction {
    int n = 0;
    int p = 3;
    std::uint64_t npoints() const {
        std::uint64_t s = 1;
        for (int i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(p);
        return s;
    }
    std::uint32_t apply(const FpMat& m, std::uint32_t pt) const {
        int dig[32];
        for (int i = 0; i < n; ++i) {
            dig[i] = static_cast<int>(pt % static_cast<std::uint32_t>(p));
            pt /= static_cast<std::uint32_t>(p);
        }
        std::uint32_t out = 0;
        for (int i = n - 1; i >= 0; --i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += m(i, j) * dig[j];
            out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(s % p);
        }
        return out;
    }
};

// Deterministic stabilizer chain (base chosen by the first-moved-point rule,
// orbits extended in FIFO order).  Completed chains are immutable and safe
// to query concurrently.
template <class Mat, class Action>
class StabilizerChain {
public:
    StabilizerChain(Action action, GroupOptions opt = {});

    void add_generator(const Mat& m);
    void finish();  // no-op; construction is eager

    Int order() const;
    bool contains(const Mat& m) const;
    const std::vector<std::uint32_t>& base_points() const { return bases_; }
    std::vector<std::uint64_t> orbit_sizes() const;

private:
    struct StrongGen {
        Mat m, inv;
        std::size_t level;  // first base moved
    };

    struct Level {
        std::uint32_t base = 0;
        std::vector<std::int32_t> via;      // per point: index into act_gens, -1 outside, -2 root
        std::vector<std::uint32_t> parent;  // per point
        std::vector<std::uint32_t> orbit;   // BFS order
        // append-only adoption (in arrival order) of strong generators
        // belonging to this level or deeper
        std::vector<Mat> act_gens;
        std::vector<Mat> act_inv;
        std::size_t consumed = 0;  // watermark into the chain-wide arrival list
        std::size_t bfs_done = 0;
        std::size_t processed_pts = 0;
        std::size_t processed_gens = 0;
    };

    Mat sift(Mat m, std::size_t& level_out) const;
    Mat sift_from(Mat m, std::size_t start, std::size_t& level_out) const;
    void insert_at(const Mat& m, std::size_t level);
    void extend_level(std::size_t i);
    void schreier_fill(std::size_t i);
    std::size_t gens_count_at(std::size_t i) const;
    Mat rep(const Level& lv, std::uint32_t pt) const;

    Action action_;
    GroupOptions opt_;
    std::vector<StrongGen> sgens_;  // arrival order
    std::vector<Level> levels_;
    std::vector<std::uint32_t> bases_;
    Mat id_;
};

using F2Chain = StabilizerChain<F2Mat, F2Action>;
using FpChain = StabilizerChain<FpMat, FpAction>;

F2Chain build_chain(const std::vector<F2Mat>& gens, GroupOptions opt = {});
FpChain build_chain_fp(const std::vector<FpMat>& gens, int p, GroupOptions opt = {});

bool same_subgroup(const std::vector<F2Mat>& a, const std::vector<F2Mat>& b, GroupOptions opt = {});
bool same_subgroup_fp(const std::vector<FpMat>& a, const std::vector<FpMat>& b, int p, GroupOptions opt = {});

// Breadth-first closure oracle; throws resource_error beyond the cap.
std::vector<F2Mat> brute_force_closure(const std::vector<F2Mat>& gens, std::uint64_t cap = 1000000);
std::vector<FpMat> brute_force_closure_fp(const std::vector<FpMat>& gens, int p, std::uint64_t cap = 1000000);

}  // namespace twistgen
