#include "twistgen/groupalg.hpp"

#include <deque>
#include <unordered_set>

namespace twistgen {

namespace {

template <class Mat>
struct MatOps;

template <>
struct MatOps<F2Mat> {
    static F2Mat identity(const F2Action& a) { return F2Mat::identity(a.n); }
    static F2Mat inverse(const F2Mat& m, const F2Action&) { return m.inverse(); }
    static F2Mat mul(const F2Mat& a, const F2Mat& b) { return a.mul(b); }
    static bool is_id(const F2Mat& m) { return m.is_identity(); }
    static std::uint32_t apply(const F2Action&, const F2Mat& m, std::uint32_t pt) {
        return F2Action::apply(m, pt);
    }
    static int dim(const F2Mat& m) { return m.n; }
};

template <>
struct MatOps<FpMat> {
    static FpMat identity(const FpAction& a) { return FpMat::identity(a.n, a.p); }
    static FpMat inverse(const FpMat& m, const FpAction&) { return m.inverse(); }
    static FpMat mul(const FpMat& a, const FpMat& b) { return a.mul(b); }
    static bool is_id(const FpMat& m) { return m.is_identity(); }
    static std::uint32_t apply(const FpAction& a, const FpMat& m, std::uint32_t pt) {
        return a.apply(m, pt);
    }
    static int dim(const FpMat& m) { return m.n; }
};

}  // namespace

template <class Mat, class Action>
StabilizerChain<Mat, Action>::StabilizerChain(Action action, GroupOptions opt)
    : action_(action), opt_(opt), id_(MatOps<Mat>::identity(action)) {
    if (action_.npoints() > opt_.max_points)
        throw resource_error("point set of size " + std::to_string(action_.npoints()) +
                             " exceeds the configured cap " + std::to_string(opt_.max_points));
}

template <class Mat, class Action>
std::size_t StabilizerChain<Mat, Action>::gens_count_at(std::size_t i) const {
    std::size_t k = 0;
    for (const auto& sg : sgens_)
        if (sg.level >= i) ++k;
    return k;
}

template <class Mat, class Action>
Mat StabilizerChain<Mat, Action>::rep(const Level& lv, std::uint32_t pt) const {
    // product of edge generators along the path base -> pt
    std::vector<std::int32_t> edges;
    std::uint32_t cur = pt;
    while (cur != lv.base) {
        edges.push_back(lv.via[cur]);
        cur = lv.parent[cur];
    }
    Mat out = id_;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
        out = MatOps<Mat>::mul(lv.act_gens[static_cast<std::size_t>(*it)], out);
    return out;
}

template <class Mat, class Action>
Mat StabilizerChain<Mat, Action>::sift(Mat m, std::size_t& level_out) const {
    return sift_from(std::move(m), 0, level_out);
}

template <class Mat, class Action>
void StabilizerChain<Mat, Action>::insert_at(const Mat& m, std::size_t level) {
    if (level == levels_.size()) {
        // first-moved-point rule over the integer point encoding
        std::uint64_t np = action_.npoints();
        std::uint32_t base = 0;
        for (std::uint64_t v = 1; v < np; ++v) {
            if (MatOps<Mat>::apply(action_, m, static_cast<std::uint32_t>(v)) != v) {
                base = static_cast<std::uint32_t>(v);
                break;
            }
        }
        if (base == 0) return;  // identity
        Level lv;
        lv.base = base;
        levels_.push_back(std::move(lv));
        bases_.push_back(base);
    }
    sgens_.push_back({m, MatOps<Mat>::inverse(m, action_), level});
}

template <class Mat, class Action>
void StabilizerChain<Mat, Action>::extend_level(std::size_t i) {
    Level& lv = levels_[i];
    std::uint64_t np = action_.npoints();
    if (lv.via.empty()) {
        lv.via.assign(np, -1);
        lv.parent.assign(np, 0);
        lv.orbit.clear();
        lv.orbit.push_back(lv.base);
        lv.via[lv.base] = -2;
        lv.bfs_done = 0;
    }
    // adopt newly arrived strong generators from levels >= i
    std::size_t old_gen_count = lv.act_gens.size();
    for (; lv.consumed < sgens_.size(); ++lv.consumed) {
        const auto& sg = sgens_[lv.consumed];
        if (sg.level < i) continue;
        lv.act_gens.push_back(sg.m);
        lv.act_inv.push_back(sg.inv);
    }
    // apply the new generators to the already-known orbit
    if (lv.act_gens.size() > old_gen_count) {
        std::size_t known = lv.orbit.size();
        for (std::size_t oi = 0; oi < known; ++oi) {
            std::uint32_t p = lv.orbit[oi];
            for (std::size_t a = old_gen_count; a < lv.act_gens.size(); ++a) {
                std::uint32_t q = MatOps<Mat>::apply(action_, lv.act_gens[a], p);
                if (lv.via[q] == -1) {
                    lv.via[q] = static_cast<std::int32_t>(a);
                    lv.parent[q] = p;
                    lv.orbit.push_back(q);
                }
            }
        }
    }
    // continue the FIFO expansion with the full generator set
    for (std::size_t oi = lv.bfs_done; oi < lv.orbit.size(); ++oi) {
        std::uint32_t p = lv.orbit[oi];
        for (std::size_t a = 0; a < lv.act_gens.size(); ++a) {
            std::uint32_t q = MatOps<Mat>::apply(action_, lv.act_gens[a], p);
            if (lv.via[q] == -1) {
                lv.via[q] = static_cast<std::int32_t>(a);
                lv.parent[q] = p;
                lv.orbit.push_back(q);
            }
        }
    }
    lv.bfs_done = lv.orbit.size();
}

template <class Mat, class Action>
void StabilizerChain<Mat, Action>::schreier_fill(std::size_t i) {
    for (;;) {
        extend_level(i);
        Level& lv = levels_[i];
        bool inserted = false;
        for (std::size_t pi = 0; pi < lv.orbit.size() && !inserted; ++pi) {
            for (std::size_t ai = 0; ai < lv.act_gens.size() && !inserted; ++ai) {
                if (pi < lv.processed_pts && ai < lv.processed_gens) continue;
                std::uint32_t p = lv.orbit[pi];
                std::uint32_t q = MatOps<Mat>::apply(action_, lv.act_gens[ai], p);
                // the tree edge itself gives the identity
                if (lv.via[q] == static_cast<std::int32_t>(ai) && lv.parent[q] == p) continue;
                Mat s = MatOps<Mat>::mul(lv.act_gens[ai], rep(lv, p));
                std::uint32_t cur = q;
                while (cur != lv.base) {
                    s = MatOps<Mat>::mul(lv.act_inv[static_cast<std::size_t>(lv.via[cur])], s);
                    cur = lv.parent[cur];
                }
                if (MatOps<Mat>::is_id(s)) continue;
                // s fixes the bases up to and including level i
                std::size_t lvl2 = 0;
                Mat rem = sift_from(s, i + 1, lvl2);
                if (MatOps<Mat>::is_id(rem)) continue;
                insert_at(rem, lvl2);
                std::size_t upto = lvl2 < levels_.size() ? lvl2 : levels_.size() - 1;
                for (std::size_t j = upto; j > i; --j) schreier_fill(j);
                inserted = true;
            }
        }
        if (!inserted) {
            Level& lvf = levels_[i];
            bool grew = lvf.act_gens.size() != gens_count_at(i);
            lvf.processed_pts = lvf.orbit.size();
            lvf.processed_gens = lvf.act_gens.size();
            if (!grew) return;
        }
    }
}

template <class Mat, class Action>
Mat StabilizerChain<Mat, Action>::sift_from(Mat m, std::size_t start, std::size_t& level_out) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        std::uint32_t p = MatOps<Mat>::apply(action_, m, lv.base);
        if (p == lv.base) continue;
        if (lv.via.empty() || lv.via[p] == -1) {
            level_out = i;
            return m;
        }
        std::uint32_t cur = p;
        while (cur != lv.base) {
            m = MatOps<Mat>::mul(lv.act_inv[static_cast<std::size_t>(lv.via[cur])], m);
            cur = lv.parent[cur];
        }
    }
    level_out = levels_.size();
    return m;
}

template <class Mat, class Action>
void StabilizerChain<Mat, Action>::add_generator(const Mat& m) {
    if (MatOps<Mat>::dim(m) != action_.n)
        throw invariant_error("generator dimension mismatch");
    std::size_t lvl = 0;
    Mat rem = sift(m, lvl);
    if (MatOps<Mat>::is_id(rem)) return;
    insert_at(rem, lvl);
    std::size_t upto = lvl < levels_.size() ? lvl : levels_.size() - 1;
    for (std::size_t j = upto + 1; j-- > 0;) schreier_fill(j);
}

template <class Mat, class Action>
void StabilizerChain<Mat, Action>::finish() {}

template <class Mat, class Action>
Int StabilizerChain<Mat, Action>::order() const {
    Int o = 1;
    for (const auto& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
    return o;
}

template <class Mat, class Action>
std::vector<std::uint64_t> StabilizerChain<Mat, Action>::orbit_sizes() const {
    std::vector<std::uint64_t> out;
    for (const auto& lv : levels_) out.push_back(lv.orbit.size());
    return out;
}

template <class Mat, class Action>
bool StabilizerChain<Mat, Action>::contains(const Mat& m) const {
    if (MatOps<Mat>::dim(m) != action_.n)
        throw invariant_error("element dimension mismatch");
    std::size_t lvl = 0;
    Mat rem = sift(m, lvl);
    return MatOps<Mat>::is_id(rem);
}

template class StabilizerChain<F2Mat, F2Action>;
template class StabilizerChain<FpMat, FpAction>;

F2Chain build_chain(const std::vector<F2Mat>& gens, GroupOptions opt) {
    if (gens.empty()) return F2Chain(F2Action{1}, opt);
    int n = gens[0].n;
    for (const auto& m : gens)
        if (m.n != n) throw invariant_error("generator dimension mismatch");
    F2Chain ch(F2Action{n}, opt);
    for (const auto& m : gens) ch.add_generator(m);
    return ch;
}

FpChain build_chain_fp(const std::vector<FpMat>& gens, int p, GroupOptions opt) {
    if (gens.empty()) return FpChain(FpAction{1, p}, opt);
    int n = gens[0].n;
    for (const auto& m : gens)
        if (m.n != n || m.p != p) throw invariant_error("generator dimension/field mismatch");
    FpChain ch(FpAction{n, p}, opt);
    for (const auto& m : gens) ch.add_generator(m);
    return ch;
}

bool same_subgroup(const std::vector<F2Mat>& a, const std::vector<F2Mat>& b, GroupOptions opt) {
    if (a.empty() && b.empty()) return true;
    int n = a.empty() ? b[0].n : a[0].n;
    for (const auto& m : a)
        if (m.n != n) throw invariant_error("generator dimension mismatch");
    for (const auto& m : b)
        if (m.n != n) throw invariant_error("generator dimension mismatch");
    F2Chain ca(F2Action{n}, opt), cb(F2Action{n}, opt);
    for (const auto& m : a) ca.add_generator(m);
    for (const auto& m : b) cb.add_generator(m);
    for (const auto& m : b)
        if (!ca.contains(m)) return false;
    for (const auto& m : a)
        if (!cb.contains(m)) return false;
    return true;
}

bool same_subgroup_fp(const std::vector<FpMat>& a, const std::vector<FpMat>& b, int p, GroupOptions opt) {
    if (a.empty() && b.empty()) return true;
    int n = a.empty() ? b[0].n : a[0].n;
    FpChain ca(FpAction{n, p}, opt), cb(FpAction{n, p}, opt);
    for (const auto& m : a) ca.add_generator(m);
    for (const auto& m : b) cb.add_generator(m);
    for (const auto& m : b)
        if (!ca.contains(m)) return false;
    for (const auto& m : a)
        if (!cb.contains(m)) return false;
    return true;
}

namespace {

struct F2Hash {
    std::size_t operator()(const F2Mat& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : m.cols) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct FpHash {
    std::size_t operator()(const FpMat& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto c : m.a) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::vector<F2Mat> brute_force_closure(const std::vector<F2Mat>& gens, std::uint64_t cap) {
    int n = gens.empty() ? 1 : gens[0].n;
    std::unordered_set<F2Mat, F2Hash> seen;
    std::deque<F2Mat> queue;
    F2Mat id = F2Mat::identity(n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        F2Mat x = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            F2Mat y = h.mul(x);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw resource_error("closure exceeds cap of " + std::to_string(cap));
                queue.push_back(y);
            }
        }
    }
    return std::vector<F2Mat>(seen.begin(), seen.end());
}

std::vector<FpMat> brute_force_closure_fp(const std::vector<FpMat>& gens, int p, std::uint64_t cap) {
    int n = gens.empty() ? 1 : gens[0].n;
    std::unordered_set<FpMat, FpHash> seen;
    std::deque<FpMat> queue;
    FpMat id = FpMat::identity(n, p);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        FpMat x = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            FpMat y = h.mul(x);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw resource_error("closure exceeds cap of " + std::to_string(cap));
                queue.push_back(y);
            }
        }
    }
    return std::vector<FpMat>(seen.begin(), seen.end());
}

}  // namespace twistgen
