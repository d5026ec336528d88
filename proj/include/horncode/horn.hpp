#ifndef HORNCODE_HORN_HPP
#define HORNCODE_HORN_HPP

#include <map>
#include <mutex>
#include <ostream>
#include <vector>

#include "partition.hpp"
#include "symmetric.hpp"

namespace horncode {

/// Triple (I, J, K) of r-element subsets of {1..n}.
struct IndexTriple {
    IndexSet I, J, K;

    bool operator==(const IndexTriple& o) const { return I == o.I && J == o.J && K == o.K; }
    std::strong_ordering operator<=>(const IndexTriple& o) const {
        if (auto c = I <=> o.I; c != 0) return c;
        if (auto c = J <=> o.J; c != 0) return c;
        return K <=> o.K;
    }
};

inline std::ostream& operator<<(std::ostream& os, const IndexTriple& t) {
    return os << t.I << "|" << t.J << "|" << t.K;
}

namespace detail {

inline std::vector<std::vector<int>> subsets_lex(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Sum of the positions of I selected by the 1-based sub-index F.
inline long long select_sum(const std::vector<int>& subIndex, const std::vector<int>& index) {
    long long s = 0;
    for (int f : subIndex) s += index[f - 1];
    return s;
}

}  // namespace detail

/// Triples (I,J,K) of r-subsets of {1..n} with
/// sum(I) + sum(J) == sum(K) + r(r+1)/2, in lexicographic order.
inline std::vector<IndexTriple> u_set(int n, int r) {
    if (r < 1) throw std::invalid_argument("u_set: r must be positive");
    if (r >= n) throw std::invalid_argument("u_set: r must be less than n");
    const long long norm = static_cast<long long>(r) * (r + 1) / 2;
    auto subsets = detail::subsets_lex(n, r);
    std::vector<IndexTriple> out;
    for (const auto& i : subsets)
        for (const auto& j : subsets)
            for (const auto& k : subsets) {
                long long sumI = 0, sumJ = 0, sumK = 0;
                for (int v : i) sumI += v;
                for (int v : j) sumJ += v;
                for (int v : k) sumK += v;
                if (sumI + sumJ == sumK + norm)
                    out.push_back(IndexTriple{IndexSet(i, n), IndexSet(j, n), IndexSet(k, n)});
            }
    return out;
}

std::vector<IndexTriple> t_set(int n, int r);

namespace detail {

// Read-through memo; idempotent inserts, reentrant because the computation
// recurses into smaller (n, r) keys.
inline const std::vector<IndexTriple>& t_set_cached(int n, int r) {
    static std::map<std::pair<int, int>, std::vector<IndexTriple>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto key = std::make_pair(n, r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, t_set(n, r)).first;
    return it->second;
}

}  // namespace detail

/// Horn's inductively filtered subset of u_set(n, r): a triple survives iff
/// for every p < r and every (F,G,H) in T^r_p the selected positions satisfy
/// sum_F(I) + sum_G(J) <= sum_H(K) + p(p+1)/2. At r = 1 there is nothing to
/// filter and T equals U.
inline std::vector<IndexTriple> t_set(int n, int r) {
    auto candidates = u_set(n, r);
    if (r == 1) return candidates;
    std::vector<IndexTriple> out;
    for (const IndexTriple& t : candidates) {
        bool ok = true;
        for (int p = 1; p < r && ok; ++p) {
            const long long norm = static_cast<long long>(p) * (p + 1) / 2;
            for (const IndexTriple& sub : detail::t_set_cached(r, p)) {
                if (detail::select_sum(sub.I.elements(), t.I.elements()) +
                        detail::select_sum(sub.J.elements(), t.J.elements()) >
                    detail::select_sum(sub.K.elements(), t.K.elements()) + norm) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(t);
    }
    return out;
}

/// Per-triple record of the LR coefficient attached to (I,J,K) through
/// partition_from_index_set.
struct HornLrEntry {
    IndexTriple triple;
    Partition lambda, mu, nu;
    long long coefficient;
    bool in_t;
};

struct HornLrReport {
    int n, r;
    std::vector<HornLrEntry> entries;  // one per U-triple, in u_set order
    bool all_t_positive = true;
    bool all_complement_zero = true;
};

inline HornLrReport horn_lr_consistency(int n, int r) {
    HornLrReport rep{n, r, {}, true, true};
    auto u = u_set(n, r);
    auto t = t_set(n, r);
    size_t ti = 0;
    for (const IndexTriple& triple : u) {
        bool inT = ti < t.size() && t[ti] == triple;  // both lists share u_set order
        if (inT) ++ti;
        HornLrEntry e{triple, partition_from_index_set(triple.I, r), partition_from_index_set(triple.J, r),
                      partition_from_index_set(triple.K, r), 0, inT};
        e.coefficient = lr_coefficient(e.lambda, e.mu, e.nu);
        if (inT && e.coefficient <= 0) rep.all_t_positive = false;
        if (!inT && e.coefficient != 0) rep.all_complement_zero = false;
        rep.entries.push_back(std::move(e));
    }
    if (ti != t.size()) throw InternalError("t_set is not a sublist of u_set");
    return rep;
}

}  // namespace horncode

#endif
