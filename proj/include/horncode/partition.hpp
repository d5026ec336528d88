#ifndef HORNCODE_PARTITION_HPP
#define HORNCODE_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace horncode {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty sequence is the (unique) partition of 0.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts descending and strips zeros; negative entries rejected.
    static Partition from_unsorted(std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        while (!v.empty() && v.back() == 0) v.pop_back();
        return Partition(std::move(v));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Part at 1-based row r, 0 beyond the last row.
    int part(int r) const { return (r >= 1 && r <= length()) ? parts_[r - 1] : 0; }

    bool contains(const Partition& inner) const {
        for (int r = 1; r <= inner.length(); ++r)
            if (part(r) < inner.part(r)) return false;
        return true;
    }

    bool operator==(const Partition& o) const = default;
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

   private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    if (p.empty()) return os << "[]";
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
    return os;
}

/// Strictly increasing subset of {1,...,ambient}.
class IndexSet {
   public:
    IndexSet(std::vector<int> elements, int ambient) : elements_(std::move(elements)), ambient_(ambient) {
        if (ambient_ < 1) throw std::invalid_argument("ambient must be positive");
        for (size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] < 1 || elements_[i] > ambient_)
                throw std::invalid_argument("index set element out of range");
            if (i + 1 < elements_.size() && elements_[i] >= elements_[i + 1])
                throw std::invalid_argument("index set must be strictly increasing");
        }
    }

    const std::vector<int>& elements() const { return elements_; }
    int ambient() const { return ambient_; }
    int cardinality() const { return static_cast<int>(elements_.size()); }
    long long sum() const { return std::accumulate(elements_.begin(), elements_.end(), 0LL); }

    bool operator==(const IndexSet& o) const { return elements_ == o.elements_ && ambient_ == o.ambient_; }
    std::strong_ordering operator<=>(const IndexSet& o) const {
        if (auto c = elements_ <=> o.elements_; c != 0) return c;
        return ambient_ <=> o.ambient_;
    }

   private:
    std::vector<int> elements_;
    int ambient_;
};

inline std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    os << "{";
    for (int i = 0; i < s.cardinality(); ++i) os << (i ? "," : "") << s.elements()[i];
    return os << "}";
}

/// All partitions of n in lexicographically decreasing order,
/// e.g. 4 -> (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(rest, maxPart); k >= 1; --k) {
            current.push_back(k);
            self(self, rest - k, k);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> conj(p.parts()[0], 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j) ++conj[j];
    return Partition(std::move(conj));
}

/// Number of (r+1)-dimensional subspaces of an (n+1)-dimensional space over
/// the q-element field. Computed by the q-Pascal recurrence, which stays in
/// exact integers throughout; overflow past 63 bits is reported, not wrapped.
inline long long q_binomial(int n, int r, long long q) {
    if (q < 2) throw std::invalid_argument("q_binomial: q must be at least 2");
    if (r < 0 || r > n) throw std::invalid_argument("q_binomial: requires 0 <= r <= n");
    const int N = n + 1, K = r + 1;
    // G[k] holds the Gaussian binomial (row, k)_q while row advances
    std::vector<__int128> G(K + 1, 0);
    G[0] = 1;
    const __int128 limit = static_cast<__int128>(INT64_MAX);
    for (int row = 1; row <= N; ++row) {
        for (int k = std::min(row, K); k >= 1; --k) {
            if (k == row) {
                G[k] = 1;
                continue;
            }
            __int128 qk = 1;
            for (int i = 0; i < k; ++i) {
                qk *= q;
                if (qk > limit) throw std::overflow_error("q_binomial exceeds 63 bits");
            }
            G[k] = G[k - 1] + qk * G[k];
            if (G[k] > limit) throw std::overflow_error("q_binomial exceeds 63 bits");
        }
    }
    return static_cast<long long>(G[K]);
}

/// Partition attached to an r-element index set {i_1 < ... < i_r}:
/// (i_r - r, ..., i_1 - 1) with trailing zeros stripped.
inline Partition partition_from_index_set(const IndexSet& I, int r) {
    if (I.cardinality() != r) throw std::invalid_argument("partition_from_index_set: |I| != r");
    std::vector<int> parts;
    for (int j = r; j >= 1; --j) {
        int v = I.elements()[j - 1] - j;
        if (v > 0) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

/// Membership in the hypersimplex of n-vectors with entries in [0,1] summing
/// to d+1, decided in exact rational arithmetic.
inline bool hypersimplex_contains(const std::vector<Rational>& c, int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("hypersimplex_contains: d and n must be positive");
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("hypersimplex_contains: wrong vector length");
    Rational sum(0);
    for (const Rational& x : c) {
        if (x < Rational(0) || x > Rational(1)) return false;
        sum += x;
    }
    return sum == Rational(d + 1);
}

}  // namespace horncode

#endif
