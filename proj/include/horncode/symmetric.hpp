#ifndef HORNCODE_SYMMETRIC_HPP
#define HORNCODE_SYMMETRIC_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "partition.hpp"

namespace horncode {

/// Polynomial in a fixed number of variables with integer coefficients,
/// stored as exponent vector -> coefficient. Zero coefficients are never kept.
class SymmetricPolynomial {
   public:
    explicit SymmetricPolynomial(int variable_count) : nvars_(variable_count) {
        if (variable_count < 1) throw std::invalid_argument("variable_count must be positive");
    }

    int variable_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, long long coeff) {
        if (static_cast<int>(exponents.size()) != nvars_)
            throw std::invalid_argument("exponent vector has wrong length");
        if (coeff == 0) return;
        auto it = terms_.find(exponents);
        if (it == terms_.end()) {
            terms_.emplace(exponents, coeff);
        } else if ((it->second += coeff) == 0) {
            terms_.erase(it);
        }
    }

    long long coefficient(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? 0 : it->second;
    }

    SymmetricPolynomial operator+(const SymmetricPolynomial& o) const {
        require_same_vars(o);
        SymmetricPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    SymmetricPolynomial operator-(const SymmetricPolynomial& o) const {
        require_same_vars(o);
        SymmetricPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    SymmetricPolynomial operator*(const SymmetricPolynomial& o) const {
        require_same_vars(o);
        SymmetricPolynomial out(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<int> e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    SymmetricPolynomial scaled(long long c) const {
        SymmetricPolynomial out(nvars_);
        if (c != 0)
            for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
        return out;
    }

    bool operator==(const SymmetricPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // True iff invariant under every transposition of adjacent variables.
    bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            for (const auto& [e, c] : terms_) {
                std::vector<int> swapped = e;
                std::swap(swapped[i], swapped[i + 1]);
                if (coefficient(swapped) != c) return false;
            }
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest-degree-first for readability; map order is lex ascending
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            long long a = c < 0 ? -c : c;
            bool constant = true;
            for (int x : e) constant = constant && x == 0;
            if (a != 1 || constant) os << a;
            bool star = a != 1;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
                star = true;
            }
        }
        return os.str();
    }

   private:
    int nvars_;
    std::map<std::vector<int>, long long> terms_;

    void require_same_vars(const SymmetricPolynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable counts differ");
    }
};

inline std::ostream& operator<<(std::ostream& os, const SymmetricPolynomial& p) { return os << p.to_string(); }

/// Partition read as the cycle type of a permutation.
using CycleType = Partition;

namespace detail {

// Enumerates semistandard tableaux of the skew shape outer/inner with entries
// in 1..maxEntry, invoking visit(content) for each filling. With inner empty
// this enumerates straight-shape tableaux.
template <class Visit>
void enumerate_ssyt(const Partition& outer, const Partition& inner, int maxEntry, Visit&& visit) {
    const int rows = outer.length();
    std::vector<std::vector<int>> T(rows);
    for (int r = 0; r < rows; ++r) T[r].assign(outer.parts()[r], 0);
    std::vector<int> content(maxEntry + 1, 0);

    auto cell = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            visit(content);
            return;
        }
        int rowEnd = outer.parts()[r];
        if (c >= rowEnd) {
            self(self, r + 1, r + 1 < rows ? inner.part(r + 2) : 0);
            return;
        }
        int lo = 1;
        if (c > inner.part(r + 1)) lo = std::max(lo, T[r][c - 1]);              // weakly increasing rows
        if (r > 0 && c < outer.parts()[r - 1] && c >= inner.part(r))            // strictly increasing columns
            lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= maxEntry; ++v) {
            T[r][c] = v;
            ++content[v];
            self(self, r, c + 1);
            --content[v];
        }
        T[r][c] = 0;
    };
    cell(cell, 0, inner.part(1));
}

}  // namespace detail

/// Schur polynomial s_lambda in m variables, as the generating function of
/// semistandard Young tableaux of shape lambda with entries in {1..m}.
/// Identically zero when lambda has more than m rows.
inline SymmetricPolynomial schur_polynomial(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("schur_polynomial: m must be positive");
    SymmetricPolynomial out(m);
    if (lambda.empty()) {
        out.add_term(std::vector<int>(m, 0), 1);
        return out;
    }
    if (lambda.length() > m) return out;
    detail::enumerate_ssyt(lambda, Partition{}, m, [&](const std::vector<int>& content) {
        std::vector<int> e(m);
        for (int v = 1; v <= m; ++v) e[v - 1] = content[v];
        out.add_term(e, 1);
    });
    return out;
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard skew tableaux of shape nu/lambda and content mu whose reverse
/// reading word is a lattice word. Returns 0 on any size or containment
/// obstruction.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.empty()) return 1;  // containment plus size match forces nu == lambda

    const int rows = nu.length();
    const int maxEntry = mu.length();
    long long count = 0;
    std::vector<std::vector<int>> T(rows);
    for (int r = 0; r < rows; ++r) T[r].assign(nu.parts()[r], 0);
    std::vector<int> used(maxEntry + 2, 0);  // prefix counts of the reverse reading word

    // Cells are filled in reverse reading order (each row right-to-left), so
    // the lattice condition can be enforced as each value is placed.
    auto place = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            bool full = true;
            for (int v = 1; v <= maxEntry; ++v) full = full && used[v] == mu.parts()[v - 1];
            if (full) ++count;
            return;
        }
        const int innerLen = lambda.part(r + 1);
        if (c < innerLen) {
            self(self, r + 1, nu.part(r + 2) - 1);
            return;
        }
        int lo = 1, hi = maxEntry;
        if (c + 1 < nu.parts()[r]) hi = std::min(hi, T[r][c + 1]);                      // row weak increase
        if (r > 0 && c >= lambda.part(r) && c < nu.parts()[r - 1]) lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= mu.part(v)) continue;        // content bound
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
            T[r][c] = v;
            ++used[v];
            self(self, r, c - 1);
            --used[v];
        }
        T[r][c] = 0;
    };
    place(place, 0, nu.parts()[0] - 1);
    return count;
}

/// Irreducible symmetric group character chi_lambda evaluated on the class of
/// cycle type rho, by border-strip recursion on the beta-set of lambda.
inline long long character_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character_value: |lambda| != |rho|");

    auto rec = [](auto&& self, std::vector<int> beta, const std::vector<int>& rho_parts, size_t k) -> long long {
        if (k == rho_parts.size()) return 1;
        const int t = rho_parts[k];
        long long total = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - t;
            if (target < 0) continue;
            bool occupied = false;
            int between = 0;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == target) occupied = true;
                if (beta[j] > target && beta[j] < beta[i]) ++between;
            }
            if (occupied) continue;
            std::vector<int> next = beta;
            next[i] = target;
            total += (between % 2 ? -1 : 1) * self(self, std::move(next), rho_parts, k + 1);
        }
        return total;
    };

    std::vector<int> beta;  // distinct first-column hook lengths
    const int L = lambda.length();
    for (int i = 0; i < L; ++i) beta.push_back(lambda.parts()[i] + (L - 1 - i));
    return rec(rec, std::move(beta), rho.parts(), 0);
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Size of the conjugacy class of S_n with cycle type rho: n!/z_rho.
inline long long conjugacy_class_size(const CycleType& rho) {
    const int n = rho.size();
    long long z = 1;
    int run = 0, prev = 0;
    for (int part : rho.parts()) {
        z *= part;
        if (part == prev) {
            ++run;
            z *= run;
        } else {
            prev = part;
            run = 1;
        }
    }
    return factorial(n) / z;
}

/// Kronecker coefficient via the character inner product
/// (1/n!) sum_rho |C_rho| chi_lambda(rho) chi_mu(rho) chi_nu(rho).
inline long long kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n)
        throw std::invalid_argument("kronecker_coefficient: partitions must have equal size");
    __int128 sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        __int128 term = conjugacy_class_size(rho);
        term *= character_value(lambda, rho);
        term *= character_value(mu, rho);
        term *= character_value(nu, rho);
        sum += term;
    }
    const long long nf = factorial(n);
    if (sum % nf != 0 || sum < 0) throw InternalError("kronecker inner product is not a nonnegative multiple of n!");
    return static_cast<long long>(sum / nf);
}

/// Expands a polynomial that is symmetric and homogeneous in its variables in
/// the Schur basis by repeated subtraction of the lexicographically leading
/// Schur polynomial.
inline std::map<Partition, long long> expand_in_schur_basis(SymmetricPolynomial p) {
    std::map<Partition, long long> out;
    const int m = p.variable_count();
    while (!p.is_zero()) {
        const auto& [lead, coeff] = *p.terms().rbegin();  // lex-greatest monomial
        std::vector<int> sorted = lead;
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] < sorted[i + 1]) throw std::invalid_argument("polynomial is not symmetric");
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        Partition kappa(std::move(sorted));
        p = p - schur_polynomial(kappa, m).scaled(coeff);
        out[kappa] += coeff;
        if (out[kappa] == 0) out.erase(kappa);
    }
    return out;
}

enum class SliceKind { LR, Kronecker };

/// Square slice of a coefficient family: rows and columns run over the
/// partitions of |nu| in canonical (lex-decreasing) order.
struct CoefficientSlice {
    Partition nu;
    SliceKind kind;
    std::vector<Partition> index;
    std::vector<std::vector<long long>> entries;
};

namespace detail {

inline long long kronecker_or_zero(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != nu.size() || mu.size() != nu.size()) return 0;
    return kronecker_coefficient(lambda, mu, nu);
}

inline CoefficientSlice build_slice(const Partition& nu, SliceKind kind, const std::vector<Partition>& index) {
    CoefficientSlice s{nu, kind, index, {}};
    const size_t m = index.size();
    s.entries.assign(m, std::vector<long long>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            s.entries[i][j] = kind == SliceKind::LR ? lr_coefficient(index[i], index[j], nu)
                                                    : kronecker_or_zero(index[i], index[j], nu);
    return s;
}

}  // namespace detail

inline CoefficientSlice coefficient_matrix_slice(const Partition& nu, SliceKind kind) {
    return detail::build_slice(nu, kind, partitions_of(nu.size()));
}

inline std::vector<std::vector<long long>> matrix_multiply(const std::vector<std::vector<long long>>& A,
                                                           const std::vector<std::vector<long long>>& B) {
    const size_t n = A.size();
    std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (A[i][k])
                for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

inline bool is_identity(const std::vector<std::vector<long long>>& M) {
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j)
            if (M[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

/// Product of the LR slice with the Kronecker slice for nu, reported under two
/// indexing conventions rather than asserted against any expected outcome.
///
/// "homogeneous": rows/columns run over partitions of |nu|. Under this
/// convention every LR entry vanishes for |nu| > 0 since |lambda|+|mu| = 2|nu|
/// never equals |nu|.
///
/// "split": rows/columns run over partitions of |nu|/2 (even |nu| only). The
/// LR entries can now be nonzero, but the Kronecker entries vanish instead;
/// the two gradings cannot be satisfied by one index set.
struct SliceProductReport {
    Partition nu;
    CoefficientSlice lr_homogeneous, kron_homogeneous;
    std::vector<std::vector<long long>> product_homogeneous;
    bool homogeneous_is_identity = false;

    bool split_defined = false;  // |nu| even
    CoefficientSlice lr_split, kron_split;
    std::vector<std::vector<long long>> product_split;
    bool split_is_identity = false;

    std::string note;
};

inline SliceProductReport matrix_product_experiment(const Partition& nu) {
    SliceProductReport rep;
    rep.nu = nu;
    rep.lr_homogeneous = coefficient_matrix_slice(nu, SliceKind::LR);
    rep.kron_homogeneous = coefficient_matrix_slice(nu, SliceKind::Kronecker);
    rep.product_homogeneous = matrix_multiply(rep.lr_homogeneous.entries, rep.kron_homogeneous.entries);
    rep.homogeneous_is_identity = is_identity(rep.product_homogeneous);

    if (nu.size() % 2 == 0) {
        rep.split_defined = true;
        auto index = partitions_of(nu.size() / 2);
        rep.lr_split = detail::build_slice(nu, SliceKind::LR, index);
        rep.kron_split = detail::build_slice(nu, SliceKind::Kronecker, index);
        rep.product_split = matrix_multiply(rep.lr_split.entries, rep.kron_split.entries);
        rep.split_is_identity = is_identity(rep.product_split);
    }

    std::ostringstream note;
    note << "slice product for nu=" << nu << ": homogeneous convention "
         << (rep.homogeneous_is_identity ? "equals" : "differs from") << " the identity";
    if (rep.split_defined)
        note << "; split convention " << (rep.split_is_identity ? "equals" : "differs from") << " the identity";
    else
        note << "; split convention undefined (odd size)";
    rep.note = note.str();
    return rep;
}

/// Support of the LR structure constants in degree n: all triples
/// (lambda, mu, nu) with |lambda|+|mu| = |nu| = n and positive coefficient.
inline std::set<std::tuple<Partition, Partition, Partition>> lr_support(int n) {
    if (n < 1) throw std::invalid_argument("lr_support: n must be positive");
    std::set<std::tuple<Partition, Partition, Partition>> out;
    for (int i = 0; i <= n; ++i)
        for (const Partition& lambda : partitions_of(i))
            for (const Partition& mu : partitions_of(n - i))
                for (const Partition& nu : partitions_of(n))
                    if (lr_coefficient(lambda, mu, nu) > 0) out.emplace(lambda, mu, nu);
    return out;
}

}  // namespace horncode

#endif
