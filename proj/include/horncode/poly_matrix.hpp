#ifndef HORNCODE_POLY_MATRIX_HPP
#define HORNCODE_POLY_MATRIX_HPP

#include <utility>
#include <vector>

#include "partition.hpp"
#include "poly.hpp"

namespace horncode {

/// Rectangular matrix over GF(p^k)[x].
class PolyMatrix {
   public:
    PolyMatrix(const FieldSpec& f, size_t rows, size_t cols)
        : spec_(&f), rows_(rows), cols_(cols), e_(rows * cols, Poly::zero(f)) {}

    PolyMatrix(const FieldSpec& f, std::vector<std::vector<Poly>> rows) : spec_(&f), rows_(rows.size()) {
        cols_ = rows_ ? rows[0].size() : 0;
        for (auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
            for (auto& p : r) {
                if (!p.field().same(f)) throw FieldMismatch("matrix entry over a different field");
                e_.push_back(std::move(p));
            }
        }
    }

    static PolyMatrix identity(const FieldSpec& f, size_t n) {
        PolyMatrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
        return m;
    }

    static PolyMatrix diagonal(const FieldSpec& f, const std::vector<Poly>& d) {
        PolyMatrix m(f, d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    const FieldSpec& field() const { return *spec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Poly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    Poly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
        PolyMatrix out(*spec_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
            }
        return out;
    }

    bool operator==(const PolyMatrix& o) const {
        return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_diagonal() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    /// Determinant by cofactor expansion (square matrices at desk scale).
    Poly determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        if (rows_ == 0) return Poly::one(*spec_);
        if (rows_ == 1) return at(0, 0);
        Poly acc = Poly::zero(*spec_);
        for (size_t j = 0; j < cols_; ++j) {
            if (at(0, j).is_zero()) continue;
            PolyMatrix minor(*spec_, rows_ - 1, cols_ - 1);
            for (size_t i = 1; i < rows_; ++i) {
                size_t jj = 0;
                for (size_t c = 0; c < cols_; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, jj++) = at(i, c);
                }
            }
            Poly term = at(0, j) * minor.determinant();
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    bool is_unimodular() const {
        if (rows_ != cols_) return false;
        return determinant().degree_int() == 0;  // nonzero field constant
    }

   private:
    const FieldSpec* spec_;
    size_t rows_, cols_;
    std::vector<Poly> e_;
};

struct SmithResult {
    std::vector<Poly> invariant_factors;  // monic d_1 | d_2 | ...; zeros last
    PolyMatrix U, V;                      // unimodular, U * A * V = diagonal
    PolyMatrix diagonal;
};

/// Smith normal form over GF(p^k)[x] by elementary row and column operations.
/// Pivots are normalized monic and satisfy the divisibility chain; the
/// transforms are accumulated alongside and returned.
inline SmithResult smith_normal_form(const PolyMatrix& A) {
    const FieldSpec& F = A.field();
    const size_t m = A.rows(), n = A.cols();
    PolyMatrix D = A;
    PolyMatrix U = PolyMatrix::identity(F, m);
    PolyMatrix V = PolyMatrix::identity(F, n);

    auto row_sub = [&](PolyMatrix& M, size_t target, size_t source, const Poly& q) {
        for (size_t j = 0; j < M.cols(); ++j) M.at(target, j) = M.at(target, j) - q * M.at(source, j);
    };
    auto col_sub = [&](PolyMatrix& M, size_t target, size_t source, const Poly& q) {
        for (size_t i = 0; i < M.rows(); ++i) M.at(i, target) = M.at(i, target) - q * M.at(i, source);
    };
    auto row_swap = [&](PolyMatrix& M, size_t a, size_t b) {
        for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
    };
    auto col_swap = [&](PolyMatrix& M, size_t a, size_t b) {
        for (size_t i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
    };
    auto row_scale = [&](PolyMatrix& M, size_t r, int s) {
        for (size_t j = 0; j < M.cols(); ++j) M.at(r, j) = M.at(r, j).scaled(s);
    };

    const size_t steps = std::min(m, n);
    for (size_t t = 0; t < steps; ++t) {
        // minimal-degree nonzero pivot in the trailing submatrix
        bool found = false;
        size_t pi = t, pj = t;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (D.at(i, j).is_zero()) continue;
                if (!found || D.at(i, j).degree_int() < D.at(pi, pj).degree_int()) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;  // remaining block is zero
        if (pi != t) {
            row_swap(D, t, pi);
            row_swap(U, t, pi);
        }
        if (pj != t) {
            col_swap(D, t, pj);
            col_swap(V, t, pj);
        }

        for (;;) {
            bool reducedAll = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t).is_zero()) continue;
                auto [q, r] = poly_divmod(D.at(i, t), D.at(t, t));
                row_sub(D, i, t, q);
                row_sub(U, i, t, q);
                if (!r.is_zero()) {
                    row_swap(D, t, i);  // strictly smaller remainder becomes the pivot
                    row_swap(U, t, i);
                    reducedAll = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j).is_zero()) continue;
                auto [q, r] = poly_divmod(D.at(t, j), D.at(t, t));
                col_sub(D, j, t, q);
                col_sub(V, j, t, q);
                if (!r.is_zero()) {
                    col_swap(D, t, j);
                    col_swap(V, t, j);
                    reducedAll = false;
                }
            }
            if (!reducedAll) continue;

            // pivot must divide every remaining entry; fold an offender in
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n && divides; ++j) {
                    if ((D.at(i, j) % D.at(t, t)).is_zero()) continue;
                    for (size_t jj = 0; jj < n; ++jj) D.at(t, jj) = D.at(t, jj) + D.at(i, jj);
                    for (size_t jj = 0; jj < m; ++jj) U.at(t, jj) = U.at(t, jj) + U.at(i, jj);
                    divides = false;
                }
            if (divides) break;
        }

        if (!D.at(t, t).is_monic()) {
            int s = F.inv(D.at(t, t).leading_coeff());
            row_scale(D, t, s);
            row_scale(U, t, s);
        }
    }

    SmithResult res{{}, std::move(U), std::move(V), std::move(D)};
    for (size_t t = 0; t < steps; ++t) res.invariant_factors.push_back(res.diagonal.at(t, t));
    return res;
}

/// Partition of x-adic valuations of the invariant factors, largest first,
/// zero valuations stripped. Rejects singular input.
inline Partition invariant_factor_partition(const PolyMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("invariant_factor_partition: matrix must be square");
    auto snf = smith_normal_form(A);
    std::vector<int> vals;
    for (const Poly& d : snf.invariant_factors) {
        if (d.is_zero()) throw std::invalid_argument("invariant_factor_partition: singular matrix");
        vals.push_back(d.x_valuation());
    }
    return Partition::from_unsorted(std::move(vals));
}

struct HornInstance {
    Partition alpha, beta, gamma;
};

namespace detail {

inline bool x_power_factors(const PolyMatrix& A) {
    auto snf = smith_normal_form(A);
    for (const Poly& d : snf.invariant_factors) {
        if (d.is_zero()) return false;
        if (d.degree_int() != d.x_valuation()) return false;  // monic d = x^v exactly
    }
    return true;
}

}  // namespace detail

/// Invariant-factor partitions (alpha, beta, gamma) of A, B and C = A*B.
/// Inputs must be square, nonsingular and have pure x-power invariant
/// factors; determinant degrees add, so |gamma| = |alpha| + |beta|.
inline HornInstance horn_instance(const PolyMatrix& A, const PolyMatrix& B) {
    if (!A.field().same(B.field())) throw FieldMismatch();
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("horn_instance: matrices must be square of equal size");
    if (A.determinant().is_zero() || B.determinant().is_zero())
        throw std::invalid_argument("horn_instance: singular input");
    if (!detail::x_power_factors(A) || !detail::x_power_factors(B))
        throw std::invalid_argument("horn_instance: invariant factors must be powers of x");
    HornInstance h{invariant_factor_partition(A), invariant_factor_partition(B),
                   invariant_factor_partition(A * B)};
    if (h.gamma.size() != h.alpha.size() + h.beta.size())
        throw InternalError("valuation of det(AB) does not split");
    return h;
}

/// Diagonal matrix of the continued-fraction quotients of phi.
inline PolyMatrix quotient_matrix(const RationalFunction& phi) {
    if (phi.numerator().degree() < phi.denominator().degree())
        throw std::invalid_argument("quotient_matrix: requires deg numerator >= deg denominator");
    auto q = euclid_quotients(phi.numerator(), phi.denominator());
    return PolyMatrix::diagonal(phi.field(), q);
}

}  // namespace horncode

#endif
