#ifndef HORNCODE_CODES_HPP
#define HORNCODE_CODES_HPP

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "divisor.hpp"
#include "linalg.hpp"
#include "partition.hpp"

namespace horncode {

/// Linear code given by a generator matrix (rows span the code). The
/// dimension is the row rank; the minimum distance is computed on demand by
/// exhaustive enumeration.
class LinearCode {
   public:
    explicit LinearCode(FqMatrix generator) : gen_(std::move(generator)) {}

    const FieldSpec& field() const { return gen_.field(); }
    const FqMatrix& generator() const { return gen_; }
    size_t length() const { return gen_.cols(); }
    size_t dimension() const { return gen_.rank(); }

   private:
    FqMatrix gen_;
};

/// Exact minimum Hamming weight over all nonzero codewords, by enumerating
/// messages against a row basis. Refuses instances past the exhaustion bound.
inline int min_distance(const LinearCode& code, long long bound = 1'000'000) {
    const FieldSpec& f = code.field();
    FqMatrix basis = code.generator().rref();
    const size_t k = basis.rows();
    if (k == 0) throw std::invalid_argument("min_distance: code has dimension zero");
    const size_t n = code.length();
    long long total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= f.order();
        if (total > bound)
            throw ExhaustionLimit("min_distance: q^k exceeds the exhaustion bound; use a smaller instance");
    }

    std::vector<int> message(k, 0);
    std::vector<int> word(n, 0);
    int best = static_cast<int>(n) + 1;
    for (long long idx = 1; idx < total; ++idx) {
        // next message in odometer order
        for (size_t pos = 0;; ++pos) {
            if (++message[pos] < f.order()) break;
            message[pos] = 0;
        }
        std::fill(word.begin(), word.end(), 0);
        for (size_t i = 0; i < k; ++i) {
            if (message[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(message[i], basis.at(i, j)));
        }
        int w = 0;
        for (int v : word) w += v != 0;
        best = std::min(best, w);
    }
    if (best > static_cast<int>(n)) throw InternalError("no nonzero codeword found");
    return best;
}

/// Evaluation code of the divisor D at the given points: one generator row
/// per Riemann-Roch basis function. Points must be distinct and avoid the
/// support of D.
inline LinearCode evaluation_code(const Divisor& D, const std::vector<P1Point>& points) {
    const FieldSpec& F = D.field();
    if (points.empty()) throw std::invalid_argument("evaluation_code: empty evaluation set");
    std::set<P1Point> dedup;
    for (const auto& p : points) {
        if (!p.field().same(F)) throw FieldMismatch();
        if (!dedup.insert(p).second) throw std::invalid_argument("evaluation_code: repeated evaluation point");
        if (D.multiplicity(p) != 0)
            throw std::invalid_argument("evaluation_code: evaluation point meets the divisor support");
    }
    auto basis = riemann_roch_basis(D);
    std::vector<std::vector<int>> rows;
    for (const auto& fn : basis) {
        std::vector<int> row;
        for (const auto& p : points) {
            P1Point v = fn.eval(p);
            if (v.is_infinity()) throw InternalError("basis function has a pole at an evaluation point");
            row.push_back(v.value());
        }
        rows.push_back(std::move(row));
    }
    FqMatrix gen = rows.empty() ? FqMatrix(F, 0, points.size()) : FqMatrix(F, std::move(rows));
    return LinearCode(std::move(gen));
}

/// Evaluation vector of a single rational function at the given points; the
/// function must have no pole there.
inline std::vector<FieldElement> rational_map_code(const RationalFunction& phi,
                                                   const std::vector<P1Point>& points) {
    const FieldSpec& F = phi.field();
    std::vector<FieldElement> word;
    for (const auto& p : points) {
        if (!p.field().same(F)) throw FieldMismatch();
        P1Point v = phi.eval(p);
        if (v.is_infinity()) throw std::invalid_argument("rational_map_code: pole at an evaluation point");
        word.emplace_back(F, v.value());
    }
    return word;
}

inline bool is_prime_power(long long q, long long& p_out, int& k_out) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;  // q itself is prime
    long long rest = q;
    int k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return false;
    p_out = p;
    k_out = k;
    return true;
}

/// Code on the line over GF(q^2) from the divisor a[0] + b[1] + c[inf],
/// evaluated at every rational point off the support. Requires d | q^2 - 1.
struct ThreePointCode {
    std::shared_ptr<const FieldSpec> field;  // GF(q^2), owned by the result
    Divisor divisor;
    LinearCode code;
};

inline ThreePointCode three_point_code(int a, int b, int c, int d, long long q) {
    long long p;
    int k;
    if (!is_prime_power(q, p, k)) throw std::invalid_argument("three_point_code: q must be a prime power");
    if (d < 1 || (q * q - 1) % d != 0) throw std::invalid_argument("three_point_code: d must divide q^2 - 1");

    auto F = std::make_shared<const FieldSpec>(p, 2 * k);
    Divisor D(*F);
    D.add(P1Point::finite(*F, 0), a);
    D.add(P1Point::finite(*F, 1), b);
    D.add(P1Point::infinity(*F), c);

    std::vector<P1Point> pts;
    for (int v = 2; v < F->order(); ++v) pts.push_back(P1Point::finite(*F, v));
    if (pts.empty()) throw std::invalid_argument("three_point_code: empty evaluation set");
    LinearCode code = evaluation_code(D, pts);
    return ThreePointCode{std::move(F), std::move(D), std::move(code)};
}

/// All subspaces of the given dimension of F_q^{ambient}, one reduced
/// row-echelon representative each, enumerated by pivot-column patterns.
inline std::vector<FqMatrix> enumerate_subspaces(const FieldSpec& f, int ambient, int dim) {
    if (dim < 0 || dim > ambient) throw std::invalid_argument("enumerate_subspaces: bad dimension");
    std::vector<FqMatrix> out;
    if (dim == 0) return out;

    std::vector<int> pivots(dim);
    auto fill = [&](auto&& self, std::vector<std::pair<int, int>>& freePos, size_t idx, FqMatrix& m) -> void {
        if (idx == freePos.size()) {
            out.push_back(m);
            return;
        }
        auto [r, c] = freePos[idx];
        for (int v = 0; v < f.order(); ++v) {
            m.at(r, c) = v;
            self(self, freePos, idx + 1, m);
        }
        m.at(r, c) = 0;
    };
    auto choose = [&](auto&& self, int pos, int next) -> void {
        if (pos == dim) {
            FqMatrix m(f, dim, ambient);
            std::vector<std::pair<int, int>> freePos;
            for (int r = 0; r < dim; ++r) {
                m.at(r, pivots[r]) = 1;
                for (int c = pivots[r] + 1; c < ambient; ++c) {
                    bool isPivot = false;
                    for (int rr = 0; rr < dim; ++rr) isPivot = isPivot || pivots[rr] == c;
                    if (!isPivot) freePos.emplace_back(r, c);
                }
            }
            fill(fill, freePos, 0, m);
            return;
        }
        for (int c = next; c <= ambient - (dim - pos); ++c) {
            pivots[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
    return out;
}

struct GrassmannCodeParams {
    long long length;            // number of (r+1)-subspaces of F_q^{n+1}
    long long dimension_formula; // binomial(n, r)
    long long dimension_plucker; // rank of the Pluecker generator matrix
};

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

/// Length and the two candidate dimensions of the Grassmann code of
/// (r+1)-subspaces of F_q^{n+1}: the printed binomial(n, r) alongside the
/// rank of the actual Pluecker-coordinate matrix, both reported so they can
/// be compared.
inline GrassmannCodeParams grassmann_code_params(int n, int r, const FieldSpec& f) {
    if (r < 0 || r > n) throw std::invalid_argument("grassmann_code_params: requires 0 <= r <= n");
    const int ambient = n + 1, dim = r + 1;
    auto subspaces = enumerate_subspaces(f, ambient, dim);

    // columns: one per subspace; rows: one per dim-subset of coordinates
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == dim) {
            subsets.push_back(cur);
            return;
        }
        for (int c = next; c <= ambient - (dim - static_cast<int>(cur.size())); ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    auto minor_det = [&](const FqMatrix& m, const std::vector<int>& colsPick) {
        // determinant by Gaussian elimination on a dim x dim block
        std::vector<std::vector<int>> a(dim, std::vector<int>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a[i][j] = m.at(i, colsPick[j]);
        int det = 1;
        for (int col = 0; col < dim; ++col) {
            int sel = col;
            while (sel < dim && a[sel][col] == 0) ++sel;
            if (sel == dim) return 0;
            if (sel != col) {
                std::swap(a[sel], a[col]);
                det = f.neg(det);
            }
            det = f.mul(det, a[col][col]);
            int inv = f.inv(a[col][col]);
            for (int i = col + 1; i < dim; ++i) {
                if (a[i][col] == 0) continue;
                int factor = f.mul(a[i][col], inv);
                for (int j = col; j < dim; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[col][j]));
            }
        }
        return det;
    };

    std::vector<std::vector<int>> plucker(subsets.size(), std::vector<int>(subspaces.size(), 0));
    for (size_t s = 0; s < subspaces.size(); ++s)
        for (size_t row = 0; row < subsets.size(); ++row) plucker[row][s] = minor_det(subspaces[s], subsets[row]);

    GrassmannCodeParams params{};
    params.length = q_binomial(n, r, f.order());
    params.dimension_formula = binomial(n, r);
    params.dimension_plucker =
        subsets.empty() ? 0 : static_cast<long long>(FqMatrix(f, std::move(plucker)).rank());
    if (params.length != static_cast<long long>(subspaces.size()))
        throw InternalError("subspace enumeration disagrees with the q-binomial count");
    return params;
}

}  // namespace horncode

#endif
