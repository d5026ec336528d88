#ifndef HORNCODE_DIVISOR_HPP
#define HORNCODE_DIVISOR_HPP

#include <map>
#include <vector>

#include "poly.hpp"

namespace horncode {

/// Divisor on the projective line over a finite field: a finite formal sum of
/// points with nonzero integer multiplicities.
class Divisor {
   public:
    explicit Divisor(const FieldSpec& f) : spec_(&f) {}

    const FieldSpec& field() const { return *spec_; }

    Divisor& add(const P1Point& p, int multiplicity) {
        if (!p.field().same(*spec_)) throw FieldMismatch();
        if (multiplicity == 0) return *this;
        auto [it, inserted] = mult_.emplace(p, multiplicity);
        if (!inserted && (it->second += multiplicity) == 0) mult_.erase(it);
        return *this;
    }

    int multiplicity(const P1Point& p) const {
        auto it = mult_.find(p);
        return it == mult_.end() ? 0 : it->second;
    }

    const std::map<P1Point, int>& support() const { return mult_; }

    int degree() const {
        int d = 0;
        for (const auto& [p, m] : mult_) d += m;
        return d;
    }

    bool operator==(const Divisor& o) const { return spec_ == o.spec_ && mult_ == o.mult_; }

   private:
    const FieldSpec* spec_;
    std::map<P1Point, int> mult_;
};

/// Basis of the Riemann-Roch space L(D) on the projective line: the functions
/// x^j * prod (x - P)^{-m_P} for 0 <= j <= deg D, empty when deg D < 0. The
/// basis has deg(D) + 1 elements for nonnegative degree.
inline std::vector<RationalFunction> riemann_roch_basis(const Divisor& D) {
    const FieldSpec& F = D.field();
    const int deg = D.degree();
    if (deg < 0) return {};

    // prod over finite support of (x - P)^{m_P}, split into numerator part
    // (negative multiplicities) and denominator part (positive ones)
    Poly num = Poly::one(F), den = Poly::one(F);
    for (const auto& [p, m] : D.support()) {
        if (p.is_infinity()) continue;
        Poly linear(F, {F.neg(p.value()), 1});
        for (int i = 0; i < (m > 0 ? m : -m); ++i) {
            if (m > 0)
                den = den * linear;
            else
                num = num * linear;
        }
    }

    std::vector<RationalFunction> basis;
    Poly xj = Poly::one(F);
    for (int j = 0; j <= deg; ++j) {
        basis.emplace_back(num * xj, den);
        xj = xj * Poly::x(F);
    }
    return basis;
}

}  // namespace horncode

#endif
