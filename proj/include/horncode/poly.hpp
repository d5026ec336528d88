#ifndef HORNCODE_POLY_HPP
#define HORNCODE_POLY_HPP

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "field.hpp"

namespace horncode {

/// Degree of a polynomial: a nonnegative integer or minus infinity (for the
/// zero polynomial), which compares below every integer.
class Degree {
   public:
    static Degree neg_infinity() { return Degree(); }
    Degree(int v) : finite_(true), v_(v) {}

    bool is_finite() const { return finite_; }
    int value() const {
        if (!finite_) throw Error("degree is minus infinity");
        return v_;
    }

    bool operator==(const Degree& o) const { return finite_ == o.finite_ && (!finite_ || v_ == o.v_); }
    bool operator<(const Degree& o) const {
        if (!finite_) return o.finite_;
        return o.finite_ && v_ < o.v_;
    }
    bool operator<=(const Degree& o) const { return *this < o || *this == o; }
    bool operator>(const Degree& o) const { return o < *this; }
    bool operator>=(const Degree& o) const { return o <= *this; }

   private:
    bool finite_ = false;
    int v_ = 0;
    Degree() = default;
};

/// Univariate polynomial over a FieldSpec. Coefficients are packed element
/// values stored ascending with no trailing zeros; the zero polynomial has an
/// empty coefficient vector.
class Poly {
   public:
    Poly() : spec_(nullptr) {}
    Poly(const FieldSpec& f, std::vector<int> coeffs) : spec_(&f), c_(std::move(coeffs)) {
        for (int& x : c_) {
            if (x < 0 || x >= f.order()) throw std::invalid_argument("coefficient out of field range");
        }
        strip();
    }

    static Poly zero(const FieldSpec& f) { return Poly(f, {}); }
    static Poly one(const FieldSpec& f) { return Poly(f, {1}); }
    static Poly x(const FieldSpec& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FieldSpec& f, int v) { return Poly(f, {v}); }
    static Poly monomial(const FieldSpec& f, int coeff, int deg) {
        std::vector<int> c(deg + 1, 0);
        c[deg] = coeff;
        return Poly(f, std::move(c));
    }

    const FieldSpec& field() const {
        if (!spec_) throw Error("polynomial has no field");
        return *spec_;
    }
    const std::vector<int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(static_cast<int>(c_.size()) - 1); }
    int degree_int() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    int leading_coeff() const {
        if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    // Order of vanishing at x = 0.
    int x_valuation() const {
        if (c_.empty()) throw Error("zero polynomial has no x-valuation");
        int v = 0;
        while (c_[v] == 0) ++v;
        return v;
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    int eval(int point) const {
        const FieldSpec& f = field();
        int acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, point), c_[i]);
        return acc;
    }

    Poly operator+(const Poly& o) const { return combine(o, +1); }
    Poly operator-(const Poly& o) const { return combine(o, -1); }
    Poly operator-() const {
        Poly out = *this;
        for (int& x : out.c_) x = field().neg(x);
        return out;
    }

    Poly operator*(const Poly& o) const {
        require_same(o);
        if (is_zero() || o.is_zero()) return zero(field());
        const FieldSpec& f = field();
        std::vector<int> c(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(c_[i], o.c_[j]));
        return Poly(f, std::move(c));
    }

    Poly scaled(int s) const {
        Poly out = *this;
        for (int& x : out.c_) x = field().mul(x, s);
        out.strip();
        return out;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field().inv(c_.back()));
    }

    // Maps a prime-field polynomial into an extension with the same
    // characteristic (constants embed as constants).
    Poly lifted(const FieldSpec& bigger) const {
        if (field().extension_degree() != 1 || bigger.characteristic() != field().characteristic())
            throw std::invalid_argument("lift requires a prime field and matching characteristic");
        return Poly(bigger, c_);
    }

    bool operator==(const Poly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
    bool operator<(const Poly& o) const { return c_ < o.c_; }  // arbitrary total order for containers

   private:
    const FieldSpec* spec_;
    std::vector<int> c_;

    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void require_same(const Poly& o) const {
        if (spec_ != o.spec_) throw FieldMismatch("polynomials over different fields");
    }

    Poly combine(const Poly& o, int sgn) const {
        require_same(o);
        const FieldSpec& f = field();
        std::vector<int> c(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) {
            int b = o.coeff(static_cast<int>(i));
            c[i] = sgn > 0 ? f.add(coeff(static_cast<int>(i)), b) : f.sub(coeff(static_cast<int>(i)), b);
        }
        return Poly(f, std::move(c));
    }
};

/// Division with remainder: f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldSpec& F = f.field();
    if (!F.same(g.field())) throw FieldMismatch("polynomials over different fields");
    std::vector<int> rem(f.coeffs());
    const int dg = g.degree_int();
    const int lcInv = F.inv(g.leading_coeff());
    std::vector<int> quot(std::max<int>(0, static_cast<int>(rem.size()) - dg), 0);
    while (static_cast<int>(rem.size()) - 1 >= dg && !rem.empty()) {
        int shift = static_cast<int>(rem.size()) - 1 - dg;
        int factor = F.mul(rem.back(), lcInv);
        quot[shift] = factor;
        for (int i = 0; i <= dg; ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, g.coeff(i)));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

inline Poly operator/(const Poly& f, const Poly& g) { return poly_divmod(f, g).first; }
inline Poly operator%(const Poly& f, const Poly& g) { return poly_divmod(f, g).second; }

/// Monic greatest common divisor.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Quotients q_1, ..., q_k of the Euclidean chain f_0 = f, f_1 = g,
/// f_{i+1} = f_{i-1} mod f_i, stopping when the remainder vanishes. The
/// continued fraction q_1 + 1/(q_2 + 1/(...)) rebuilds f/g in lowest terms.
inline std::vector<Poly> euclid_quotients(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("euclid_quotients: zero divisor");
    if (f.degree() < g.degree()) throw std::invalid_argument("euclid_quotients: requires deg f >= deg g");
    std::vector<Poly> quotients;
    Poly a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        quotients.push_back(q);
        a = std::move(b);
        b = std::move(r);
    }
    return quotients;
}

/// Quotient of polynomials in lowest terms with monic denominator.
class RationalFunction {
   public:
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (!num_.field().same(den_.field())) throw FieldMismatch();
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        reduce();
    }
    explicit RationalFunction(Poly num) : RationalFunction(num, Poly::one(num.field())) {}

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    const FieldSpec& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    // max(deg f, deg g); the degree of the induced map on the projective line
    int degree() const { return std::max(num_.degree_int(), den_.degree_int()); }
    bool is_constant() const { return degree() <= 0; }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction reciprocal() const {
        if (num_.is_zero()) throw DivisionByZero("reciprocal of zero");
        return RationalFunction(den_, num_);
    }

    // Value as a point of P^1 (poles evaluate to infinity).
    P1Point eval(const P1Point& at) const {
        const FieldSpec& F = field();
        if (at.is_infinity()) {
            int dn = num_.degree_int(), dd = den_.degree_int();
            if (num_.is_zero()) return P1Point::finite(F, 0);
            if (dn > dd) return P1Point::infinity(F);
            if (dn < dd) return P1Point::finite(F, 0);
            return P1Point::finite(F, F.div(num_.leading_coeff(), den_.leading_coeff()));
        }
        int n = num_.eval(at.value()), d = den_.eval(at.value());
        if (d == 0) {
            if (n == 0) throw InternalError("unreduced rational function");
            return P1Point::infinity(F);
        }
        return P1Point::finite(F, F.div(n, d));
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

   private:
    Poly num_, den_;

    void reduce() {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (den_.is_zero()) throw InternalError("reduction produced zero denominator");
        int lc = den_.leading_coeff();
        if (lc != 1) {
            int s = num_.field().inv(lc);
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }
};

/// Substitutes x := (a z + b) / (c z + d) into phi, returning a rational
/// function of z. The matrix (a b; c d) must be invertible.
inline RationalFunction compose_moebius(const RationalFunction& phi, int a, int b, int c, int d) {
    const FieldSpec& F = phi.field();
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) throw std::invalid_argument("singular Moebius substitution");
    const Poly az_b = Poly(F, {b, a});
    const Poly cz_d = Poly(F, {d, c});
    const int D = std::max(phi.numerator().degree_int(), phi.denominator().degree_int());
    auto homogenize = [&](const Poly& p) {
        Poly acc = Poly::zero(F);
        Poly up = Poly::one(F);  // (az+b)^i, built incrementally
        std::vector<Poly> down(D + 1, Poly::one(F));
        for (int i = 1; i <= D; ++i) down[i] = down[i - 1] * cz_d;
        for (int i = 0; i <= D; ++i) {
            if (p.coeff(i) != 0) acc = acc + (up * down[D - i]).scaled(p.coeff(i));
            up = up * az_b;
        }
        return acc;
    };
    return RationalFunction(homogenize(phi.numerator()), homogenize(phi.denominator()));
}

/// Post-composition with w := (a w + b) / (c w + d).
inline RationalFunction post_compose_moebius(const RationalFunction& phi, int a, int b, int c, int d) {
    const FieldSpec& F = phi.field();
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) throw std::invalid_argument("singular Moebius substitution");
    const Poly& N = phi.numerator();
    const Poly& Dn = phi.denominator();
    return RationalFunction(N.scaled(a) + Dn.scaled(b), N.scaled(c) + Dn.scaled(d));
}

/// Local degree (ramification multiplicity) of phi at x0: the vanishing order
/// at z = 0 of sigma2 . phi . sigma1 with sigma1(0) = x0 and
/// sigma2(phi(x0)) = 0, using translations at finite points and the inversion
/// at infinity.
inline int local_degree(const RationalFunction& phi, const P1Point& x0) {
    if (phi.is_constant()) throw std::invalid_argument("local_degree: map must be nonconstant");
    const FieldSpec& F = phi.field();
    if (!F.same(x0.field())) throw FieldMismatch();

    RationalFunction pulled = x0.is_infinity() ? compose_moebius(phi, 0, 1, 1, 0)
                                               : compose_moebius(phi, 1, x0.value(), 0, 1);
    P1Point y = phi.eval(x0);
    RationalFunction psi = y.is_infinity() ? post_compose_moebius(pulled, 0, 1, 1, 0)
                                           : post_compose_moebius(pulled, 1, F.neg(y.value()), 0, 1);
    if (psi.numerator().is_zero()) throw InternalError("local composition collapsed to zero");
    if (psi.denominator().eval(0) == 0) throw InternalError("pole at the centered point after reduction");
    int ord = psi.numerator().x_valuation();
    if (ord < 1) throw InternalError("centered map does not vanish at 0");
    return ord;
}

}  // namespace horncode

#endif
