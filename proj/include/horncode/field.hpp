#ifndef HORNCODE_FIELD_HPP
#define HORNCODE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace horncode {

namespace gfp {

// Helpers on polynomials over GF(p), coefficients ascending in a vector<int>.

inline void strip(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = static_cast<int>((c[i + j] + 1LL * a[i] * b[j]) % p);
    strip(c);
    return c;
}

inline long long inv_mod(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw DivisionByZero("not invertible mod p");
    return ((t % p) + p) % p;
}

// Remainder of a by monic-normalizable b.
inline std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, long long p) {
    strip(a);
    if (b.empty()) throw DivisionByZero("polynomial modulus is zero");
    const long long lcInv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long long factor = a.back() % p * lcInv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<int>(((a[shift + i] - factor * b[i]) % p + p) % p);
        strip(a);
    }
    return a;
}

inline bool is_irreducible(const std::vector<int>& f, long long p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    // trial division by every monic polynomial of degree 1..deg/2
    std::vector<int> divisor;
    auto rec = [&](auto&& self, int d, size_t pos) -> bool {  // returns true iff a factor exists
        if (pos == divisor.size() - 1) {
            divisor.back() = 1;  // monic
            return mod(f, divisor, p).empty();
        }
        for (int c = 0; c < p; ++c) {
            divisor[pos] = c;
            if (self(self, d, pos + 1)) return true;
        }
        return false;
    };
    for (int d = 1; d <= deg / 2; ++d) {
        divisor.assign(d + 1, 0);
        if (rec(rec, d, 0)) return false;
    }
    return true;
}

}  // namespace gfp

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Description of GF(p^k). Elements are packed integers in [0, p^k): the
/// base-p digits of a packed value are the coordinates in the power basis
/// {1, a, ..., a^{k-1}} of the generator a, reduced by the stored modulus.
///
/// Instances are immutable and pinned in memory (non-copyable); elements,
/// polynomials and matrices refer to their field by address and must not
/// outlive it.
class FieldSpec {
   public:
    explicit FieldSpec(long long p) : FieldSpec(p, 1, {}) {}

    FieldSpec(long long p, int k) : FieldSpec(p, k, k > 1 ? smallest_irreducible(p, k) : std::vector<int>{}) {}

    FieldSpec(long long p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
        if (k_ < 1) throw std::invalid_argument("extension degree must be positive");
        q_ = 1;
        for (int i = 0; i < k_; ++i) {
            if (q_ > (1LL << 40) / p_) throw std::invalid_argument("field too large");
            q_ *= p_;
        }
        if (k_ == 1) {
            if (!modulus_.empty()) throw std::invalid_argument("prime field takes no modulus");
        } else {
            for (int& c : modulus_) c = static_cast<int>(((c % p_) + p_) % p_);
            if (static_cast<int>(modulus_.size()) != k_ + 1 || modulus_.back() == 0)
                throw std::invalid_argument("modulus must have degree k");
            if (modulus_.back() != 1) {  // normalize monic
                long long s = gfp::inv_mod(modulus_.back(), p_);
                for (int& c : modulus_) c = static_cast<int>(c * s % p_);
            }
            if (!gfp::is_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is not irreducible");
        }
    }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    long long characteristic() const { return p_; }
    int extension_degree() const { return k_; }
    long long order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // --- arithmetic on packed element values ---

    int add(int a, int b) const {
        if (k_ == 1) return static_cast<int>((a + b) % p_);
        return digitwise(a, b, +1);
    }
    int sub(int a, int b) const {
        if (k_ == 1) return static_cast<int>(((a - b) % p_ + p_) % p_);
        return digitwise(a, b, -1);
    }
    int neg(int a) const { return sub(0, a); }

    int mul(int a, int b) const {
        if (k_ == 1) return static_cast<int>(1LL * a * b % p_);
        auto prod = gfp::mul(unpack(a), unpack(b), p_);
        return pack(gfp::mod(std::move(prod), modulus_, p_));
    }

    int pow(int a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        int result = 1, base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    int inv(int a) const {
        if (a == 0) throw DivisionByZero("field inverse of zero");
        if (k_ == 1) return static_cast<int>(gfp::inv_mod(a, p_));
        return pow(a, q_ - 2);
    }

    int div(int a, int b) const {
        if (b == 0) throw DivisionByZero("field division by zero");
        return mul(a, inv(b));
    }

    // Integer reduced into the prime subfield.
    int from_integer(long long v) const { return static_cast<int>(((v % p_) + p_) % p_); }

    std::vector<int> coords(int a) const { return unpack(a); }
    int from_coords(const std::vector<int>& c) const {
        if (static_cast<int>(c.size()) > k_) throw std::invalid_argument("too many coordinates");
        long long v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p_ + ((c[i] % p_) + p_) % p_;
        return static_cast<int>(v);
    }

    // Multiplicative generator, found by exhaustion on first use.
    int primitive_element() const {
        std::call_once(primitive_once_, [this] {
            for (int g = 1; g < q_; ++g) {
                long long ord = 1;
                int x = g;
                while (x != 1) {
                    x = mul(x, g);
                    ++ord;
                }
                if (ord == q_ - 1) {
                    primitive_ = g;
                    return;
                }
            }
            throw InternalError("no primitive element found");
        });
        return primitive_;
    }

    bool same(const FieldSpec& o) const { return this == &o; }

   private:
    long long p_;
    int k_;
    long long q_;
    std::vector<int> modulus_;
    mutable std::once_flag primitive_once_;
    mutable int primitive_ = 0;

    std::vector<int> unpack(int a) const {
        std::vector<int> d;
        long long v = a;
        while (v > 0) {
            d.push_back(static_cast<int>(v % p_));
            v /= p_;
        }
        return d;
    }

    int pack(const std::vector<int>& d) const {
        long long v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return static_cast<int>(v);
    }

    int digitwise(int a, int b, int sgn) const {
        long long v = 0, mult = 1;
        long long x = a, y = b;
        for (int i = 0; i < k_; ++i) {
            long long da = x % p_, db = y % p_;
            v += ((da + sgn * db) % p_ + p_) % p_ * mult;
            mult *= p_;
            x /= p_;
            y /= p_;
        }
        return static_cast<int>(v);
    }

    static std::vector<int> smallest_irreducible(long long p, int k) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        // scan constant-first coefficient vectors in counting order
        std::vector<int> f(k + 1, 0);
        f[k] = 1;
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (long long v = 1; v < total; ++v) {
            long long rest = v;
            for (int i = 0; i < k; ++i) {
                f[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            if (gfp::is_irreducible(f, p)) return f;
        }
        throw InternalError("no irreducible modulus found");
    }
};

/// Value in a FieldSpec; arithmetic requires both operands to come from the
/// same field instance.
class FieldElement {
   public:
    FieldElement() : spec_(nullptr), v_(0) {}
    FieldElement(const FieldSpec& spec, int packed) : spec_(&spec), v_(packed) {
        if (packed < 0 || packed >= spec.order()) throw std::invalid_argument("packed value out of range");
    }

    const FieldSpec& field() const {
        if (!spec_) throw Error("element has no field");
        return *spec_;
    }
    int value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return apply(o, &FieldSpec::add); }
    FieldElement operator-(const FieldElement& o) const { return apply(o, &FieldSpec::sub); }
    FieldElement operator*(const FieldElement& o) const { return apply(o, &FieldSpec::mul); }
    FieldElement operator/(const FieldElement& o) const { return apply(o, &FieldSpec::div); }
    FieldElement operator-() const { return FieldElement(field(), field().neg(v_)); }
    FieldElement inverse() const { return FieldElement(field(), field().inv(v_)); }
    FieldElement pow(long long e) const { return FieldElement(field(), field().pow(v_, e)); }

    bool operator==(const FieldElement& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        return v_ == o.v_;
    }

   private:
    const FieldSpec* spec_;
    int v_;

    FieldElement apply(const FieldElement& o, int (FieldSpec::*op)(int, int) const) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        return FieldElement(*spec_, (spec_->*op)(v_, o.v_));
    }
};

/// Point of the projective line over a field: a field element or infinity.
class P1Point {
   public:
    static P1Point infinity(const FieldSpec& f) { return P1Point(&f, true, 0); }
    static P1Point finite(const FieldSpec& f, int value) { return P1Point(&f, false, value); }

    const FieldSpec& field() const { return *spec_; }
    bool is_infinity() const { return inf_; }
    int value() const {
        if (inf_) throw Error("infinity has no finite value");
        return v_;
    }

    bool operator==(const P1Point& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        return inf_ == o.inf_ && v_ == o.v_;
    }
    // finite points first (by packed value), infinity last
    bool operator<(const P1Point& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        if (inf_ != o.inf_) return !inf_;
        return v_ < o.v_;
    }

   private:
    const FieldSpec* spec_;
    bool inf_;
    int v_;
    P1Point(const FieldSpec* f, bool inf, int v) : spec_(f), inf_(inf), v_(v) {
        if (!inf && (v < 0 || v >= f->order())) throw std::invalid_argument("value out of field range");
    }
};

/// All points of P^1 over the field: every element, then infinity.
inline std::vector<P1Point> projective_line(const FieldSpec& f) {
    std::vector<P1Point> pts;
    for (int v = 0; v < f.order(); ++v) pts.push_back(P1Point::finite(f, v));
    pts.push_back(P1Point::infinity(f));
    return pts;
}

}  // namespace horncode

#endif
