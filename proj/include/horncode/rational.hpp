#ifndef HORNCODE_RATIONAL_HPP
#define HORNCODE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace horncode {

// Exact rational number with reduced representation and positive denominator.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw DivisionByZero("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        // cross-multiplication is exact; denominators are positive
        return num_ * o.den_ <=> o.num_ * den_;
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

   private:
    long long num_, den_;

    void reduce() {
        if (den_ == 0) throw DivisionByZero("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace horncode

#endif
