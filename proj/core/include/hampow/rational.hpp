#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hampow {

/// Exact rational over 128-bit integers. All values that arise here are
/// desk-scale (numerators bounded by a few times k*n), so 128 bits leave
/// ample headroom for cross-multiplied comparisons.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(n), den_(d) {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    long long num_ll() const { return checked_ll(num_); }
    long long den_ll() const { return checked_ll(den_); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const {
        std::string s = int_str(num_);
        if (den_ != 1) s += "/" + int_str(den_);
        return s;
    }

private:
    Int num_, den_;

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd128(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static Int gcd128(Int a, Int b) {
        while (b != 0) { Int t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    static long long checked_ll(Int v) {
        assert(v <= INT64_MAX && v >= INT64_MIN);
        return static_cast<long long>(v);
    }

    static std::string int_str(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        std::string s;
        while (u > 0) { s.insert(s.begin(), char('0' + int(u % 10))); u /= 10; }
        return neg ? "-" + s : s;
    }
};

}  // namespace hampow
