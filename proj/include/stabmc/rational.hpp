#pragma once

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stabmc {

/// Exact rational on 64-bit numerator/denominator. Intermediate products use
/// 128-bit arithmetic; results that do not reduce back into 64 bits throw.
/// Denominators in practice are powers of two (probabilities) or powers of
/// ten (decimal literals), so the range is ample.
class Rational {
  public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational from_pow2(long long count, unsigned exponent) {
        if (exponent >= 63) throw std::overflow_error("rational: 2^k denominator too large");
        return Rational(count, 1LL << exponent);
    }

    /// Parses a decimal literal such as "0.4999" exactly.
    static Rational from_decimal(std::string_view text) {
        auto dot = text.find('.');
        std::string digits(text.substr(0, dot));
        long long den = 1;
        if (dot != std::string_view::npos) {
            for (size_t k = dot + 1; k < text.size(); ++k) {
                digits.push_back(text[k]);
                den = mul_checked(den, 10);
            }
        }
        if (digits.empty()) throw std::invalid_argument("rational: empty decimal literal");
        errno = 0;
        long long num = std::strtoll(digits.c_str(), nullptr, 10);
        if (errno == ERANGE) throw std::overflow_error("rational: decimal literal out of range");
        return Rational(num, den);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 num = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 den = (__int128)a.den_ * b.den_;
        return from_wide(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ <= (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

  private:
    static long long mul_checked(long long a, long long b) {
        __int128 r = (__int128)a * b;
        if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<long long>(r);
    }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    void normalize() {
        Rational r = from_wide(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace stabmc
