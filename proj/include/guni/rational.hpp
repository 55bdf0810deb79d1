#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "guni/errors.hpp"

namespace guni {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number.  Always stored in lowest terms with positive
// denominator, so equality is field equality and comparison is total.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }

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
        if (b.num_ == 0) raise(ErrorCode::DivisionByZero, "rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (num_ == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Canonical form: "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses the canonical form emitted by str().
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "bad rational literal: " + s);
        }
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Exact m-th root when one exists in Q (componentwise on the reduced
    // numerator and denominator).
    std::optional<Rational> nth_root(long m) const {
        if (m < 1) return std::nullopt;
        if (m == 1) return *this;
        if (num_ == 0) return Rational(0);
        bool negative = num_ < 0;
        if (negative && m % 2 == 0) return std::nullopt;
        auto root_n = integer_nth_root(negative ? BigInt(-num_) : num_, m);
        auto root_d = integer_nth_root(den_, m);
        if (!root_n || !root_d) return std::nullopt;
        BigInt n = negative ? BigInt(-*root_n) : *root_n;
        return Rational(std::move(n), std::move(*root_d));
    }

  private:
    struct NoNormalize {};
    Rational(BigInt n, BigInt d, NoNormalize) : num_(std::move(n)), den_(std::move(d)) {}

    // Exact m-th root of a nonnegative integer, if it is a perfect power.
    static std::optional<BigInt> integer_nth_root(const BigInt& x, long m) {
        if (x == 0 || x == 1) return x;
        BigInt lo = 1, hi = x;
        while (lo < hi) {
            BigInt mid = (lo + hi + 1) / 2;
            BigInt p = 1;
            bool over = false;
            for (long i = 0; i < m; ++i) {
                p *= mid;
                if (p > x) { over = true; break; }
            }
            if (over) hi = mid - 1;
            else lo = mid;
        }
        BigInt p = 1;
        for (long i = 0; i < m; ++i) p *= lo;
        if (p == x) return lo;
        return std::nullopt;
    }

    void normalize() {
        if (den_ == 0) raise(ErrorCode::DivisionByZero, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace guni
