#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/rational.hpp"

namespace guni {

namespace detail {

inline long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Dense univariate polynomials over Q, low degree first.  Only what the
// cyclotomic reduction needs.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division of a by monic b; remainder must vanish for cyclotomic use,
// but the remainder is returned so the caller can perform reductions too.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    qpoly_trim(a);
    if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    const size_t db = b.size() - 1;
    if (a.size() > db) q.assign(a.size() - db, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qpoly_trim(a);
        if (a.size() >= b.size() && a.back().is_zero()) qpoly_trim(a);
    }
    return {std::move(q), std::move(a)};
}

// N-th cyclotomic polynomial via Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
// Cached; guarded for concurrent use.
inline const QPoly& cyclotomic_poly(long n) {
    static std::map<long, QPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<long> pending{n};
    while (!pending.empty()) {
        long m = pending.back();
        if (cache.count(m)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < m; ++d) {
            if (m % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        pending.pop_back();
        QPoly xn_minus_1(m + 1, Rational(0));
        xn_minus_1[0] = Rational(-1);
        xn_minus_1[m] = Rational(1);
        QPoly cur = std::move(xn_minus_1);
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            cur = qpoly_divmod(std::move(cur), cache.at(d)).first;
        }
        cache.emplace(m, std::move(cur));
    }
    return cache.at(n);
}

} // namespace detail

// Global bound on cyclotomic orders.  Keeps runaway field promotion from
// silently exploding; everything in scope fits well below the default.
inline std::atomic<long>& cyclotomic_order_cap() {
    static std::atomic<long> cap{360};
    return cap;
}

inline void check_order_cap(long n) {
    if (n < 1) raise(ErrorCode::BadParameters, "cyclotomic order must be positive");
    long cap = cyclotomic_order_cap().load();
    if (n > cap)
        raise(ErrorCode::CapExceeded,
              "cyclotomic order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), always
// fully reduced modulo Phi_N.  Values are immutable in spirit: every
// operation returns a fresh element, so sharing across threads is safe.
class CycNum {
  public:
    CycNum() : order_(1), coeffs_(1, Rational(0)) {}

    explicit CycNum(const Rational& r) : order_(1), coeffs_(1, r) {}
    CycNum(long long n) : order_(1), coeffs_(1, Rational(n)) {}

    // Coefficient vector of length phi(order) in the power basis.
    CycNum(long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        check_order_cap(order_);
        if ((long)coeffs_.size() != detail::euler_phi(order_))
            raise(ErrorCode::BadParameters, "coefficient vector length must be phi(order)");
    }

    // zeta_N^k, reduced mod Phi_N.
    static CycNum zeta(long n, long k = 1) {
        check_order_cap(n);
        k %= n;
        if (k < 0) k += n;
        detail::QPoly p(k + 1, Rational(0));
        p[k] = Rational(1);
        return from_poly(n, std::move(p));
    }

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const { return is_rational() && coeffs_[0].is_one(); }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    // The rational value; only meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    // Image in Q(zeta_M) under zeta_N -> zeta_M^(M/N).  Requires N | M.
    CycNum promoted(long m) const {
        if (m == order_) return *this;
        if (m % order_ != 0)
            raise(ErrorCode::NotASubfield,
                  "Q(zeta_" + std::to_string(order_) + ") is not a subfield of Q(zeta_" +
                      std::to_string(m) + ")");
        check_order_cap(m);
        long stride = m / order_;
        detail::QPoly p(coeffs_.size() * stride, Rational(0));
        bool nonzero = false;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            p[i * stride] = coeffs_[i];
            nonzero = true;
        }
        if (!nonzero) p.clear();
        return from_poly(m, std::move(p));
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y] = to_common_order(a, b);
        detail::QPoly p(x.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < p.size(); ++i) p[i] = x.coeffs_[i] + y.coeffs_[i];
        return CycNum(x.order_, std::move(p));
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        auto [x, y] = to_common_order(a, b);
        detail::QPoly p(x.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < p.size(); ++i) p[i] = x.coeffs_[i] - y.coeffs_[i];
        return CycNum(x.order_, std::move(p));
    }
    CycNum operator-() const {
        std::vector<Rational> p(coeffs_.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = -coeffs_[i];
        return CycNum(order_, std::move(p));
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        auto [x, y] = to_common_order(a, b);
        detail::QPoly prod(2 * x.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < y.coeffs_.size(); ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return from_poly(x.order_, std::move(prod));
    }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    // Inverse via the extended Euclidean algorithm against Phi_N, which is
    // irreducible over Q, so any nonzero element is a unit.
    CycNum inverse() const {
        if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero cyclotomic number");
        if (is_rational()) return CycNum(order_, with_constant(coeffs_.size(), coeffs_[0].inverse()));
        detail::QPoly r0 = detail::cyclotomic_poly(order_);
        detail::QPoly r1(coeffs_.begin(), coeffs_.end());
        detail::qpoly_trim(r1);
        detail::QPoly s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::qpoly_divmod(r0, r1);
            detail::QPoly s2 = s0;
            // s2 = s0 - q*s1
            if (!q.empty() && !s1.empty()) {
                if (s2.size() < q.size() + s1.size() - 1) s2.resize(q.size() + s1.size() - 1, Rational(0));
                for (size_t i = 0; i < q.size(); ++i) {
                    if (q[i].is_zero()) continue;
                    for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
                }
            }
            detail::qpoly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd = nonzero constant; inverse = s0 / r0.
        if (r0.size() != 1)
            raise(ErrorCode::DivisionByZero, "element not invertible (unexpected gcd)");
        for (auto& c : s0) c /= r0[0];
        return from_poly(order_, std::move(s0));
    }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum result(1);
        CycNum base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = to_common_order(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Total order for canonical sorting; compares in the common field.
    static int compare(const CycNum& a, const CycNum& b) {
        auto [x, y] = to_common_order(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] < y.coeffs_[i]) return -1;
            if (y.coeffs_[i] < x.coeffs_[i]) return 1;
        }
        return 0;
    }

    // Multiplicative order if *this is a root of unity of order <= bound,
    // otherwise 0.
    long root_of_unity_order(long bound) const {
        CycNum p = *this;
        for (long k = 1; k <= bound; ++k) {
            if (p.is_one()) return k;
            p = p * *this;
        }
        return 0;
    }

    std::string str() const {
        if (is_rational()) return coeffs_[0].str();
        std::string s = "(";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += coeffs_[i].str();
        }
        s += ")@" + std::to_string(order_);
        return s;
    }

  private:
    static std::vector<Rational> with_constant(size_t size, Rational c) {
        std::vector<Rational> v(size, Rational(0));
        v[0] = std::move(c);
        return v;
    }

    static CycNum from_poly(long order, detail::QPoly p) {
        long phi = detail::euler_phi(order);
        detail::qpoly_trim(p);
        if ((long)p.size() > phi) p = detail::qpoly_divmod(std::move(p), detail::cyclotomic_poly(order)).second;
        p.resize(phi, Rational(0));
        CycNum out;
        out.order_ = order;
        out.coeffs_ = std::move(p);
        return out;
    }

    static std::pair<CycNum, CycNum> to_common_order(const CycNum& a, const CycNum& b) {
        if (a.order_ == b.order_) return {a, b};
        long l = std::lcm(a.order_, b.order_);
        check_order_cap(l);
        return {a.promoted(l), b.promoted(l)};
    }

    long order_;
    std::vector<Rational> coeffs_;
};

inline CycNum zeta(long n, long k = 1) { return CycNum::zeta(n, k); }

} // namespace guni
