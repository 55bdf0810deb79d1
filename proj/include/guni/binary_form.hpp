#pragma once

#include <utility>
#include <vector>

#include "guni/cyclotomic.hpp"
#include "guni/errors.hpp"

namespace guni {

namespace detail {

// Dense univariate polynomials over Q(zeta_N), low degree first.
using CPoly = std::vector<CycNum>;

inline void cpoly_trim(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline std::pair<CPoly, CPoly> cpoly_divmod(CPoly a, const CPoly& b) {
    cpoly_trim(a);
    if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    CPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, CycNum(0));
    const CycNum lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        CycNum c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        cpoly_trim(a);
    }
    return {std::move(q), std::move(a)};
}

// Classical Euclid; degrees in this engine never exceed 4, so coefficient
// growth is a non-issue.  Result is monic unless zero.
inline CPoly cpoly_gcd(CPoly a, CPoly b) {
    cpoly_trim(a);
    cpoly_trim(b);
    while (!b.empty()) {
        CPoly r = cpoly_divmod(std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycNum inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

inline CPoly cpoly_derivative(const CPoly& p) {
    CPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(CycNum((long long)i) * p[i]);
    cpoly_trim(d);
    return d;
}

} // namespace detail

// Homogeneous binary form f(s,t) of the stated degree; coeffs[i] is the
// coefficient of s^(d-i) t^i.  A zero form has all coefficients zero.
class BinaryForm {
  public:
    BinaryForm() : degree_(0), coeffs_(1, CycNum(0)) {}

    BinaryForm(int degree, std::vector<CycNum> coeffs)
        : degree_(degree), coeffs_(std::move(coeffs)) {
        if ((int)coeffs_.size() != degree_ + 1)
            raise(ErrorCode::DimensionMismatch, "binary form needs degree+1 coefficients");
    }

    int degree() const { return degree_; }
    const std::vector<CycNum>& coeffs() const { return coeffs_; }
    const CycNum& coeff(int i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    CycNum evaluate(const CycNum& s, const CycNum& t) const {
        CycNum acc(0);
        for (int i = 0; i <= degree_; ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc += coeffs_[i] * s.pow(degree_ - i) * t.pow(i);
        }
        return acc;
    }

    // f(x, 1); drops the t-power carried by a root at [1:0].
    detail::CPoly dehomogenized() const {
        detail::CPoly p(coeffs_.rbegin(), coeffs_.rend());
        detail::cpoly_trim(p);
        return p;
    }

    // Multiplicity of the root [1:0] (largest k with t^k dividing f).
    int infinity_multiplicity() const {
        for (int i = 0; i <= degree_; ++i)
            if (!coeffs_[i].is_zero()) return i;
        return degree_ + 1; // zero form
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i <= degree_; ++i) {
            if (i) s += " + ";
            s += coeffs_[i].str() + "*s^" + std::to_string(degree_ - i) + "t^" + std::to_string(i);
        }
        return s;
    }

  private:
    int degree_;
    std::vector<CycNum> coeffs_;
};

// GCD of two binary forms as homogeneous polynomials.  The finite roots are
// handled by a univariate gcd of the dehomogenizations; the common root at
// [1:0] contributes the shared power of t.  gcd(0, g) = g.
inline BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    detail::CPoly u = detail::cpoly_gcd(f.dehomogenized(), g.dehomogenized());
    int t_power = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
    int d = (int)u.size() - 1 + t_power;
    std::vector<CycNum> coeffs(d + 1, CycNum(0));
    // s^(deg u - i) t^(i + t_power) gets u[deg u - i]; reverse into form order.
    for (int i = 0; i < (int)u.size(); ++i) coeffs[(int)u.size() - 1 - i + t_power] = u[i];
    return BinaryForm(d, std::move(coeffs));
}

// Number of distinct projective roots of f over C: the squarefree part of
// the dehomogenization plus the point at infinity when the leading
// coefficient vanishes.  Exact; no root coordinates are ever produced.
inline int squarefree_degree(const BinaryForm& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroForm, "squarefree degree of the zero form");
    detail::CPoly p = f.dehomogenized();
    int at_infinity = f.infinity_multiplicity() > 0 ? 1 : 0;
    if (p.size() <= 1) return at_infinity;
    detail::CPoly g = detail::cpoly_gcd(p, detail::cpoly_derivative(p));
    detail::CPoly squarefree = detail::cpoly_divmod(p, g).first;
    return (int)squarefree.size() - 1 + at_infinity;
}

} // namespace guni
