#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/matrix.hpp"
#include "guni/projective.hpp"

namespace guni {

// Multivariate polynomial over Q(zeta_N), stored sparsely as exponent
// vector -> coefficient.  Zero coefficients are never stored, so equality
// is map equality.
class SparsePoly {
  public:
    using Terms = std::map<std::vector<int>, CycNum>;

    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly monomial(int nvars, std::vector<int> exps, CycNum coeff) {
        SparsePoly p(nvars);
        p.add_term(std::move(exps), std::move(coeff));
        return p;
    }

    static SparsePoly variable(int nvars, int i, int power = 1) {
        std::vector<int> e(nvars, 0);
        e[i] = power;
        return monomial(nvars, std::move(e), CycNum(1));
    }

    static SparsePoly constant(int nvars, CycNum c) {
        return monomial(nvars, std::vector<int>(nvars, 0), std::move(c));
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, CycNum coeff) {
        if ((int)exps.size() != nvars_)
            raise(ErrorCode::DimensionMismatch, "exponent vector length mismatch");
        if (coeff.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }

    friend SparsePoly operator*(const CycNum& c, const SparsePoly& p) {
        SparsePoly out(p.nvars_);
        if (c.is_zero()) return out;
        for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, c * coeff);
        return out;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    SparsePoly pow(int e) const {
        SparsePoly out = constant(nvars_, CycNum(1));
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    SparsePoly derivative(int var) const {
        SparsePoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            std::vector<int> d = e;
            --d[var];
            out.add_term(std::move(d), CycNum((long long)e[var]) * c);
        }
        return out;
    }

    CycNum evaluate(const std::vector<CycNum>& x) const {
        if ((int)x.size() != nvars_) raise(ErrorCode::DimensionMismatch, "evaluation point length");
        CycNum acc(0);
        for (const auto& [e, c] : terms_) {
            CycNum t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * x[i];
            acc += t;
        }
        return acc;
    }

    // Substitution x_i -> sum_j m[i][j] * y_j where y has new_nvars variables.
    SparsePoly substitute(const std::vector<std::vector<CycNum>>& rows, int new_nvars) const {
        if ((int)rows.size() != nvars_)
            raise(ErrorCode::DimensionMismatch, "substitution needs one row per variable");
        std::vector<SparsePoly> images;
        images.reserve(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            SparsePoly img(new_nvars);
            for (int j = 0; j < new_nvars; ++j)
                if (!rows[i][j].is_zero())
                    img.add_term(unit_exp(new_nvars, j), rows[i][j]);
            images.push_back(std::move(img));
        }
        SparsePoly out(new_nvars);
        for (const auto& [e, c] : terms_) {
            SparsePoly term = SparsePoly::constant(new_nvars, c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            out = out + term;
        }
        return out;
    }

    // Coefficient vector with respect to an ordered monomial list.
    std::vector<CycNum> coefficients_on(const std::vector<std::vector<int>>& monomials) const {
        std::vector<CycNum> out(monomials.size(), CycNum(0));
        Terms rest = terms_;
        for (size_t i = 0; i < monomials.size(); ++i) {
            auto it = rest.find(monomials[i]);
            if (it != rest.end()) {
                out[i] = it->second;
                rest.erase(it);
            }
        }
        if (!rest.empty())
            raise(ErrorCode::DimensionMismatch, "polynomial has terms outside the monomial list");
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ != b.nvars_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin();
        auto jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& var_names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                s += "*";
                s += i < (int)var_names.size() ? var_names[i] : "x" + std::to_string(i + 1);
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

  private:
    static std::vector<int> unit_exp(int n, int j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        return e;
    }

    int nvars_;
    Terms terms_;
};

// All exponent vectors of total degree d in n variables, lexicographic.
inline std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(nvars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current[var] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// The substitution action f |-> f o g^{-1}: a left group action on forms,
// so act(gh, f) = act(g, act(h, f)).  Uses the canonical lift of g.
inline SparsePoly act_on_poly(const ProjElement& g, const SparsePoly& f) {
    if (g.n() != f.nvars())
        raise(ErrorCode::DimensionMismatch, "group element and polynomial sizes differ");
    Matrix inv = g.lift().inverse();
    std::vector<std::vector<CycNum>> rows(inv.rows());
    for (int i = 0; i < inv.rows(); ++i) {
        rows[i].resize(inv.cols());
        for (int j = 0; j < inv.cols(); ++j) rows[i][j] = inv.at(i, j);
    }
    return f.substitute(rows, f.nvars());
}

// Point of projective space with canonical scaling: the first nonzero
// coordinate equals 1, so point equality is coordinate equality.
class ProjPoint {
  public:
    ProjPoint() = default;

    explicit ProjPoint(std::vector<CycNum> coords) : coords_(std::move(coords)) {
        int lead = -1;
        for (size_t i = 0; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) { lead = (int)i; break; }
        if (lead < 0) raise(ErrorCode::BadParameters, "projective point needs a nonzero coordinate");
        CycNum inv = coords_[lead].inverse();
        long order = 1;
        for (auto& c : coords_) {
            c = inv * c;
            order = std::lcm(order, c.order());
        }
        for (auto& c : coords_) c = c.promoted(order);
    }

    const std::vector<CycNum>& coords() const { return coords_; }
    int dim() const { return (int)coords_.size(); }

    ProjPoint apply(const Matrix& m) const { return ProjPoint(m.apply(coords_)); }
    ProjPoint apply(const ProjElement& g) const { return apply(g.lift()); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.coords_.size() != b.coords_.size()) return false;
        for (size_t i = 0; i < a.coords_.size(); ++i)
            if (a.coords_[i] != b.coords_[i]) return false;
        return true;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        for (size_t i = 0; i < std::min(a.coords_.size(), b.coords_.size()); ++i) {
            int c = CycNum::compare(a.coords_[i], b.coords_[i]);
            if (c != 0) return c < 0;
        }
        return a.coords_.size() < b.coords_.size();
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ":";
            s += coords_[i].str();
        }
        return s + ")";
    }

  private:
    std::vector<CycNum> coords_;
};

} // namespace guni
