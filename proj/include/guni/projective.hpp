#pragma once

#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/matrix.hpp"

namespace guni {

// Element of PGL_n over a cyclotomic field.  The stored lift is canonical:
// the first nonzero entry in row-major order is scaled to 1, so projective
// equality is plain matrix equality.
class ProjElement {
  public:
    ProjElement() = default;

    explicit ProjElement(Matrix lift) : mat_(std::move(lift)) {
        if (mat_.rows() != mat_.cols())
            raise(ErrorCode::DimensionMismatch, "projective element must be square");
        if (!mat_.is_invertible())
            raise(ErrorCode::SingularGenerator, "projective element must be invertible");
        canonicalize();
    }

    int n() const { return mat_.rows(); }
    const Matrix& lift() const { return mat_; }

    bool is_identity() const { return mat_ == Matrix::identity(mat_.rows()); }

    friend ProjElement operator*(const ProjElement& a, const ProjElement& b) {
        ProjElement out;
        out.mat_ = a.mat_ * b.mat_;
        out.canonicalize();
        return out;
    }

    ProjElement inverse() const {
        ProjElement out;
        out.mat_ = mat_.inverse();
        out.canonicalize();
        return out;
    }

    friend bool operator==(const ProjElement& a, const ProjElement& b) { return a.mat_ == b.mat_; }
    friend bool operator!=(const ProjElement& a, const ProjElement& b) { return !(a == b); }
    friend bool operator<(const ProjElement& a, const ProjElement& b) {
        return Matrix::compare(a.mat_, b.mat_) < 0;
    }

    ProjElement promoted(long order) const {
        ProjElement out;
        out.mat_ = mat_.promoted(order);
        return out;
    }

    std::string str() const { return mat_.str(); }

  private:
    void canonicalize() {
        for (int i = 0; i < mat_.rows(); ++i)
            for (int j = 0; j < mat_.cols(); ++j)
                if (!mat_.at(i, j).is_zero()) {
                    CycNum inv = mat_.at(i, j).inverse();
                    for (int r = 0; r < mat_.rows(); ++r)
                        for (int c = 0; c < mat_.cols(); ++c)
                            mat_.at(r, c) = inv * mat_.at(r, c);
                    mat_.unify_order();
                    return;
                }
        raise(ErrorCode::SingularGenerator, "zero matrix has no projective class");
    }

    Matrix mat_;
};

struct ProjectiveOrder {
    long order;    // least m >= 1 with lift^m scalar
    CycNum scalar; // the scalar gamma with lift^m = gamma * I
};

// Least m with g^m scalar, together with the scalar of the canonical lift.
inline ProjectiveOrder projective_order(const ProjElement& g, long cap = 51840) {
    Matrix p = g.lift();
    for (long m = 1; m <= cap; ++m) {
        if (p.is_scalar()) return {m, p.at(0, 0)};
        p = p * g.lift();
    }
    raise(ErrorCode::CapExceeded, "projective order exceeds cap");
}

// True when the commutator of the two elements is scalar, i.e. the images
// commute in PGL_n.  Lifts of commuting projective elements need not
// commute as matrices.
inline bool projectively_commute(const ProjElement& a, const ProjElement& b) {
    return a * b == b * a;
}

} // namespace guni
