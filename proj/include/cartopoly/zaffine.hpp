#pragma once

// Integral affine transformations of the plane: elements of AGL(2;Z), i.e.
// an integer 2x2 matrix of determinant +-1 together with a rational
// translation, plus the vertical subgroup Vert(2;Z) of maps fixing every
// vertical line setwise.

#include <array>
#include <optional>
#include <stdexcept>

#include "cartopoly/rat.hpp"

namespace carto {

struct IntMat2 {
    long long a = 1, b = 0;  // row 0
    long long c = 0, d = 1;  // row 1

    long long det() const { return a * d - b * c; }

    IntMat2 operator*(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const IntMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const IntMat2& o) const { return !(*this == o); }
};

// A(p) for a rational point p.
RatPt mat_apply(const IntMat2& A, const RatPt& p);

// Element of AGL(2;Z): p |-> A p + t with det(A) = +-1. The constructor
// rejects non-unimodular matrices.
class ZAffine2 {
  public:
    ZAffine2() = default;
    ZAffine2(const IntMat2& linear, const RatPt& translation);

    static ZAffine2 identity() { return {}; }

    const IntMat2& linear() const { return lin_; }
    const RatPt& translation() const { return tr_; }

    RatPt apply(const RatPt& p) const;
    ZAffine2 compose(const ZAffine2& h) const;  // (*this) o h
    ZAffine2 inverse() const;

    bool operator==(const ZAffine2& o) const {
        return lin_ == o.lin_ && tr_ == o.tr_;
    }
    bool operator!=(const ZAffine2& o) const { return !(*this == o); }

  private:
    IntMat2 lin_;
    RatPt tr_{Rat(0), Rat(0)};
};

// Vert(2;Z) data: A = ((1,0),(k,d)) with d = +-1, translation (0,a).
struct VertElement {
    long long k = 0;
    int d = 1;
    Rat a = Rat(0);

    ZAffine2 affine() const;
};

// Decomposes g as a VertElement when g fixes every vertical line setwise
// and preserves the x-coordinate.
std::optional<VertElement> is_vert(const ZAffine2& g);

// Power of the standard shear T = ((1,0),(1,1)).
struct Shear {
    long long power = 0;

    ZAffine2 affine() const;
    Shear operator*(const Shear& o) const { return {power + o.power}; }
};

// Shear conjugated to fix the vertical line {x = x0} pointwise:
// (x, y) |-> (x, y + k (x - x0)).
ZAffine2 centered_shear(const Rat& x0, long long k);

}  // namespace carto
