#include "cartopoly/zaffine.hpp"

namespace carto {

RatPt mat_apply(const IntMat2& A, const RatPt& p) {
    return {rat_ll(A.a) * p.x + rat_ll(A.b) * p.y, rat_ll(A.c) * p.x + rat_ll(A.d) * p.y};
}

ZAffine2::ZAffine2(const IntMat2& linear, const RatPt& translation)
    : lin_(linear), tr_(translation) {
    long long det = lin_.det();
    if (det != 1 && det != -1)
        throw std::invalid_argument("ZAffine2: determinant must be +-1, got " +
                                    std::to_string(det));
}

RatPt ZAffine2::apply(const RatPt& p) const {
    RatPt q = mat_apply(lin_, p);
    return {q.x + tr_.x, q.y + tr_.y};
}

ZAffine2 ZAffine2::compose(const ZAffine2& h) const {
    RatPt t = mat_apply(lin_, h.tr_);
    return {lin_ * h.lin_, {t.x + tr_.x, t.y + tr_.y}};
}

ZAffine2 ZAffine2::inverse() const {
    long long det = lin_.det();
    IntMat2 inv{det * lin_.d, -det * lin_.b, -det * lin_.c, det * lin_.a};
    RatPt t = mat_apply(inv, tr_);
    return {inv, {-t.x, -t.y}};
}

ZAffine2 VertElement::affine() const {
    if (d != 1 && d != -1) throw std::invalid_argument("VertElement: d must be +-1");
    return {IntMat2{1, 0, k, d}, {Rat(0), a}};
}

std::optional<VertElement> is_vert(const ZAffine2& g) {
    const IntMat2& A = g.linear();
    if (A.a != 1 || A.b != 0) return std::nullopt;
    if (A.d != 1 && A.d != -1) return std::nullopt;
    if (g.translation().x != 0) return std::nullopt;
    return VertElement{A.c, static_cast<int>(A.d), g.translation().y};
}

ZAffine2 Shear::affine() const {
    return {IntMat2{1, 0, power, 1}, {Rat(0), Rat(0)}};
}

ZAffine2 centered_shear(const Rat& x0, long long k) {
    return {IntMat2{1, 0, k, 1}, {Rat(0), rat_ll(-k) * x0}};
}

}  // namespace carto
