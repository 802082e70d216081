#include "agfilt/curve.hpp"

#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

namespace {

void require_field(const FieldSpecPtr& a, const FieldSpecPtr& b) {
    if (!a || !b || (a != b && !(*a == *b))) throw FieldMismatch("point field differs from curve field");
}

}  // namespace

CurvePoint CurvePoint::infinity(const FieldSpecPtr& field) {
    return CurvePoint(field, true, field->zero(), field->zero());
}

CurvePoint CurvePoint::affine(FieldElement x) {
    auto field = x.spec();
    auto y = field->zero();
    return CurvePoint(std::move(field), false, std::move(x), std::move(y));
}

CurvePoint CurvePoint::affine(FieldElement x, FieldElement y) {
    auto field = x.spec();
    return CurvePoint(std::move(field), false, std::move(x), std::move(y));
}

const FieldElement& CurvePoint::x() const {
    if (infinity_) throw std::logic_error("point at infinity has no affine coordinates");
    return x_;
}

const FieldElement& CurvePoint::y() const {
    if (infinity_) throw std::logic_error("point at infinity has no affine coordinates");
    return y_;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ != b.infinity_) return false;
    if (a.infinity_) return true;
    return a.x_ == b.x_ && a.y_ == b.y_;
}

std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ != b.infinity_) return a.infinity_ ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (a.infinity_) return std::strong_ordering::equal;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
}

const FieldElement& CurveSpec::a() const {
    if (kind_ != CurveKind::Elliptic) throw std::logic_error("projective line has no coefficients");
    return a_;
}

const FieldElement& CurveSpec::b() const {
    if (kind_ != CurveKind::Elliptic) throw std::logic_error("projective line has no coefficients");
    return b_;
}

bool CurveSpec::on_curve(const CurvePoint& pt) const {
    require_field(pt.field(), field_);
    if (pt.is_infinity()) return true;
    if (kind_ == CurveKind::ProjectiveLine) return true;
    const auto& x = pt.x();
    const auto& y = pt.y();
    return y * y == x * x * x + a_ * x + b_;
}

std::vector<CurvePoint> CurveSpec::affine_points() const {
    std::vector<CurvePoint> pts;
    const auto elements = field_->enumerate();
    if (kind_ == CurveKind::ProjectiveLine) {
        pts.reserve(elements.size());
        for (const auto& x : elements) pts.push_back(CurvePoint::affine(x));
        return pts;
    }
    // bucket square roots once, then sweep x
    std::vector<std::vector<std::uint64_t>> roots(field_->q());
    for (const auto& y : elements) roots[(y * y).index()].push_back(y.index());
    for (const auto& x : elements) {
        const auto rhs = x * x * x + a_ * x + b_;
        for (auto yi : roots[rhs.index()]) pts.push_back(CurvePoint::affine(x, field_->from_index(yi)));
    }
    return pts;
}

std::vector<CurvePoint> CurveSpec::rational_points() const {
    std::vector<CurvePoint> pts{CurvePoint::infinity(field_)};
    auto aff = affine_points();
    pts.insert(pts.end(), aff.begin(), aff.end());
    return pts;
}

CurvePoint CurveSpec::ec_neg(const CurvePoint& p) const {
    if (kind_ != CurveKind::Elliptic) throw std::invalid_argument("group law requires an elliptic curve");
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y());
}

CurvePoint CurveSpec::ec_add(const CurvePoint& p, const CurvePoint& q) const {
    if (kind_ != CurveKind::Elliptic) throw std::invalid_argument("group law requires an elliptic curve");
    if (!on_curve(p)) throw PointNotOnCurve("left summand is not on the curve");
    if (!on_curve(q)) throw PointNotOnCurve("right summand is not on the curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const auto& x1 = p.x();
    const auto& y1 = p.y();
    const auto& x2 = q.x();
    const auto& y2 = q.y();
    if (x1 == x2 && (y1 + y2).is_zero()) return CurvePoint::infinity(field_);

    FieldElement lambda;
    if (p == q) {
        const auto three = field_->from_int(3);
        const auto two = field_->from_int(2);
        lambda = (three * x1 * x1 + a_) * (two * y1).inv();
    } else {
        lambda = (y2 - y1) * (x2 - x1).inv();
    }
    const auto x3 = lambda * lambda - x1 - x2;
    const auto y3 = lambda * (x1 - x3) - y1;
    return CurvePoint::affine(x3, y3);
}

bool operator==(const CurveSpec& a, const CurveSpec& b) {
    if (a.kind_ != b.kind_ || !(*a.field_ == *b.field_)) return false;
    if (a.kind_ == CurveKind::ProjectiveLine) return true;
    return a.a_ == b.a_ && a.b_ == b.b_;
}

CurveSpecPtr projective_line(FieldSpecPtr field) {
    auto a = field->zero();
    auto b = field->zero();
    return CurveSpecPtr(
        new CurveSpec(CurveKind::ProjectiveLine, std::move(field), std::move(a), std::move(b)));
}

CurveSpecPtr elliptic_curve(FieldSpecPtr field, FieldElement a, FieldElement b) {
    require_field(a.spec(), field);
    require_field(b.spec(), field);
    if (field->p() == 2 || field->p() == 3)
        throw UnsupportedCharacteristic("short Weierstrass form requires char != 2, 3");
    const auto disc = field->from_int(4) * a * a * a + field->from_int(27) * b * b;
    if (disc.is_zero()) throw SingularCurve("discriminant 4a^3 + 27b^2 vanishes");
    return CurveSpecPtr(new CurveSpec(CurveKind::Elliptic, std::move(field), std::move(a), std::move(b)));
}

Divisor Divisor::of_point(const CurvePoint& pt, int multiplicity) {
    Divisor d;
    d.add(pt, multiplicity);
    return d;
}

int Divisor::degree() const {
    int deg = 0;
    for (const auto& [pt, m] : support_) deg += m;
    return deg;
}

bool Divisor::is_effective() const {
    for (const auto& [pt, m] : support_)
        if (m < 0) return false;
    return true;
}

int Divisor::multiplicity(const CurvePoint& pt) const {
    auto it = support_.find(pt);
    return it == support_.end() ? 0 : it->second;
}

Divisor& Divisor::add(const CurvePoint& pt, int multiplicity) {
    if (multiplicity == 0) return *this;
    auto [it, inserted] = support_.try_emplace(pt, 0);
    it->second += multiplicity;
    if (it->second == 0) support_.erase(it);
    return *this;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [pt, m] : b.support_) out.add(pt, m);
    return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [pt, m] : b.support_) out.add(pt, -m);
    return out;
}

bool operator==(const Divisor& a, const Divisor& b) { return a.support_ == b.support_; }

bool Divisor::precedes(const Divisor& a, const Divisor& b) {
    const Divisor diff = b - a;
    return !diff.is_zero() && diff.is_effective();
}

}  // namespace agfilt
