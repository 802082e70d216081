#ifndef AGFILT_CURVE_HPP
#define AGFILT_CURVE_HPP

#include <compare>
#include <map>
#include <memory>
#include <vector>

#include "agfilt/gf.hpp"

namespace agfilt {

enum class CurveKind { ProjectiveLine, Elliptic };

/// A rational point: either the distinguished point at infinity or an affine
/// point (x, y). Points on the projective line carry only x (y is fixed to 0).
class CurvePoint {
  public:
    static CurvePoint infinity(const FieldSpecPtr& field);
    static CurvePoint affine(FieldElement x);  // projective line
    static CurvePoint affine(FieldElement x, FieldElement y);

    bool is_infinity() const { return infinity_; }
    bool is_affine() const { return !infinity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;
    const FieldSpecPtr& field() const { return field_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
    /// Canonical order: infinity first, then lexicographic by (x, y).
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b);

  private:
    CurvePoint(FieldSpecPtr field, bool infinity, FieldElement x, FieldElement y)
        : field_(std::move(field)), infinity_(infinity), x_(std::move(x)), y_(std::move(y)) {}

    FieldSpecPtr field_;
    bool infinity_ = true;
    FieldElement x_, y_;
};

class CurveSpec;
using CurveSpecPtr = std::shared_ptr<const CurveSpec>;

/// The projective line or a short-Weierstrass elliptic curve y^2 = x^3 + ax + b
/// over GF(q) with char != 2, 3 and 4a^3 + 27b^2 != 0.
class CurveSpec : public std::enable_shared_from_this<CurveSpec> {
  public:
    CurveKind kind() const { return kind_; }
    const FieldSpecPtr& field() const { return field_; }
    const FieldElement& a() const;
    const FieldElement& b() const;
    int genus() const { return kind_ == CurveKind::Elliptic ? 1 : 0; }

    bool on_curve(const CurvePoint& pt) const;

    /// All GF(q)-rational points: infinity first, then affine points in
    /// lexicographic (x, y) order.
    std::vector<CurvePoint> rational_points() const;
    std::vector<CurvePoint> affine_points() const;

    /// Chord-tangent group law; elliptic curves only. Infinity is the identity.
    CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint ec_neg(const CurvePoint& p) const;

    friend bool operator==(const CurveSpec& a, const CurveSpec& b);

  private:
    friend CurveSpecPtr projective_line(FieldSpecPtr);
    friend CurveSpecPtr elliptic_curve(FieldSpecPtr, FieldElement, FieldElement);
    CurveSpec(CurveKind kind, FieldSpecPtr field, FieldElement a, FieldElement b)
        : kind_(kind), field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

    CurveKind kind_;
    FieldSpecPtr field_;
    FieldElement a_, b_;
};

CurveSpecPtr projective_line(FieldSpecPtr field);
CurveSpecPtr elliptic_curve(FieldSpecPtr field, FieldElement a, FieldElement b);

/// An integer formal sum of rational points.
class Divisor {
  public:
    Divisor() = default;
    static Divisor of_point(const CurvePoint& pt, int multiplicity = 1);

    int degree() const;
    bool is_zero() const { return support_.empty(); }
    bool is_effective() const;
    int multiplicity(const CurvePoint& pt) const;
    const std::map<CurvePoint, int>& support() const { return support_; }

    Divisor& add(const CurvePoint& pt, int multiplicity);
    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend Divisor operator-(const Divisor& a, const Divisor& b);
    friend bool operator==(const Divisor& a, const Divisor& b);

    /// The partial order D < D' iff D' - D is effective and nonzero.
    static bool precedes(const Divisor& a, const Divisor& b);

  private:
    std::map<CurvePoint, int> support_;  // nonzero multiplicities only
};

}  // namespace agfilt

#endif
