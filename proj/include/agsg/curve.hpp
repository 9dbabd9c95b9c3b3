#ifndef AGSG_CURVE_HPP
#define AGSG_CURVE_HPP

#include <memory>
#include <string>
#include <vector>

#include "agsg/poly.hpp"
#include "agsg/series.hpp"

namespace agsg {

enum class CurveKind { ProjectiveLine, Hermitian, CustomPlane };

/// A place of degree one: either the place at infinity or an affine
/// point (a, b) where the curve is smooth (E_y(a,b) != 0), with local
/// uniformizer t = x - a.
struct Place {
    bool at_infinity = false;
    Felt x, y;

    bool operator==(const Place& o) const {
        if (at_infinity != o.at_infinity) return false;
        return at_infinity || (x == o.x && y == o.y);
    }
    std::string str() const;
};

struct AffinePoint {
    Felt x, y;
    bool operator==(const AffinePoint&) const = default;
};

class Func;
namespace detail {
struct CurveImpl;
}

/// A function-field backend: the projective line, a Hermitian curve
/// y^q + y = x^(q+1) over GF(q^2), or a user-certified plane curve that
/// is monic in y. Supplies exact valuations at the designated places P
/// and Q and local expansions at affine places.
class Curve {
   public:
    static Curve projective_line(const Field& f);
    static Curve hermitian(int q);
    /// equation must be monic in y; P and Q must be affine smooth points
    /// on the curve (smoothness at P, Q is the caller's certification);
    /// the genus is taken on trust.
    static Curve custom_plane(const Field& f, const BiPoly& equation, const Place& P, const Place& Q, int genus);

    const Field& field() const;
    CurveKind kind() const;
    int q() const;  // Hermitian parameter; 0 otherwise
    int genus() const;
    const BiPoly& equation() const;

    Place placeP() const;
    Place placeQ() const;

    Func x() const;
    Func y() const;  // rejected on the projective line
    Func constant(const Felt& c) const;
    Func zero() const;
    Func one() const;

    /// Parse text like "(x^2 + w*y)/(x)".
    Func parse(const std::string& text) const;

    /// All affine rational points, in a deterministic order.
    std::vector<AffinePoint> rational_points() const;

    bool same(const Curve& o) const { return impl_ == o.impl_; }

   private:
    friend class Func;
    explicit Curve(std::shared_ptr<const detail::CurveImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::CurveImpl> impl_;
};

/// Truncated Laurent expansion of a function at a place.
struct LocalExpansion {
    Place place;
    Series series;

    long lead() const;
    int precision() const { return static_cast<int>(series.known_until() - lead()); }
};

/// Element of the function field: a reduced fraction of bivariate
/// polynomials modulo the curve equation. Denominator is monic under
/// grlex(y > x); common monomial factors and common x-only gcds are
/// cancelled. Equality is decided by cross-multiplication.
class Func {
   public:
    Func(const Curve& curve, const BiPoly& num, const BiPoly& den);

    const Curve& curve() const { return curve_; }
    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;

    Func operator+(const Func& o) const;
    Func operator-(const Func& o) const;
    Func operator-() const;
    Func operator*(const Func& o) const;
    Func operator*(const Felt& c) const;
    Func operator/(const Func& o) const;
    Func inv() const;
    Func pow(long e) const;
    bool operator==(const Func& o) const;
    bool operator!=(const Func& o) const { return !(*this == o); }

    /// Exact valuation at a place; f must be nonzero. Symbolic at the
    /// place at infinity, series-based with automatic precision
    /// escalation at affine places.
    long valuation(const Place& place) const;

    /// Laurent expansion at an affine place, correct through `precision`
    /// retained terms starting at the leading exponent.
    LocalExpansion expand_at(const Place& place, int precision) const;

    /// Value at a rational point distinct from P and Q. Falls back to a
    /// local expansion when the stored denominator vanishes there.
    Felt evaluate(const AffinePoint& pt) const;

    std::string str() const;

   private:
    friend struct detail::CurveImpl;
    Curve curve_;
    BiPoly num_, den_;
};

}  // namespace agsg

#endif
