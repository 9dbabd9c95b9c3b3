#ifndef AGSG_POLY_HPP
#define AGSG_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "agsg/gf.hpp"

namespace agsg {

/// Exponent pair (i, j) for x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;
    bool operator==(const Mono&) const = default;
    /// Graded lexicographic with y > x.
    bool operator<(const Mono& o) const {
        if (i + j != o.i + o.j) return i + j < o.i + o.j;
        return j < o.j;
    }
};

/// Bivariate polynomial over a small finite field. Sparse map keyed by
/// the fixed monomial order; zero coefficients are never stored.
class BiPoly {
   public:
    explicit BiPoly(const Field& f) : field_(f) {}
    BiPoly(const Field& f, const Felt& c) : field_(f) { set(0, 0, c); }

    static BiPoly monomial(const Field& f, int i, int j, const Felt& c) {
        BiPoly p(f);
        p.set(i, j, c);
        return p;
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }

    Felt coeff(int i, int j) const;
    void set(int i, int j, const Felt& c);
    void add_term(int i, int j, const Felt& c);

    const std::map<Mono, Felt>& terms() const { return terms_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Felt& c) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    /// Largest monomial in the grlex(y > x) order; polynomial must be nonzero.
    std::pair<Mono, Felt> leading() const;

    int deg_x() const;
    int deg_y() const;
    int total_deg() const;

    Felt eval(const Felt& x, const Felt& y) const;
    /// Substitute x -> x + a, y -> y + b.
    BiPoly shifted(const Felt& a, const Felt& b) const;
    /// Partial derivative in y.
    BiPoly dy() const;

    /// True if every term has j = 0.
    bool is_x_only() const;

    /// Divide out the largest common x^i y^j factor; returns (i, j).
    Mono strip_monomial();

    std::string str() const;

   private:
    Field field_;
    std::map<Mono, Felt> terms_;
};

/// gcd of two nonzero polynomials in x alone (j = 0 everywhere), monic.
BiPoly gcd_in_x(const BiPoly& a, const BiPoly& b);

/// Exact division; throws DomainError if not divisible. Both x-only.
BiPoly div_in_x(const BiPoly& a, const BiPoly& b);

}  // namespace agsg

#endif
