#ifndef AGSG_SERIES_HPP
#define AGSG_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "agsg/gf.hpp"

namespace agsg {

/// Truncated Laurent series in a local uniformizer t. Coefficients are
/// known exactly for every exponent below known_until(); everything below
/// base() is implicitly zero.
class Series {
   public:
    /// The zero series, known through exponents < known_until.
    Series(const Field& f, long known_until) : field_(f), base_(known_until) {}

    static Series monomial(const Field& f, const Felt& c, long e, long known_until);

    const Field& field() const { return field_; }
    long known_until() const { return base_ + static_cast<long>(c_.size()); }
    long base() const { return base_; }

    /// Exponent of the first nonzero known coefficient, if any.
    std::optional<long> lead() const;
    Felt lead_coeff() const;  // requires lead()
    bool known_zero() const { return !lead().has_value(); }

    Felt coeff(long e) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Felt& c) const;
    /// Multiplicative inverse; requires a nonzero known coefficient.
    Series inverse() const;
    /// Drop knowledge at and above the given exponent.
    Series truncated(long until) const;

    std::string str(const std::string& var = "t") const;

   private:
    void trim();

    Field field_;
    long base_ = 0;               // exponent of c_[0]
    std::vector<Felt> c_;         // coefficients of t^base_ .. t^(known_until-1)
};

}  // namespace agsg

#endif
