#ifndef AGSG_GF_HPP
#define AGSG_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "agsg/errors.hpp"

namespace agsg {

class Field;

namespace detail {
struct FieldTables;
}

/// Element of a small finite field GF(p^k), stored as the index
/// sum(c_i * p^i) of its polynomial representation (c_0,...,c_{k-1}).
class Felt {
   public:
    Felt() = default;

    Felt operator+(const Felt& o) const;
    Felt operator-(const Felt& o) const;
    Felt operator-() const;
    Felt operator*(const Felt& o) const;
    Felt operator/(const Felt& o) const;
    Felt& operator+=(const Felt& o) { return *this = *this + o; }
    Felt& operator-=(const Felt& o) { return *this = *this - o; }
    Felt& operator*=(const Felt& o) { return *this = *this * o; }

    bool operator==(const Felt& o) const;
    bool operator!=(const Felt& o) const { return !(*this == o); }

    Felt inv() const;
    Felt pow(long long e) const;

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    uint32_t index() const { return idx_; }
    std::vector<int> coeffs() const;

    /// Polynomial text in the generator "w", e.g. "w+1".
    std::string str() const;

    Field field() const;

   private:
    friend class Field;
    Felt(std::shared_ptr<const detail::FieldTables> t, uint32_t idx) : tab_(std::move(t)), idx_(idx) {}

    std::shared_ptr<const detail::FieldTables> tab_;
    uint32_t idx_ = 0;
};

/// A finite field GF(p^k) with a fixed monic irreducible modulus.
/// Immutable and cheap to copy; multiplication runs on exp/log tables.
class Field {
   public:
    /// Built-in modulus for the given (p, k); p prime, p^k <= 2^16.
    Field(int p, int k);
    /// Explicit monic modulus (coefficients c_0..c_k, c_k = 1),
    /// verified irreducible by trial division.
    Field(int p, int k, const std::vector<int>& modulus);

    int p() const;
    int k() const;
    uint32_t card() const;
    const std::vector<int>& modulus() const;

    Felt zero() const;
    Felt one() const;
    /// The class of t in GF(p)[t]/(modulus), printed as "w".
    Felt gen() const;

    Felt from_index(uint32_t idx) const;
    Felt from_int(long long n) const;  // image of an integer, i.e. n mod p
    Felt from_coeffs(const std::vector<int>& c) const;

    /// All p^k elements; the first two are 0 and 1.
    std::vector<Felt> elements() const;

    Felt parse(const std::string& text) const;

    bool same(const Field& o) const { return tab_ == o.tab_; }

   private:
    friend class Felt;
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : tab_(std::move(t)) {}

    std::shared_ptr<const detail::FieldTables> tab_;
};

/// The field of order q with the built-in modulus; q must be a prime
/// power.
Field field_of_order(int q);

/// Rank of a matrix over the field, by exact Gaussian elimination.
/// Rows may have differing lengths; missing entries are zero.
int rank_of(std::vector<std::vector<Felt>> rows, const Field& field);

/// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<int> rref(std::vector<std::vector<Felt>>& rows, const Field& field);

}  // namespace agsg

#endif
