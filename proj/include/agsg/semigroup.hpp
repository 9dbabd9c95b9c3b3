#ifndef AGSG_SEMIGROUP_HPP
#define AGSG_SEMIGROUP_HPP

#include <map>
#include <utility>
#include <vector>

#include "agsg/nearweight.hpp"

namespace agsg {

/// A point of N0^2; a = rho-coordinate, b = sigma-coordinate.
struct GridPoint {
    long a = 0, b = 0;
    auto operator<=>(const GridPoint&) const = default;
    GridPoint operator+(const GridPoint& o) const { return {a + o.a, b + o.b}; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline GridPoint lub(const GridPoint& x, const GridPoint& y) { return {std::max(x.a, y.a), std::max(x.b, y.b)}; }

/// The weight pair (rho(f), sigma(f)); f must be nonzero.
GridPoint pair_of(const NearWeight& wrho, const NearWeight& wsigma, const Func& f);

/// lambda*f + mu*g with lambda, mu in {0,1} whose weight pair is exactly
/// the lub of the input pairs; tries (1,0), (0,1), (1,1) and verifies.
std::pair<Func, GridPoint> realize_lub(const NearWeight& wrho, const NearWeight& wsigma, const Func& f, const Func& g);

/// Monomial products spanning R(m,n) for all m,n <= B on the built-in
/// backends (throws DomainError for custom curves: supply a pool).
std::vector<Func> spanning_pool(const Curve& curve, long B);

/// Exact dim R(m,n) as the rank of truncated expansion vectors at Q of
/// the pool elements with pole orders <= m at P and <= n at Q. The
/// window [-B, 2B] is exact: a nonzero element of R(B,B) has at most
/// 2B zeros at Q, so distinct span elements have distinct truncations.
class DimOracle {
   public:
    DimOracle(const NearWeight& wrho, const NearWeight& wsigma, std::vector<Func> pool, long B);

    int dim(long m, long n) const;  // m, n >= 0
    long bound() const { return B_; }

    struct Row {
        Func f;
        long vP, vQ;
        std::vector<Felt> coeffs;  // expansion coefficients, exponents -B .. 2B
    };
    const std::vector<Row>& rows() const { return rows_; }
    const Field& field() const { return field_; }

   private:
    long B_;
    Field field_;
    std::vector<Row> rows_;
    mutable std::map<std::pair<long, long>, int> memo_;
};

/// H truncated to [0,B]^2 together with the structure derived from it.
struct SemigroupView {
    long bound = 0;
    std::vector<std::vector<bool>> members;  // [m][n], 0 <= m,n <= bound
    std::vector<std::vector<int>> dims;      // dim R(m,n), 0 <= m,n <= bound
    std::vector<GridPoint> gapSet;           // box \ members, sorted
    std::vector<GridPoint> gammaTilde;       // {(m, y_H(m)) : m a gap of the x-projection}
    std::vector<long> genX, genY;            // minimal generators of the projections
    GridPoint conductor;                     // smallest corner dominating every gap
    int genus = 0;

    bool member(long m, long n) const { return m >= 0 && n >= 0 && m <= bound && n <= bound && members[m][n]; }
    int dim(long m, long n) const { return dims[m][n]; }
    std::string ascii() const;  // rows n = bound..0; '#' member, '.' gap
};

/// Membership over the box by the dimension oracle: (m,n) is in H iff
/// dim R(m,n) exceeds both dim R(m-1,n) and dim R(m,n-1). The pool is
/// checked for saturation against Riemann-Roch before use.
SemigroupView compute_H(const NearWeight& wrho, const NearWeight& wsigma, long B,
                        const std::vector<Func>& pool = {});

/// x_H(n) = min{m : (m,n) in H}; y_H(m) symmetrically.
long x_of(const SemigroupView& view, long n);
long y_of(const SemigroupView& view, long m);

/// gaps(H) as the union of Delta(a) over a in gammaTilde, within the box.
std::vector<GridPoint> gaps_via_gamma(const std::vector<GridPoint>& gammaTilde, long B);
inline std::vector<GridPoint> gaps_via_gamma(const SemigroupView& v) { return gaps_via_gamma(v.gammaTilde, v.bound); }

/// Pure gaps as the union of Delta(a) cap Delta(b) over pairs a != b.
std::vector<GridPoint> pure_gaps(const std::vector<GridPoint>& gammaTilde);
inline std::vector<GridPoint> pure_gaps(const SemigroupView& v) { return pure_gaps(v.gammaTilde); }

/// Independent cross-check: a gap (m,n) with m,n >= 1 is pure iff
/// dim R(m,n) equals both dim R(m-1,n) and dim R(m,n-1); axis gaps are
/// never pure (removing the other place always drops the dimension).
std::vector<GridPoint> pure_gaps_oracle(const SemigroupView& view);

struct GammaSets {
    std::vector<GridPoint> tilde;  // finite
    std::vector<GridPoint> gamma;  // tilde plus both axes of H, truncated to the box
    std::vector<GridPoint> plus;   // tilde plus axis generator points, finite
};
GammaSets gamma_sets(const SemigroupView& view);

/// {lub(a,b) : a,b in gamma} as a membership grid over [0,B]^2.
std::vector<std::vector<bool>> lub_closure(const std::vector<GridPoint>& gamma, long B);

struct WitnessedPoint {
    GridPoint point;
    Func witness;
};

/// One witness per point of Gamma within the box, tie-broken by minimal
/// (total representation degree, then text form); witnesses verified
/// linearly independent.
std::vector<WitnessedPoint> build_basis(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                        const std::vector<Func>& pool);

/// Coefficients of f in the basis, by repeated leading-point
/// elimination; order matches the basis. f = 0 gives all zeros.
std::vector<Felt> reduce_element(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                 const std::vector<WitnessedPoint>& basis, const Func& f);

/// sum coeffs[i] * basis[i].witness.
Func combine(const Curve& curve, const std::vector<WitnessedPoint>& basis, const std::vector<Felt>& coeffs);

struct GenerationReport {
    bool pass = true;
    int degree_cap = 0;
    std::vector<WitnessedPoint> generators;  // witnesses for gammaPlus
    std::vector<GridPoint> missing;          // members not reached by the subalgebra
};

/// Certify at this truncation that the Gamma+ witnesses generate R as an
/// algebra: the lub closure of the weight pairs of their products of
/// <= degree_cap factors must reproduce the membership grid.
GenerationReport verify_generation(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                   long B, int degree_cap = 8);

struct IdealReport {
    long bound = 0;
    std::vector<std::vector<bool>> members;  // H(I) within the box
    std::vector<GridPoint> exceptionalX;     // H_x points of H outside H(I)
    std::vector<GridPoint> exceptionalY;
    bool stable = false;  // exceptional sets stopped growing before the box edge
};

/// Semigroup of the principal ideal I = (f): weight pairs of f*g over a
/// spanning pool, closed under lub. Throws BoxTooSmall when the
/// exceptional axis sets are still growing at the box edge.
IdealReport ideal_semigroup(const NearWeight& wrho, const NearWeight& wsigma, const Func& f,
                            const SemigroupView& view, long B);

}  // namespace agsg

#endif
