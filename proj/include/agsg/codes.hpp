#ifndef AGSG_CODES_HPP
#define AGSG_CODES_HPP

#include <optional>

#include "agsg/semigroup.hpp"

namespace agsg {

/// Two-point evaluation code: rows are the basis witnesses of R(m,n)
/// evaluated at the chosen rational points.
struct EvalCode {
    Curve curve;
    long m = 0, n = 0;
    std::vector<AffinePoint> points;
    std::vector<std::vector<Felt>> genMatrix;  // k x N, full rank
    int k = 0;
    std::optional<long> dLower;  // N - m - n when positive
    std::optional<long> dExact;
    bool trivial = false;

    long N() const { return static_cast<long>(points.size()); }
    /// Generator matrix as CSV of field-element texts.
    std::string csv() const;
};

/// All affine rational points except the designated places P and Q.
std::vector<AffinePoint> default_points(const Curve& curve);

/// Build the code from a precomputed view and basis (box must cover m, n).
EvalCode build_code(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                    const std::vector<WitnessedPoint>& basis, long m, long n,
                    const std::vector<AffinePoint>& points);

/// Convenience form; computes the semigroup structure internally.
EvalCode build_code(const Curve& curve, long m, long n, const std::vector<AffinePoint>& points);

/// Exact minimum distance by enumerating all q^k - 1 nonzero codewords,
/// in q-ary reflected Gray order so each step updates one row multiple.
/// Throws TooLarge past the cap.
long min_distance(const EvalCode& code, long long cap = 1LL << 20);

struct PureGapRow {
    GridPoint pureGap, reference;  // reference is a non-pure point with the same m+n
    long N = 0;
    int kPure = 0, kRef = 0;
    std::optional<long> dLowerPure, dLowerRef, dExactPure, dExactRef;
};

struct PureGapTable {
    std::vector<PureGapRow> rows;
    std::string note;  // set when there are no pure gaps
    std::string ascii() const;
};

/// For each pure gap (m,n), build the code there and at a matched
/// non-pure reference with the same m+n, and tabulate the parameters.
/// dExact is filled only when the enumeration cap allows.
PureGapTable pure_gap_experiment(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                 const std::vector<AffinePoint>& points, long long distance_cap = 1LL << 18);

}  // namespace agsg

#endif
