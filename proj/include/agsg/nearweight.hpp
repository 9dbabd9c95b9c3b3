#ifndef AGSG_NEARWEIGHT_HPP
#define AGSG_NEARWEIGHT_HPP

#include <optional>
#include <string>
#include <vector>

#include "agsg/curve.hpp"

namespace agsg {

/// Extended integer: Z together with -inf (weight of 0) and +inf
/// (valuation of 0). The two sentinels are distinct on purpose.
class ExtInt {
   public:
    static ExtInt neg_inf() { return ExtInt(Kind::NegInf, 0); }
    static ExtInt pos_inf() { return ExtInt(Kind::PosInf, 0); }
    static ExtInt of(long v) { return ExtInt(Kind::Finite, v); }

    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    long value() const {
        if (!is_finite()) throw DomainError("extended integer is not finite");
        return v_;
    }

    ExtInt operator+(const ExtInt& o) const;
    bool operator==(const ExtInt& o) const { return kind_ == o.kind_ && (kind_ != Kind::Finite || v_ == o.v_); }
    bool operator!=(const ExtInt& o) const { return !(*this == o); }
    bool operator<(const ExtInt& o) const;
    bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

    std::string str() const;

   private:
    enum class Kind { NegInf, Finite, PosInf };
    ExtInt(Kind k, long v) : kind_(k), v_(v) {}
    Kind kind_;
    long v_;
};

/// Valuation-derived near weight at one of the two designated places:
/// rho(f) = -inf for f = 0, else max(0, -v(f)).
class NearWeight {
   public:
    NearWeight(const Curve& curve, const Place& place);

    const Curve& curve() const { return curve_; }
    const Place& place() const { return place_; }

    ExtInt rho(const Func& f) const;
    /// f is in M_rho, i.e. nonzero with rho(f) > 0.
    bool in_M(const Func& f) const {
        if (f.is_zero()) return false;
        ExtInt r = rho(f);
        return r.is_finite() && r.value() > 0;
    }

    /// Lemma-4.3 reducer: lambda with rho(f*(g-lambda)) < rho(f).
    /// Requires rho(f) > 0 and rho(g) = 0.
    Felt find_reducer(const Func& f, const Func& g) const;

    /// rho-tilde: rho(fg) - rho(g) for the first g in the pool with
    /// fg in M; extends the pool by powers of a canonical pole element.
    long tilde_rho(const Func& f, const std::vector<Func>& search_pool = {}) const;

    /// The extension of -rho-tilde to fractions num/den of R-elements.
    ExtInt v_rho(const Func& num, const Func& den) const;

    /// A built-in element of M (pole at this place only); used to extend
    /// tilde_rho searches. Unavailable on custom backends.
    Func pole_element() const;

   private:
    Curve curve_;
    Place place_;
};

struct AxiomWitness {
    std::string f, g, h;  // parseable function texts; empty when unused
    std::string values;
};

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    long checks = 0;
    std::optional<AxiomWitness> witness;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass = true;
    bool insufficient_pool = false;
    long gcd_rho = 0;    // gcd of rho over pool elements in M (reported, never rescaled)
    long gcd_sigma = 0;
    uint64_t seed = 0;
    std::string to_json() const;
};

struct CheckOptions {
    long triple_cap = 200000;    // exhaustive N3 triples up to this many
    long random_triples = 2000;
    uint64_t seed = 1;
    int mutate_index = -1;       // test hook: add 1 to rho of pool[i]
    long honest_subsample = 500; // products re-checked through the full valuation path
};

/// Check N0..N5 for both weights plus well agreement on a pool of
/// R-elements. A fail verdict always carries a witness.
AxiomReport check_axioms(const NearWeight& wrho, const NearWeight& wsigma, const std::vector<Func>& pool,
                         const CheckOptions& opt = {});

struct ReconstructionMismatch {
    std::string num, den;
    long v_rho_val, v_backend;
    std::string which;  // "P" or "Q"
};

struct ReconstructionReport {
    bool pass = true;
    long checked = 0;
    std::vector<ReconstructionMismatch> mismatches;
};

/// Executable form of the reconstruction theorem: the valuation rebuilt
/// from rho-tilde must equal the backend valuation on every sample.
ReconstructionReport verify_reconstruction(const NearWeight& wrho, const NearWeight& wsigma,
                                           const std::vector<std::pair<Func, Func>>& samples);

/// Deterministic sample of R: all products of <= max_factors factors
/// from {x, y, x/y, x+c, y+c} (projective line: {x, 1/x, x+c}),
/// filtered to non-negative valuation at every affine rational place
/// outside {P, Q}, deduplicated.
std::vector<Func> default_pool(const Curve& curve, int max_factors = 3);

}  // namespace agsg

#endif
