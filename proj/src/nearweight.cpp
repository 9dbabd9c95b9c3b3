#include "agsg/nearweight.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace agsg {

// ---------------------------------------------------------------- ExtInt

ExtInt ExtInt::operator+(const ExtInt& o) const {
    if (is_neg_inf() || o.is_neg_inf()) {
        if (is_pos_inf() || o.is_pos_inf()) throw DomainError("-inf + +inf is undefined");
        return neg_inf();
    }
    if (is_pos_inf() || o.is_pos_inf()) return pos_inf();
    return of(v_ + o.v_);
}

bool ExtInt::operator<(const ExtInt& o) const {
    if (*this == o) return false;
    if (is_neg_inf() || o.is_pos_inf()) return true;
    if (is_pos_inf() || o.is_neg_inf()) return false;
    return v_ < o.v_;
}

std::string ExtInt::str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "inf";
    return std::to_string(v_);
}

// ---------------------------------------------------------------- NearWeight

NearWeight::NearWeight(const Curve& curve, const Place& place) : curve_(curve), place_(place) {
    if (!(place == curve.placeP() || place == curve.placeQ()))
        throw DomainError("near weights are attached to the designated places P and Q");
}

ExtInt NearWeight::rho(const Func& f) const {
    if (f.is_zero()) return ExtInt::neg_inf();
    long v = f.valuation(place_);
    return ExtInt::of(std::max(0L, -v));
}

Felt NearWeight::find_reducer(const Func& f, const Func& g) const {
    if (f.is_zero() || g.is_zero()) throw DomainError("find_reducer: f and g must be nonzero");
    ExtInt rf = rho(f);
    if (!(ExtInt::of(0) < rf)) throw DomainError("find_reducer: rho(f) must be positive");
    if (rho(g) != ExtInt::of(0)) throw DomainError("find_reducer: rho(g) must be zero");
    for (auto lam : curve_.field().elements()) {
        Func cand = f * (g - curve_.constant(lam));
        if (rho(cand) < rf) return lam;
    }
    throw LemmaViolated("find_reducer: no lambda lowers rho(f(g-lambda)); backend bug");
}

Func NearWeight::pole_element() const {
    switch (curve_.kind()) {
        case CurveKind::ProjectiveLine:
            return place_.at_infinity ? curve_.x() : curve_.x().inv();
        case CurveKind::Hermitian:
            return place_.at_infinity ? curve_.x() : curve_.x() / curve_.y();
        case CurveKind::CustomPlane:
            throw DomainError("no canonical pole element on a custom backend; supply a search pool");
    }
    throw DomainError("unreachable");
}

long NearWeight::tilde_rho(const Func& f, const std::vector<Func>& search_pool) const {
    if (f.is_zero()) throw DomainError("tilde_rho of 0 is -inf; handle zero at the call site");
    auto try_g = [&](const Func& g) -> std::optional<long> {
        if (!in_M(g)) return std::nullopt;
        Func fg = f * g;
        if (fg.is_zero() || !in_M(fg)) return std::nullopt;
        return rho(fg).value() - rho(g).value();
    };
    for (const Func& g : search_pool)
        if (auto r = try_g(g)) return *r;
    Func e = pole_element();
    Func g = e;
    for (int n = 1; n <= 64; ++n, g = g * e)
        if (auto r = try_g(g)) return *r;
    throw SearchExhausted("tilde_rho: no g in M with fg in M within the cap");
}

ExtInt NearWeight::v_rho(const Func& num, const Func& den) const {
    if (den.is_zero()) throw DivisionByZero("v_rho with zero denominator");
    if (num.is_zero()) return ExtInt::pos_inf();
    return ExtInt::of(tilde_rho(den) - tilde_rho(num));
}

// ---------------------------------------------------------------- pools

std::vector<Func> default_pool(const Curve& curve, int max_factors) {
    const Field& F = curve.field();
    std::vector<Func> factors;
    if (curve.kind() == CurveKind::ProjectiveLine) {
        factors.push_back(curve.x());
        factors.push_back(curve.x().inv());
        for (auto c : F.elements())
            if (!c.is_zero()) factors.push_back(curve.x() + curve.constant(c));
    } else {
        factors.push_back(curve.x());
        factors.push_back(curve.y());
        factors.push_back(curve.x() / curve.y());
        for (auto c : F.elements()) {
            if (c.is_zero()) continue;
            factors.push_back(curve.x() + curve.constant(c));
            factors.push_back(curve.y() + curve.constant(c));
        }
    }

    Place P = curve.placeP(), Q = curve.placeQ();
    auto pts = curve.rational_points();
    auto in_R = [&](const Func& f) {
        for (auto& pt : pts) {
            Place pl{false, pt.x, pt.y};
            if (pl == P || pl == Q) continue;
            if (!f.den().eval(pt.x, pt.y).is_zero()) continue;  // regular here
            if (f.valuation(pl) < 0) return false;
        }
        return true;
    };

    std::vector<Func> pool;
    std::set<std::string> seen;
    auto emit = [&](const Func& f) {
        if (f.is_zero()) return;
        if (!in_R(f)) return;
        std::string key = f.str();
        if (seen.insert(key).second) pool.push_back(f);
    };
    // multisets of factors, sizes 0..max_factors, in lexicographic order
    auto rec = [&](auto&& self, size_t start, const Func& acc, int depth) -> void {
        emit(acc);
        if (depth == max_factors) return;
        for (size_t i = start; i < factors.size(); ++i) self(self, i, acc * factors[i], depth + 1);
    };
    rec(rec, 0, curve.one(), 0);
    return pool;
}

// ---------------------------------------------------------------- axiom checker

namespace {

struct Entry {
    Func f;
    long vP, vQ;      // backend valuations at the two designated places
    long wr, ws;      // weights as the checker sees them (test hook may skew wr)
    std::optional<Series> sP, sQ;  // cached expansions at affine places
    std::string text;
};

// Weight of f + lambda*g at one place, honest: series addition when the
// place is affine, symbolic valuation of the actual sum otherwise.
ExtInt sum_weight(const Place& pl, bool use_series, const Entry& a, const Entry& b,
                  const Felt& lambda, const std::optional<Series>& sa, const std::optional<Series>& sb) {
    if (use_series && sa && sb) {
        Series s = *sa + *sb * lambda;
        if (auto l = s.lead()) return ExtInt::of(std::max(0L, -*l));
        // cancellation past the cached window: decide exactly
    }
    Func s = a.f + b.f * lambda;
    if (s.is_zero()) return ExtInt::neg_inf();
    return ExtInt::of(std::max(0L, -s.valuation(pl)));
}

std::string pair_values(const std::string& what, const ExtInt& lhs, const ExtInt& rhs) {
    return what + ": " + lhs.str() + " vs " + rhs.str();
}

}  // namespace

AxiomReport check_axioms(const NearWeight& wrho, const NearWeight& wsigma, const std::vector<Func>& pool,
                         const CheckOptions& opt) {
    const Curve& curve = wrho.curve();
    if (!curve.same(wsigma.curve())) throw DomainError("check_axioms: weights on different curves");
    const Field& F = curve.field();
    Place P = wrho.place(), Q = wsigma.place();

    AxiomReport rep;
    rep.seed = opt.seed;
    rep.results.reserve(8);  // results are held by reference while filled
    std::mt19937_64 rng(opt.seed);

    auto result = [&rep](const std::string& name) -> AxiomResult& {
        rep.results.push_back(AxiomResult{name});
        return rep.results.back();
    };
    auto fail = [&rep](AxiomResult& r, AxiomWitness w) {
        if (r.pass) {
            r.pass = false;
            r.witness = std::move(w);
            rep.all_pass = false;
        }
    };

    if (pool.empty()) {
        rep.insufficient_pool = true;
        for (const char* n : {"N0", "N1", "N2", "N3", "N4", "N5", "well-agreement"}) result(n);
        return rep;
    }

    // precompute valuations, weights and local expansions
    std::vector<Entry> es;
    es.reserve(pool.size());
    long max_pole = 1;
    for (const Func& f : pool) {
        if (f.is_zero()) continue;
        Entry e{f, f.valuation(P), f.valuation(Q), 0, 0, std::nullopt, std::nullopt, f.str()};
        e.wr = std::max(0L, -e.vP);
        e.ws = std::max(0L, -e.vQ);
        max_pole = std::max({max_pole, e.wr, e.ws});
        es.push_back(std::move(e));
    }
    if (opt.mutate_index >= 0 && opt.mutate_index < static_cast<int>(es.size()))
        es[opt.mutate_index].wr += 1;

    long window = 4 * max_pole + 8;
    for (Entry& e : es) {
        if (!P.at_infinity) e.sP = e.f.expand_at(P, static_cast<int>(window + max_pole)).series.truncated(window);
        if (!Q.at_infinity) e.sQ = e.f.expand_at(Q, static_cast<int>(window + max_pole)).series.truncated(window);
    }
    const size_t n = es.size();

    // N0: rho(f) = -inf iff f = 0
    {
        AxiomResult& r = result("N0");
        for (auto* w : {&wrho, &wsigma}) {
            if (!w->rho(curve.zero()).is_neg_inf())
                fail(r, {"0", "", "", "rho(0) is not -inf"});
            ++r.checks;
        }
        for (const Entry& e : es) {
            ++r.checks;
            if (wrho.rho(e.f).is_neg_inf() || wsigma.rho(e.f).is_neg_inf())
                fail(r, {e.text, "", "", "nonzero element with weight -inf"});
        }
    }

    // N1: rho(lambda f) = rho(f) for lambda in F*
    {
        AxiomResult& r = result("N1");
        for (const Entry& e : es) {
            for (auto lam : F.elements()) {
                if (lam.is_zero()) continue;
                ++r.checks;
                Func lf = e.f * lam;
                long vp = lf.valuation(P), vq = lf.valuation(Q);
                if (std::max(0L, -vp) != std::max(0L, -e.vP) || std::max(0L, -vq) != std::max(0L, -e.vQ)) {
                    fail(r, {e.text, lam.str(), "", "scalar multiple changed the weight"});
                    break;
                }
            }
        }
    }

    // N2: rho(f+g) <= rho(f) + rho(g), all pairs, both weights
    {
        AxiomResult& r = result("N2");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                ++r.checks;
                ExtInt sr = sum_weight(P, !P.at_infinity, es[i], es[j], F.one(), es[i].sP, es[j].sP);
                ExtInt ss = sum_weight(Q, !Q.at_infinity, es[i], es[j], F.one(), es[i].sQ, es[j].sQ);
                if (!(sr <= ExtInt::of(es[i].wr + es[j].wr)))
                    fail(r, {es[i].text, es[j].text, "", pair_values("rho(f+g) vs rho(f)+rho(g)", sr, ExtInt::of(es[i].wr + es[j].wr))});
                if (!(ss <= ExtInt::of(es[i].ws + es[j].ws)))
                    fail(r, {es[i].text, es[j].text, "", pair_values("sigma(f+g) vs sigma(f)+sigma(g)", ss, ExtInt::of(es[i].ws + es[j].ws))});
            }
    }

    // product weights from valuation additivity (the additivity itself is
    // re-checked on an honest subsample below)
    auto prod_wr = [&](const Entry& a, const Entry& b) { return std::max(0L, -(a.vP + b.vP)); };
    auto prod_ws = [&](const Entry& a, const Entry& b) { return std::max(0L, -(a.vQ + b.vQ)); };

    // N3: rho(f) < rho(g) implies rho(fh) <= rho(gh); strict when h in M
    {
        AxiomResult& r = result("N3");
        auto check_triple = [&](size_t i, size_t j, size_t k) {
            ++r.checks;
            const Entry &f = es[i], &g = es[j], &h = es[k];
            // rho side
            if (f.wr < g.wr) {
                long fh = prod_wr(f, h), gh = prod_wr(g, h);
                if (fh > gh) fail(r, {f.text, g.text, h.text, "rho(fh) > rho(gh)"});
                if (h.wr > 0 && fh >= gh) fail(r, {f.text, g.text, h.text, "h in M but rho(fh) >= rho(gh)"});
            }
            if (f.ws < g.ws) {
                long fh = prod_ws(f, h), gh = prod_ws(g, h);
                if (fh > gh) fail(r, {f.text, g.text, h.text, "sigma(fh) > sigma(gh)"});
                if (h.ws > 0 && fh >= gh) fail(r, {f.text, g.text, h.text, "h in M but sigma(fh) >= sigma(gh)"});
            }
        };
        // exhaustive in lexicographic order up to the cap, then random
        long budget = opt.triple_cap;
        for (size_t i = 0; i < n && budget > 0; ++i)
            for (size_t j = 0; j < n && budget > 0; ++j)
                for (size_t k = 0; k < n && budget > 0; ++k, --budget) check_triple(i, j, k);
        if (static_cast<long>(n) * static_cast<long>(n) * static_cast<long>(n) > opt.triple_cap) {
            std::uniform_int_distribution<size_t> pick(0, n - 1);
            for (long t = 0; t < opt.random_triples; ++t) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }

    // N4: rho(f) = rho(g) > 0 admits lambda with rho(f - lambda g) < rho(f)
    {
        AxiomResult& r = result("N4");
        auto search = [&](const Place& pl, bool series_side, long Entry::*w, std::optional<Series> Entry::*s,
                          const char* name) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    if (es[i].*w != es[j].*w || es[i].*w <= 0) continue;
                    ++r.checks;
                    bool found = false;
                    for (auto lam : F.elements()) {
                        if (lam.is_zero()) continue;
                        ExtInt d = sum_weight(pl, series_side, es[i], es[j], -lam, es[i].*s, es[j].*s);
                        if (d < ExtInt::of(es[i].*w)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found)
                        fail(r, {es[i].text, es[j].text, "",
                                 std::string(name) + "(f) = " + std::to_string(es[i].*w) + ": no lambda reduces f - lambda g"});
                }
        };
        search(P, !P.at_infinity, &Entry::wr, &Entry::sP, "rho");
        search(Q, !Q.at_infinity, &Entry::ws, &Entry::sQ, "sigma");
    }

    // N5: rho(fg) <= rho(f)+rho(g), equality when f,g in M
    {
        AxiomResult& r = result("N5");
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        std::set<std::pair<size_t, size_t>> honest;
        for (long t = 0; t < opt.honest_subsample; ++t) {
            size_t a = pick(rng), b = pick(rng);
            honest.insert({std::min(a, b), std::max(a, b)});
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                ++r.checks;
                long fgr, fgs;
                if (honest.count({i, j})) {
                    Func fg = es[i].f * es[j].f;
                    fgr = std::max(0L, -fg.valuation(P));
                    fgs = std::max(0L, -fg.valuation(Q));
                    if (fgr != prod_wr(es[i], es[j]) || fgs != prod_ws(es[i], es[j]))
                        fail(r, {es[i].text, es[j].text, "", "valuation of a product is not additive (backend bug)"});
                } else {
                    fgr = prod_wr(es[i], es[j]);
                    fgs = prod_ws(es[i], es[j]);
                }
                if (fgr > es[i].wr + es[j].wr)
                    fail(r, {es[i].text, es[j].text, "", "rho(fg) > rho(f)+rho(g)"});
                if (es[i].wr > 0 && es[j].wr > 0 && fgr != es[i].wr + es[j].wr)
                    fail(r, {es[i].text, es[j].text, "",
                             "f,g in M but rho(fg) = " + std::to_string(fgr) + " != " + std::to_string(es[i].wr + es[j].wr)});
                if (fgs > es[i].ws + es[j].ws)
                    fail(r, {es[i].text, es[j].text, "", "sigma(fg) > sigma(f)+sigma(g)"});
                if (es[i].ws > 0 && es[j].ws > 0 && fgs != es[i].ws + es[j].ws)
                    fail(r, {es[i].text, es[j].text, "",
                             "f,g in M but sigma(fg) = " + std::to_string(fgs) + " != " + std::to_string(es[i].ws + es[j].ws)});
            }
    }

    // well agreement: (a) U_rho cap U_sigma = F on the pool,
    // (b) beyond a conductor the truncated grid is fully covered
    {
        AxiomResult& r = result("well-agreement");
        for (const Entry& e : es) {
            if (e.wr != 0 || e.ws != 0) continue;
            ++r.checks;
            // a nonzero element of U_rho cap U_sigma must be a constant
            if (e.vQ > 0 || (P.at_infinity ? false : e.vP > 0)) {
                fail(r, {e.text, "", "", "vanishes at a designated place yet has both weights 0"});
                continue;
            }
            Felt c = Q.at_infinity ? F.zero() : e.f.expand_at(Q, 1).series.lead_coeff();
            if (Q.at_infinity || !(e.f == curve.constant(c)))
                fail(r, {e.text, "", "", "element of U_rho cap U_sigma is not a constant"});
        }

        long W = 2L * curve.genus() + 2;
        long maxr = 0, maxs = 0;
        std::set<std::pair<long, long>> pts;
        for (const Entry& e : es) {
            pts.insert({e.wr, e.ws});
            maxr = std::max(maxr, e.wr);
            maxs = std::max(maxs, e.ws);
        }
        if (maxr < W || maxs < W || pts.size() < 2) {
            rep.insufficient_pool = true;
        } else {
            // close under lub within the box (sums realize least upper bounds)
            std::vector<std::vector<bool>> grid(W + 1, std::vector<bool>(W + 1, false));
            for (auto& a : pts)
                for (auto& b : pts) {
                    long x = std::max(a.first, b.first), y = std::max(a.second, b.second);
                    if (x <= W && y <= W) grid[x][y] = true;
                }
            bool found = false;
            for (long c = 0; c <= 2 * W && !found; ++c)
                for (long c1 = std::max(0L, c - W); c1 <= std::min(c, W) && !found; ++c1) {
                    long c2 = c - c1;
                    bool full = true;
                    for (long a = c1; a <= W && full; ++a)
                        for (long b = c2; b <= W && full; ++b)
                            if (!grid[a][b]) full = false;
                    if (full) found = true;
                }
            ++r.checks;
            if (!found)
                fail(r, {"", "", "", "no conductor within the truncation box: N^2 \\ H looks infinite"});
        }
    }

    // gcd normalization report (never rescaled)
    {
        long gr = 0, gs = 0;
        for (const Entry& e : es) {
            if (e.wr > 0) gr = std::gcd(gr, e.wr);
            if (e.ws > 0) gs = std::gcd(gs, e.ws);
        }
        rep.gcd_rho = gr;
        rep.gcd_sigma = gs;
    }

    return rep;
}

ReconstructionReport verify_reconstruction(const NearWeight& wrho, const NearWeight& wsigma,
                                           const std::vector<std::pair<Func, Func>>& samples) {
    ReconstructionReport rep;
    for (auto& [num, den] : samples) {
        if (num.is_zero() || den.is_zero()) throw DomainError("verify_reconstruction: samples must be nonzero");
        Func f = num / den;
        ++rep.checked;
        long vp = f.valuation(wrho.place());
        long vq = f.valuation(wsigma.place());
        ExtInt rp = wrho.v_rho(num, den);
        ExtInt rq = wsigma.v_rho(num, den);
        if (rp != ExtInt::of(vp)) {
            rep.pass = false;
            rep.mismatches.push_back({num.str(), den.str(), rp.value(), vp, "P"});
        }
        if (rq != ExtInt::of(vq)) {
            rep.pass = false;
            rep.mismatches.push_back({num.str(), den.str(), rq.value(), vq, "Q"});
        }
    }
    return rep;
}

std::string AxiomReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "agsemigroup/1";
    j["seed"] = seed;
    j["all_pass"] = all_pass;
    j["insufficient_pool"] = insufficient_pool;
    j["gcd_rho"] = gcd_rho;
    j["gcd_sigma"] = gcd_sigma;
    j["axioms"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json a;
        a["axiom"] = r.axiom;
        a["verdict"] = r.pass ? "pass" : "fail";
        a["checks"] = r.checks;
        if (r.witness) {
            a["witness"] = {{"f", r.witness->f}, {"g", r.witness->g}, {"h", r.witness->h}, {"values", r.witness->values}};
        }
        j["axioms"].push_back(a);
    }
    return j.dump(2);
}

}  // namespace agsg
