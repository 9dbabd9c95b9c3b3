#include "agsg/semigroup.hpp"

#include <algorithm>
#include <set>

namespace agsg {

GridPoint pair_of(const NearWeight& wrho, const NearWeight& wsigma, const Func& f) {
    if (f.is_zero()) throw DomainError("pair_of: f must be nonzero");
    return {wrho.rho(f).value(), wsigma.rho(f).value()};
}

std::pair<Func, GridPoint> realize_lub(const NearWeight& wrho, const NearWeight& wsigma, const Func& f,
                                       const Func& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("realize_lub: f and g must be nonzero");
    GridPoint pf = pair_of(wrho, wsigma, f), pg = pair_of(wrho, wsigma, g);
    GridPoint target = lub(pf, pg);
    for (const Func& cand : {f, g, f + g}) {
        if (cand.is_zero()) continue;
        if (pair_of(wrho, wsigma, cand) == target) return {cand, target};
    }
    throw AxiomViolated("realize_lub: no candidate in {f, g, f+g} attains the lub " + target.str());
}

std::vector<Func> spanning_pool(const Curve& curve, long B) {
    if (B < 1) throw DomainError("spanning_pool: B must be >= 1");
    std::vector<Func> pool;
    if (curve.kind() == CurveKind::ProjectiveLine) {
        for (long d = -B; d <= B; ++d) pool.push_back(curve.x().pow(d));
        return pool;
    }
    if (curve.kind() != CurveKind::Hermitian)
        throw DomainError("spanning_pool: no built-in pool for custom curves; supply one");
    // div(y) = (q+1)(Q - P), so y is invertible in R; the monomials
    // x^i y^j with i >= 0, j in Z have poles confined to P, Q, with
    // v_P = -(qi + (q+1)j) and v_Q = i + (q+1)j, and distinct pairs
    long q = curve.q();
    Func x = curve.x(), y = curve.y();
    for (long i = 0; i <= 2 * B; ++i)
        for (long j = -2 * B; j <= B; ++j) {
            long vP = -(q * i + (q + 1) * j);
            long vQ = i + (q + 1) * j;
            if (-vP > B || -vQ > B) continue;
            pool.push_back(x.pow(i) * y.pow(j));
        }
    return pool;
}

// ---------------------------------------------------------------- DimOracle

DimOracle::DimOracle(const NearWeight& wrho, const NearWeight& wsigma, std::vector<Func> pool, long B)
    : B_(B), field_(wrho.curve().field()) {
    if (B < 1) throw DomainError("DimOracle: B must be >= 1");
    Place Q = wsigma.place();
    if (Q.at_infinity) throw DomainError("DimOracle: the sigma place must be affine");
    Place P = wrho.place();
    for (Func& f : pool) {
        if (f.is_zero()) continue;
        long vP = f.valuation(P), vQ = f.valuation(Q);
        if (-vP > B || -vQ > B) continue;  // never passes any filter
        Series s = f.expand_at(Q, static_cast<int>(3 * B + 2)).series;
        std::vector<Felt> coeffs;
        coeffs.reserve(3 * B + 1);
        for (long e = -B; e <= 2 * B; ++e) coeffs.push_back(s.coeff(e));
        rows_.push_back(Row{std::move(f), vP, vQ, std::move(coeffs)});
    }
}

int DimOracle::dim(long m, long n) const {
    if (m < 0 || n < 0) throw DomainError("DimOracle: m, n must be >= 0");
    if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
    std::vector<std::vector<Felt>> mat;
    for (const Row& r : rows_)
        if (r.vP >= -m && r.vQ >= -n) mat.push_back(r.coeffs);
    int d = rank_of(std::move(mat), field_);
    memo_[{m, n}] = d;
    return d;
}

// ---------------------------------------------------------------- compute_H

std::string SemigroupView::ascii() const {
    std::string out;
    for (long n = bound; n >= 0; --n) {
        for (long m = 0; m <= bound; ++m) out += members[m][n] ? "#" : "·";
        out += "\n";
    }
    return out;
}

namespace {

// minimal generators of a numerical semigroup given its box membership
std::vector<long> axis_generators(const std::vector<bool>& in, long B) {
    std::vector<long> gens;
    for (long s = 1; s <= B; ++s) {
        if (!in[s]) continue;
        bool sum = false;
        for (long a = 1; a < s && !sum; ++a)
            if (in[a] && in[s - a]) sum = true;
        if (!sum) gens.push_back(s);
    }
    return gens;
}

}  // namespace

SemigroupView compute_H(const NearWeight& wrho, const NearWeight& wsigma, long B, const std::vector<Func>& pool) {
    if (B < 1) throw DomainError("compute_H: B must be >= 1");
    const Curve& curve = wrho.curve();
    DimOracle oracle(wrho, wsigma, pool.empty() ? spanning_pool(curve, B) : pool, B);

    SemigroupView v;
    v.bound = B;
    v.genus = curve.genus();
    v.dims.assign(B + 1, std::vector<int>(B + 1, 0));
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) v.dims[m][n] = oracle.dim(m, n);

    // saturation: Riemann-Roch in the nonspecial range, single-step jumps
    long g = v.genus;
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) {
            if (m + n >= 2 * g - 1 && v.dim(m, n) != m + n + 1 - g)
                throw PoolInsufficient("compute_H: dim R(" + std::to_string(m) + "," + std::to_string(n) + ") = " +
                                       std::to_string(v.dim(m, n)) + ", expected " + std::to_string(m + n + 1 - g) +
                                       "; the pool does not span");
            int jm = m > 0 ? v.dim(m, n) - v.dim(m - 1, n) : 0;
            int jn = n > 0 ? v.dim(m, n) - v.dim(m, n - 1) : 0;
            if (jm < 0 || jm > 1 || jn < 0 || jn > 1)
                throw PoolInsufficient("compute_H: dimension table is not a one-step filtration at (" +
                                       std::to_string(m) + "," + std::to_string(n) + ")");
        }
    if (v.dim(0, 0) != 1) throw PoolInsufficient("compute_H: dim R(0,0) != 1; pool misses the constants");

    // (m,n) is in H iff the dimension jumps in both coordinates; at an
    // axis the jump toward the missing place always exists, since
    // dim L(D - S) = dim L(D) - 1 when D >= 0 (constants have nonzero
    // value at S), so the condition toward m = -1 or n = -1 is automatic
    v.members.assign(B + 1, std::vector<bool>(B + 1, false));
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) {
            bool jm = m == 0 || v.dim(m, n) > v.dim(m - 1, n);
            bool jn = n == 0 || v.dim(m, n) > v.dim(m, n - 1);
            v.members[m][n] = jm && jn;
            if (!v.members[m][n]) v.gapSet.push_back({m, n});
        }

    std::vector<bool> inX(B + 1), inY(B + 1);
    for (long s = 0; s <= B; ++s) {
        inX[s] = v.members[s][0];
        inY[s] = v.members[0][s];
    }
    v.genX = axis_generators(inX, B);
    v.genY = axis_generators(inY, B);

    for (long m = 1; m <= B; ++m) {
        if (inX[m]) continue;  // m is a gap of the x-projection
        long yh = -1;
        for (long n = 1; n <= B; ++n)
            if (v.members[m][n]) {
                yh = n;
                break;
            }
        if (yh < 0) throw BoxTooSmall("compute_H: y_H(" + std::to_string(m) + ") not found within the box");
        v.gammaTilde.push_back({m, yh});
    }

    long c1 = 0, c2 = 0;
    for (const GridPoint& gp : v.gapSet) {
        c1 = std::max(c1, gp.a + 1);
        c2 = std::max(c2, gp.b + 1);
    }
    v.conductor = {c1, c2};
    return v;
}

long x_of(const SemigroupView& view, long n) {
    if (n < 0 || n > view.bound) throw DomainError("x_of: n outside the box");
    for (long m = 0; m <= view.bound; ++m)
        if (view.members[m][n]) return m;
    throw BoxTooSmall("x_of: no member in row n = " + std::to_string(n));
}

long y_of(const SemigroupView& view, long m) {
    if (m < 0 || m > view.bound) throw DomainError("y_of: m outside the box");
    for (long n = 0; n <= view.bound; ++n)
        if (view.members[m][n]) return n;
    throw BoxTooSmall("y_of: no member in column m = " + std::to_string(m));
}

// ---------------------------------------------------------------- gaps, gamma

namespace {

std::set<GridPoint> delta(const GridPoint& a) {
    std::set<GridPoint> d;
    for (long l = 0; l < a.b; ++l) d.insert({a.a, l});
    for (long l = 0; l < a.a; ++l) d.insert({l, a.b});
    return d;
}

}  // namespace

std::vector<GridPoint> gaps_via_gamma(const std::vector<GridPoint>& gammaTilde, long B) {
    std::set<GridPoint> out;
    for (const GridPoint& a : gammaTilde)
        for (const GridPoint& p : delta(a))
            if (p.a <= B && p.b <= B) out.insert(p);
    return {out.begin(), out.end()};
}

std::vector<GridPoint> pure_gaps(const std::vector<GridPoint>& gammaTilde) {
    std::set<GridPoint> out;
    for (size_t i = 0; i < gammaTilde.size(); ++i) {
        std::set<GridPoint> di = delta(gammaTilde[i]);
        for (size_t j = 0; j < gammaTilde.size(); ++j) {
            if (i == j) continue;
            for (const GridPoint& p : delta(gammaTilde[j]))
                if (di.count(p)) out.insert(p);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<GridPoint> pure_gaps_oracle(const SemigroupView& view) {
    std::vector<GridPoint> out;
    for (const GridPoint& gp : view.gapSet)
        if (gp.a >= 1 && gp.b >= 1 && view.dim(gp.a, gp.b) == view.dim(gp.a - 1, gp.b) &&
            view.dim(gp.a, gp.b) == view.dim(gp.a, gp.b - 1))
            out.push_back(gp);
    return out;
}

GammaSets gamma_sets(const SemigroupView& view) {
    GammaSets s;
    s.tilde = view.gammaTilde;
    std::set<GridPoint> gamma(s.tilde.begin(), s.tilde.end());
    for (long m = 0; m <= view.bound; ++m)
        if (view.members[m][0]) gamma.insert({m, 0});
    for (long n = 0; n <= view.bound; ++n)
        if (view.members[0][n]) gamma.insert({0, n});
    s.gamma = {gamma.begin(), gamma.end()};
    std::set<GridPoint> plus(s.tilde.begin(), s.tilde.end());
    for (long m : view.genX) plus.insert({m, 0});
    for (long n : view.genY) plus.insert({0, n});
    s.plus = {plus.begin(), plus.end()};
    return s;
}

std::vector<std::vector<bool>> lub_closure(const std::vector<GridPoint>& gamma, long B) {
    std::vector<std::vector<bool>> grid(B + 1, std::vector<bool>(B + 1, false));
    for (const GridPoint& a : gamma)
        for (const GridPoint& b : gamma) {
            GridPoint l = lub(a, b);
            if (l.a <= B && l.b <= B) grid[l.a][l.b] = true;
        }
    return grid;
}

// ---------------------------------------------------------------- basis

namespace {

// witness ordering: minimal total representation degree, then text
bool witness_less(const Func& a, const Func& b) {
    int da = a.num().total_deg() + a.den().total_deg();
    int db = b.num().total_deg() + b.den().total_deg();
    if (da != db) return da < db;
    return a.str() < b.str();
}

}  // namespace

std::vector<WitnessedPoint> build_basis(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                        const std::vector<Func>& pool) {
    std::map<GridPoint, Func> best;
    for (const Func& f : pool) {
        if (f.is_zero()) continue;
        GridPoint p = pair_of(wrho, wsigma, f);
        if (p.a > view.bound || p.b > view.bound) continue;
        auto it = best.find(p);
        if (it == best.end())
            best.emplace(p, f);
        else if (witness_less(f, it->second))
            it->second = f;
    }
    std::vector<WitnessedPoint> basis;
    for (const GridPoint& a : gamma_sets(view).gamma) {
        auto it = best.find(a);
        if (it == best.end()) throw PoolInsufficient("build_basis: no pool element realizes " + a.str());
        basis.push_back({a, it->second});
    }
    // the witnesses must be linearly independent
    long B = view.bound;
    Place Q = wsigma.place();
    std::vector<std::vector<Felt>> mat;
    for (const WitnessedPoint& w : basis) {
        Series s = w.witness.expand_at(Q, static_cast<int>(3 * B + 2)).series;
        std::vector<Felt> row;
        for (long e = -B; e <= 2 * B; ++e) row.push_back(s.coeff(e));
        mat.push_back(std::move(row));
    }
    if (rank_of(std::move(mat), wrho.curve().field()) != static_cast<int>(basis.size()))
        throw AxiomViolated("build_basis: witnesses are linearly dependent");
    return basis;
}

std::vector<Felt> reduce_element(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                 const std::vector<WitnessedPoint>& basis, const Func& f) {
    const Curve& curve = wrho.curve();
    const Field& F = curve.field();
    std::map<GridPoint, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i].point] = i;

    std::vector<Felt> coeffs(basis.size(), F.zero());
    Func g = f;
    long guard = 4 * (view.bound + 1) * (view.bound + 1) + 16;
    while (!g.is_zero()) {
        if (--guard < 0) throw AxiomViolated("reduce_element: elimination did not terminate");
        GridPoint p = pair_of(wrho, wsigma, g);
        if (p.a > view.bound || p.b > view.bound)
            throw BoxTooSmall("reduce_element: weight pair " + p.str() + " outside the box");

        // assemble the eliminator phi with weight pair p, tracking which
        // basis coefficients a multiple of phi contributes to
        Func phi = curve.zero();
        std::vector<std::pair<size_t, Felt>> contrib;
        if (auto it = index.find(p); it != index.end()) {
            phi = basis[it->second].witness;
            contrib = {{it->second, F.one()}};
        } else {
            GridPoint a1{p.a, y_of(view, p.a)}, a2{x_of(view, p.b), p.b};
            if (lub(a1, a2) != p) throw AxiomViolated("reduce_element: lub decomposition failed at " + p.str());
            auto i1 = index.find(a1), i2 = index.find(a2);
            if (i1 == index.end() || i2 == index.end())
                throw PoolInsufficient("reduce_element: lub component of " + p.str() + " unwitnessed");
            const Func &f1 = basis[i1->second].witness, &f2 = basis[i2->second].witness;
            for (auto [l, m] : {std::pair<int, int>{1, 0}, {0, 1}, {1, 1}}) {
                Func cand = (l ? f1 : curve.zero()) + (m ? f2 : curve.zero());
                if (cand.is_zero() || pair_of(wrho, wsigma, cand) != p) continue;
                phi = cand;
                contrib.clear();
                if (l) contrib.push_back({i1->second, F.one()});
                if (m) contrib.push_back({i2->second, F.one()});
                break;
            }
            if (phi.is_zero()) throw AxiomViolated("reduce_element: no lub realization at " + p.str());
        }

        // find c with a strictly smaller weight pair for g - c*phi
        bool advanced = false;
        for (const Felt& c : F.elements()) {
            if (c.is_zero()) continue;
            Func h = g - phi * c;
            if (!h.is_zero()) {
                GridPoint ph = pair_of(wrho, wsigma, h);
                if (ph == p) continue;
                if (ph.a > p.a || ph.b > p.b)
                    throw AxiomViolated("reduce_element: weight pair grew from " + p.str() + " to " + ph.str());
            }
            for (auto& [idx, w] : contrib) coeffs[idx] += c * w;
            g = h;
            advanced = true;
            break;
        }
        if (!advanced) throw AxiomViolated("reduce_element: elimination stalled at " + p.str());
    }
    return coeffs;
}

Func combine(const Curve& curve, const std::vector<WitnessedPoint>& basis, const std::vector<Felt>& coeffs) {
    if (coeffs.size() != basis.size()) throw DomainError("combine: coefficient count mismatch");
    Func out = curve.zero();
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) out = out + basis[i].witness * coeffs[i];
    return out;
}

// ---------------------------------------------------------------- generation

GenerationReport verify_generation(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                   long B, int degree_cap) {
    if (B > view.bound) throw DomainError("verify_generation: B exceeds the view's box");
    const Curve& curve = wrho.curve();
    GenerationReport rep;
    rep.degree_cap = degree_cap;

    // witnesses for Gamma+ from the spanning pool
    std::vector<Func> pool = spanning_pool(curve, view.bound);
    std::map<GridPoint, Func> best;
    for (const Func& f : pool) {
        GridPoint p = pair_of(wrho, wsigma, f);
        auto it = best.find(p);
        if (it == best.end())
            best.emplace(p, f);
        else if (witness_less(f, it->second))
            it->second = f;
    }
    for (const GridPoint& a : gamma_sets(view).plus) {
        auto it = best.find(a);
        if (it == best.end()) throw PoolInsufficient("verify_generation: " + a.str() + " unwitnessed");
        rep.generators.push_back({a, it->second});
    }

    // weight pairs of products of <= degree_cap generators, by valuation
    // additivity over the generator valuations
    Place P = wrho.place(), Q = wsigma.place();
    std::vector<std::pair<long, long>> genv;
    for (const WitnessedPoint& w : rep.generators)
        genv.push_back({w.witness.valuation(P), w.witness.valuation(Q)});
    std::set<GridPoint> pairs;
    auto rec = [&](auto&& self, size_t start, long vP, long vQ, int depth) -> void {
        GridPoint p{std::max(0L, -vP), std::max(0L, -vQ)};
        if (p.a <= B && p.b <= B) pairs.insert(p);
        if (depth == degree_cap) return;
        for (size_t i = start; i < genv.size(); ++i)
            self(self, i, vP + genv[i].first, vQ + genv[i].second, depth + 1);
    };
    rec(rec, 0, 0, 0, 0);

    std::vector<std::vector<bool>> closure = lub_closure({pairs.begin(), pairs.end()}, B);
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) {
            if (closure[m][n] && !view.members[m][n])
                throw AxiomViolated("verify_generation: subalgebra pair (" + std::to_string(m) + "," +
                                    std::to_string(n) + ") is not in H");
            if (view.members[m][n] && !closure[m][n]) {
                rep.pass = false;
                rep.missing.push_back({m, n});
            }
        }
    return rep;
}

// ---------------------------------------------------------------- ideals

IdealReport ideal_semigroup(const NearWeight& wrho, const NearWeight& wsigma, const Func& f,
                            const SemigroupView& view, long B) {
    if (f.is_zero()) throw DomainError("ideal_semigroup: f must be nonzero");
    const Curve& curve = wrho.curve();
    GridPoint pf = pair_of(wrho, wsigma, f);
    long vPf = f.valuation(wrho.place()), vQf = f.valuation(wsigma.place());

    // dimension oracle on f * (spanning pool of the shifted spaces)
    std::vector<Func> prods;
    for (const Func& g : spanning_pool(curve, B + pf.a + pf.b + 1)) prods.push_back(f * g);
    DimOracle oracle(wrho, wsigma, std::move(prods), B);

    long genus = curve.genus();
    IdealReport rep;
    rep.bound = B;
    rep.members.assign(B + 1, std::vector<bool>(B + 1, false));
    std::vector<std::vector<int>> dims(B + 1, std::vector<int>(B + 1, 0));
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) dims[m][n] = oracle.dim(m, n);
    for (long m = 0; m <= B; ++m)
        for (long n = 0; n <= B; ++n) {
            // I(m,n) = f * L((m + vPf)P + (n + vQf)Q); Riemann-Roch check
            long deg = m + n + vPf + vQf;
            if (deg >= 2 * genus - 1 && dims[m][n] != deg + 1 - genus)
                throw PoolInsufficient("ideal_semigroup: dim I(" + std::to_string(m) + "," + std::to_string(n) +
                                       ") = " + std::to_string(dims[m][n]) + ", expected " +
                                       std::to_string(deg + 1 - genus));
            bool jm = m == 0 || dims[m][n] > dims[m - 1][n];
            bool jn = n == 0 || dims[m][n] > dims[m][n - 1];
            rep.members[m][n] = dims[m][n] > 0 && jm && jn;
        }

    for (long m = 0; m <= B; ++m)
        if (view.member(m, 0) && !rep.members[m][0]) rep.exceptionalX.push_back({m, 0});
    for (long n = 0; n <= B; ++n)
        if (view.member(0, n) && !rep.members[0][n]) rep.exceptionalY.push_back({0, n});

    long edge = B - 3;
    for (const GridPoint& p : rep.exceptionalX)
        if (p.a > edge) throw BoxTooSmall("ideal_semigroup: exceptional x-set still growing near the box edge");
    for (const GridPoint& p : rep.exceptionalY)
        if (p.b > edge) throw BoxTooSmall("ideal_semigroup: exceptional y-set still growing near the box edge");
    rep.stable = true;
    return rep;
}

}  // namespace agsg
