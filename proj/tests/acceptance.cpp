// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "agsg/cli.hpp"
#include "agsg/codes.hpp"

using namespace agsg;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << idx << " " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Func> pool_of_at_least(const Curve& c, size_t want) {
    for (int mf = 3; mf <= 7; ++mf) {
        std::vector<Func> p = default_pool(c, mf);
        if (p.size() >= want) return p;
    }
    throw PoolInsufficient("cannot reach the requested pool size");
}

std::set<GridPoint> to_set(const std::vector<GridPoint>& v) { return {v.begin(), v.end()}; }

struct Backend {
    Curve c;
    NearWeight wr, ws;
    explicit Backend(Curve curve) : c(curve), wr(c, c.placeP()), ws(c, c.placeQ()) {}
};

void criterion_1_2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ax_ok = true, rec_ok = true;
    std::string detail;
    for (Backend b : {Backend(Curve::projective_line(Field(2, 2))), Backend(Curve::hermitian(2))}) {
        std::vector<Func> pool = pool_of_at_least(b.c, 200);
        CheckOptions opt;
        opt.random_triples = 2000;
        AxiomReport rep = check_axioms(b.wr, b.ws, pool, opt);
        if (!rep.all_pass || rep.insufficient_pool) {
            ax_ok = false;
            detail = "axiom failure, pool size " + std::to_string(pool.size());
        }
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::vector<std::pair<Func, Func>> samples;
        while (samples.size() < 110) samples.push_back({pool[pick(rng)], pool[pick(rng)]});
        ReconstructionReport rr = verify_reconstruction(b.wr, b.ws, samples);
        if (!rr.pass || rr.checked < 100) rec_ok = false;
    }
    double dt = seconds_since(t0);
    report(1, "axioms N0-N5 on both backends, pool >= 200, < 60 s", ax_ok && dt < 60.0,
           detail.empty() ? "took " + std::to_string(dt) + " s" : detail);
    report(2, "reconstructed valuations match the backend on >= 100 samples each", rec_ok);
}

void criterion_3(const Backend& h2, const SemigroupView& v10) {
    std::set<GridPoint> gaps = to_set(v10.gapSet);
    bool ok = gaps == std::set<GridPoint>{{1, 0}, {0, 1}} && to_set(v10.gammaTilde) == std::set<GridPoint>{{1, 1}};
    std::set<long> gapsX, gapsY;
    for (long s = 1; s <= 10; ++s) {
        if (!v10.member(s, 0)) gapsX.insert(s);
        if (!v10.member(0, s)) gapsY.insert(s);
    }
    ok = ok && gapsX == std::set<long>{1} && gapsY == std::set<long>{1};
    ok = ok && static_cast<int>(gapsX.size()) == h2.c.genus() && gapsX.size() == gapsY.size();
    report(3, "Hermitian(2) gap structure at B = 10", ok);
}

void criterion_4(const Backend& h2, const SemigroupView& v10, const Backend& p1) {
    bool ok = true;
    auto matches = [&](const Backend& b, const SemigroupView& v) {
        GammaSets gs = gamma_sets(v);
        auto grid = lub_closure(gs.gamma, v.bound);
        for (long m = 0; m <= v.bound; ++m)
            for (long n = 0; n <= v.bound; ++n)
                if (grid[m][n] != v.member(m, n)) return false;
        return true;
    };
    ok = ok && matches(h2, v10);
    SemigroupView vp = compute_H(p1.wr, p1.ws, 10);
    ok = ok && matches(p1, vp);
    report(4, "lub closure of Gamma equals H on [0,10]^2 for both backends", ok);
}

void criterion_5(const SemigroupView& v10, const Backend& p1, const SemigroupView& h3v) {
    auto equal = [](const SemigroupView& v) {
        return to_set(gaps_via_gamma(v)) == to_set(v.gapSet);
    };
    SemigroupView vp = compute_H(p1.wr, p1.ws, 8);
    bool ok = equal(v10) && equal(vp) && equal(h3v);
    report(5, "gaps via Gamma equal the membership complement", ok);
}

void criterion_6(const SemigroupView& v10, const SemigroupView& h3v) {
    bool ok = to_set(pure_gaps(h3v)) == to_set(pure_gaps_oracle(h3v)) && !pure_gaps(h3v).empty();
    ok = ok && pure_gaps(v10).empty();
    report(6, "pure gap formula matches the dimension-oracle definition", ok);
}

void criterion_7(const Backend& h2, const SemigroupView& v10, const Backend& p1) {
    auto holds = [](const SemigroupView& v, bool line) {
        GammaSets gs = gamma_sets(v);
        std::set<GridPoint> gamma = to_set(gs.gamma);
        for (long m = 0; m <= 8; ++m)
            for (long n = 0; n <= 8; ++n) {
                long count = 0;
                for (const GridPoint& p : gamma)
                    if (p.a <= m && p.b <= n) ++count;
                if (v.dim(m, n) != count) return false;
                if (line && v.dim(m, n) != m + n + 1) return false;
            }
        return true;
    };
    SemigroupView vp = compute_H(p1.wr, p1.ws, 10);
    bool ok = holds(v10, false) && holds(vp, true);
    (void)h2;
    report(7, "dim R(m,n) counts Gamma points on [0,8]^2; m+n+1 on the line", ok);
}

void criterion_8(const Backend& h2) {
    SemigroupView v8 = compute_H(h2.wr, h2.ws, 8);
    GenerationReport rep = verify_generation(h2.wr, h2.ws, v8, 8, 8);
    report(8, "Gamma-plus witnesses generate H on [0,8]^2 with degree cap 8", rep.pass && rep.missing.empty());
}

void criterion_9(const Backend& h2) {
    SemigroupView v12 = compute_H(h2.wr, h2.ws, 12);
    IdealReport rep = ideal_semigroup(h2.wr, h2.ws, h2.c.x(), v12, 12);
    bool ok = rep.stable && !rep.exceptionalX.empty() && !rep.exceptionalY.empty();
    for (const GridPoint& p : rep.exceptionalX) ok = ok && p.a < 12 && p.b < 12;
    for (const GridPoint& p : rep.exceptionalY) ok = ok && p.a < 12 && p.b < 12;
    report(9, "exceptional sets of the ideal (x) are finite and stable before B = 12", ok);
}

void criterion_10(const Backend& h2) {
    auto t0 = std::chrono::steady_clock::now();
    EvalCode code = build_code(h2.c, 2, 1, default_points(h2.c));
    long d = min_distance(code);
    double dt = seconds_since(t0);
    bool ok = code.N() == 7 && code.k == 3 && code.dLower && *code.dLower == 4;
    ok = ok && d >= 4 && d <= 5 && d == 4;  // frozen oracle value
    ok = ok && d <= code.N() - code.k + 1;
    report(10, "[7,3] fixture with d = 4, Singleton, < 5 s", ok && dt < 5.0,
           "d = " + std::to_string(d) + ", took " + std::to_string(dt) + " s");
}

void criterion_11() {
    std::vector<std::string> args = {"semigroup", "--curve", "hermitian", "--q", "2", "--bound", "8", "--seed", "5"};
    std::ostringstream o1, o2, e;
    int c1 = run_cli(args, o1, e);
    int c2 = run_cli(args, o2, e);
    bool ok = c1 == 0 && c2 == 0 && o1.str() == o2.str() && !o1.str().empty();
    report(11, "identical semigroup runs produce byte-identical JSON", ok);
}

}  // namespace

int main() {
    try {
        criterion_1_2();
        Backend h2(Curve::hermitian(2));
        Backend p1(Curve::projective_line(Field(2, 2)));
        Backend h3(Curve::hermitian(3));
        SemigroupView v10 = compute_H(h2.wr, h2.ws, 10);
        SemigroupView h3v = compute_H(h3.wr, h3.ws, 10);
        criterion_3(h2, v10);
        criterion_4(h2, v10, p1);
        criterion_5(v10, p1, h3v);
        criterion_6(v10, h3v);
        criterion_7(h2, v10, p1);
        criterion_8(h2);
        criterion_9(h2);
        criterion_10(h2);
        criterion_11();
    } catch (const std::exception& e) {
        std::cout << "FAIL (unhandled exception) " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
