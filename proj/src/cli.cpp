#include "agsg/cli.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agsg/codes.hpp"

namespace agsg {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string curve = "hermitian";
    int q = 4;  // Hermitian parameter, or field size for the projective line
    long bound = -1;
    int degree_cap = 8;
    int precision_cap = 64;
    uint64_t seed = 1;
    std::string format = "json";
    std::string out_path;
    // verify test hooks
    int mutate_index = -1;
    int max_factors = 3;
    bool empty_pool = false;
    // code parameters
    long m = 0, n = 0;
};

Curve make_curve(const RunConfig& cfg) {
    if (cfg.curve == "hermitian") return Curve::hermitian(cfg.q);
    if (cfg.curve == "p1") return Curve::projective_line(field_of_order(cfg.q));
    throw DomainError("unknown curve kind '" + cfg.curve + "' (use hermitian or p1)");
}

long default_bound(const Curve& c) { return std::max(4L, 4L * c.genus()); }

ordered_json config_json(const RunConfig& cfg, const Curve& c, long B) {
    ordered_json j;
    j["schema"] = "agsemigroup/1";
    j["curve"] = cfg.curve;
    j["q"] = cfg.q;
    j["B"] = B;
    j["genus"] = c.genus();
    j["seed"] = cfg.seed;
    j["degree_cap"] = cfg.degree_cap;
    j["precision_cap"] = cfg.precision_cap;
    return j;
}

ordered_json points_json(const std::vector<GridPoint>& pts) {
    ordered_json a = ordered_json::array();
    for (const GridPoint& p : pts) a.push_back({p.a, p.b});
    return a;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + cfg.out_path);
    f << text;
}

// ------------------------------------------------------------- semigroup

int cmd_semigroup(const RunConfig& cfg, std::ostream& out) {
    Curve c = make_curve(cfg);
    long B = cfg.bound > 0 ? cfg.bound : default_bound(c);
    NearWeight wr(c, c.placeP()), ws(c, c.placeQ());
    SemigroupView v = compute_H(wr, ws, B);
    GammaSets gs = gamma_sets(v);

    // cross-checks
    auto closure = lub_closure(gs.gamma, B);
    bool closure_equal = true;
    for (long m = 0; m <= B && closure_equal; ++m)
        for (long n = 0; n <= B && closure_equal; ++n)
            if (closure[m][n] != v.member(m, n)) closure_equal = false;
    long gx = 0, gy = 0;
    for (long s = 0; s <= B; ++s) {
        if (!v.member(s, 0)) ++gx;
        if (!v.member(0, s)) ++gy;
    }
    std::vector<GridPoint> gammaGaps = gaps_via_gamma(v);
    bool gaps_equal = std::set<GridPoint>(gammaGaps.begin(), gammaGaps.end()) ==
                      std::set<GridPoint>(v.gapSet.begin(), v.gapSet.end());
    GenerationReport gen = verify_generation(wr, ws, v, B, cfg.degree_cap);

    if (cfg.format == "json") {
        ordered_json j = config_json(cfg, c, B);
        j["command"] = "semigroup";
        j["gaps"] = points_json(v.gapSet);
        j["gamma_tilde"] = points_json(v.gammaTilde);
        j["gamma_plus"] = points_json(gs.plus);
        j["pure_gaps"] = points_json(pure_gaps(v));
        j["gen_x"] = v.genX;
        j["gen_y"] = v.genY;
        j["conductor"] = {v.conductor.a, v.conductor.b};
        j["checks"] = {{"lub_closure_equal", closure_equal},
                       {"gaps_via_gamma_equal", gaps_equal},
                       {"projection_gap_counts_equal", gx == gy},
                       {"generated_by_gamma_plus", gen.pass}};
        emit(cfg, j.dump(2) + "\n", out);
    } else if (cfg.format == "csv") {
        std::string s = "m,n\n";
        for (const GridPoint& p : v.gapSet) s += std::to_string(p.a) + "," + std::to_string(p.b) + "\n";
        emit(cfg, s, out);
    } else {
        std::ostringstream os;
        os << "H on [0," << B << "]^2 (# member, · gap), rows n = " << B << "..0:\n" << v.ascii();
        os << "gaps:";
        for (const GridPoint& p : v.gapSet) os << " " << p.str();
        os << "\ngamma_tilde:";
        for (const GridPoint& p : v.gammaTilde) os << " " << p.str();
        os << "\nconductor: " << v.conductor.str() << "\n";
        emit(cfg, os.str(), out);
    }
    return closure_equal && gaps_equal && gx == gy && gen.pass ? 0 : 1;
}

// ------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Curve c = make_curve(cfg);
    NearWeight wr(c, c.placeP()), ws(c, c.placeQ());
    std::vector<Func> pool;
    if (!cfg.empty_pool) pool = default_pool(c, cfg.max_factors);

    CheckOptions opt;
    opt.seed = cfg.seed;
    opt.mutate_index = cfg.mutate_index;
    AxiomReport axioms = check_axioms(wr, ws, pool, opt);

    // reconstruction on sampled fraction pairs from the pool
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::pair<Func, Func>> samples;
    if (!pool.empty()) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        while (samples.size() < 100) samples.push_back({pool[pick(rng)], pool[pick(rng)]});
    }
    ReconstructionReport recon = verify_reconstruction(wr, ws, samples);

    // tilde-weight property suite on sampled pairs
    ordered_json props = ordered_json::array();
    bool props_pass = true;
    auto prop = [&](const std::string& name, bool ok, const std::string& witness) {
        props.push_back({{"property", name}, {"verdict", ok ? "pass" : "fail"}, {"witness", witness}});
        if (!ok) props_pass = false;
    };
    if (!pool.empty()) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (const NearWeight* w : {&wr, &ws}) {
            bool agree = true, additive = true, scalar = true, maxsum = true, reducible = true;
            std::string wit;
            for (int t = 0; t < 40; ++t) {
                Func f = pool[pick(rng)], g = pool[pick(rng)];
                long tf = w->tilde_rho(f), tg = w->tilde_rho(g);
                if (w->in_M(f) && tf != w->rho(f).value()) agree = false;
                if (w->tilde_rho(f * g) != tf + tg) additive = false;
                if (w->tilde_rho(f * c.field().gen()) != tf) scalar = false;
                Func s = f + g;
                if (!s.is_zero() && w->tilde_rho(s) > std::max(tf, tg)) maxsum = false;
                if (tf == tg && !(f == g)) {
                    bool found = false;
                    for (const Felt& lam : c.field().elements()) {
                        if (lam.is_zero()) continue;
                        Func d = f - g * lam;
                        if (d.is_zero() || w->tilde_rho(d) < tf) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        reducible = false;
                        wit = f.str() + " , " + g.str();
                    }
                }
            }
            std::string side = w == &wr ? "rho" : "sigma";
            prop(side + ": tilde agrees on M", agree, "");
            prop(side + ": tilde additive on products", additive, "");
            prop(side + ": tilde scalar invariant", scalar, "");
            prop(side + ": tilde of sum bounded by max", maxsum, "");
            prop(side + ": equal tilde admits a reducer", reducible, wit);
        }
    }

    bool all = axioms.all_pass && recon.pass && props_pass;
    if (cfg.format == "json" || cfg.format == "csv") {
        ordered_json j = config_json(cfg, c, 0);
        j.erase("B");
        j["command"] = "verify";
        j["pool_size"] = pool.size();
        j["axioms"] = nlohmann::json::parse(axioms.to_json());
        ordered_json mm = ordered_json::array();
        for (const auto& x : recon.mismatches)
            mm.push_back({{"num", x.num}, {"den", x.den}, {"v_rho", x.v_rho_val}, {"backend", x.v_backend}, {"place", x.which}});
        j["reconstruction"] = {{"checked", recon.checked}, {"pass", recon.pass}, {"mismatches", mm}};
        j["properties"] = props;
        j["all_pass"] = all;
        if (axioms.insufficient_pool) j["warnings"] = {"pool too small for a conclusive check"};
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        for (const auto& r : axioms.results)
            os << r.axiom << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks << " checks)\n";
        os << "reconstruction: " << (recon.pass ? "pass" : "FAIL") << " (" << recon.checked << " samples)\n";
        os << "properties: " << (props_pass ? "pass" : "FAIL") << "\n";
        if (axioms.insufficient_pool) os << "warning: pool too small for a conclusive check\n";
        emit(cfg, os.str(), out);
    }
    return all ? 0 : 1;
}

// ------------------------------------------------------------- code

int cmd_code(const RunConfig& cfg, std::ostream& out) {
    Curve c = make_curve(cfg);
    EvalCode code = build_code(c, cfg.m, cfg.n, default_points(c));
    std::string note;
    if (!code.dLower) note = "Goppa bound omitted: m + n >= N";
    std::optional<long> dExact;
    if (!code.trivial) {
        try {
            dExact = min_distance(code);
        } catch (const TooLarge&) {
            note = note.empty() ? "dExact omitted: enumeration cap exceeded" : note;
        }
    }

    if (cfg.format == "csv") {
        emit(cfg, code.csv(), out);
    } else if (cfg.format == "json") {
        ordered_json j = config_json(cfg, c, 0);
        j.erase("B");
        j["command"] = "code";
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["N"] = code.N();
        j["k"] = code.k;
        j["trivial"] = code.trivial;
        if (code.dLower) j["d_lower"] = *code.dLower;
        if (dExact) j["d_exact"] = *dExact;
        if (!note.empty()) j["note"] = note;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "[" << code.N() << ", " << code.k << "] code over GF(" << c.field().card() << ")\n";
        if (code.dLower) os << "d >= " << *code.dLower << " (Goppa)\n";
        if (dExact) os << "d = " << *dExact << " (exact)\n";
        if (!note.empty()) os << note << "\n";
        emit(cfg, os.str(), out);
    }
    return 0;
}

// ------------------------------------------------------------- puregaps

int cmd_puregaps(const RunConfig& cfg, std::ostream& out) {
    Curve c = make_curve(cfg);
    long B = cfg.bound > 0 ? cfg.bound : default_bound(c);
    NearWeight wr(c, c.placeP()), ws(c, c.placeQ());
    SemigroupView v = compute_H(wr, ws, B);
    PureGapTable t = pure_gap_experiment(wr, ws, v, default_points(c));

    if (cfg.format == "json") {
        ordered_json j = config_json(cfg, c, B);
        j["command"] = "puregaps";
        ordered_json rows = ordered_json::array();
        for (const PureGapRow& r : t.rows) {
            ordered_json row;
            row["pure_gap"] = {r.pureGap.a, r.pureGap.b};
            row["reference"] = {r.reference.a, r.reference.b};
            row["N"] = r.N;
            row["k_pure"] = r.kPure;
            row["k_ref"] = r.kRef;
            if (r.dLowerPure) row["d_lower_pure"] = *r.dLowerPure;
            if (r.dLowerRef) row["d_lower_ref"] = *r.dLowerRef;
            if (r.dExactPure) row["d_exact_pure"] = *r.dExactPure;
            if (r.dExactRef) row["d_exact_ref"] = *r.dExactRef;
            rows.push_back(row);
        }
        j["rows"] = rows;
        if (!t.note.empty()) j["note"] = t.note;
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        emit(cfg, t.ascii(), out);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"two-point Weierstrass semigroups, near weights and evaluation codes"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--curve", cfg.curve, "curve backend: hermitian | p1");
        sub->add_option("--q", cfg.q, "Hermitian parameter q, or field size for p1");
        sub->add_option("--bound", cfg.bound, "truncation box size B");
        sub->add_option("--degree-cap", cfg.degree_cap, "product degree cap for generation checks");
        sub->add_option("--precision-cap", cfg.precision_cap, "series precision advisory cap");
        sub->add_option("--seed", cfg.seed, "random seed, recorded in reports");
        sub->add_option("--format", cfg.format, "output format: json | csv | ascii");
        sub->add_option("--out", cfg.out_path, "write the report to a file");
    };
    CLI::App* semi = app.add_subcommand("semigroup", "compute H, gaps and generator sets");
    add_common(semi);
    CLI::App* verify = app.add_subcommand("verify", "axiom, reconstruction and property suites");
    add_common(verify);
    verify->add_option("--mutate-index", cfg.mutate_index, "test hook: corrupt rho of pool[i]");
    verify->add_option("--max-factors", cfg.max_factors, "pool product length");
    verify->add_flag("--empty-pool", cfg.empty_pool, "run with an empty pool (warning only)");
    CLI::App* code = app.add_subcommand("code", "build a two-point evaluation code");
    add_common(code);
    code->add_option("--m", cfg.m, "pole order bound at P")->required();
    code->add_option("--n", cfg.n, "pole order bound at Q")->required();
    CLI::App* pg = app.add_subcommand("puregaps", "pure gap code comparison table");
    add_common(pg);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "ascii")
            throw DomainError("unknown format '" + cfg.format + "'");
        if (cfg.bound == 0 || cfg.bound < -1 || cfg.degree_cap <= 0 || cfg.precision_cap <= 0)
            throw DomainError("caps and bounds must be positive");
        if (semi->parsed()) return cmd_semigroup(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (code->parsed()) return cmd_code(cfg, out);
        if (pg->parsed()) return cmd_puregaps(cfg, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace agsg
