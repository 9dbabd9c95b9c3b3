#include "agsg/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace agsg {

std::string EvalCode::csv() const {
    std::string out;
    for (const auto& row : genMatrix) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += row[j].str();
        }
        out += "\n";
    }
    return out;
}

std::vector<AffinePoint> default_points(const Curve& curve) {
    Place P = curve.placeP(), Q = curve.placeQ();
    std::vector<AffinePoint> pts;
    for (const AffinePoint& pt : curve.rational_points()) {
        Place pl{false, pt.x, pt.y};
        if (pl == P || pl == Q) continue;
        pts.push_back(pt);
    }
    return pts;
}

EvalCode build_code(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                    const std::vector<WitnessedPoint>& basis, long m, long n,
                    const std::vector<AffinePoint>& points) {
    const Curve& curve = wrho.curve();
    if (m < 0 || n < 0) throw DomainError("build_code: m, n must be >= 0");
    if (m > view.bound || n > view.bound) throw BoxTooSmall("build_code: (m,n) outside the computed box");
    if (points.empty()) throw DomainError("build_code: no evaluation points");
    Place P = curve.placeP(), Q = curve.placeQ();
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const AffinePoint& pt : points) {
        if (!seen.insert({pt.x.index(), pt.y.index()}).second)
            throw DomainError("build_code: duplicate evaluation point");
        Place pl{false, pt.x, pt.y};
        if (pl == P || pl == Q) throw DomainError("build_code: evaluation point equals a designated place");
        if (!curve.equation().eval(pt.x, pt.y).is_zero() && curve.kind() != CurveKind::ProjectiveLine)
            throw DomainError("build_code: evaluation point is not on the curve");
    }

    EvalCode code{curve, m, n, points, {}, 0, std::nullopt, std::nullopt, false};
    // keep each witness evaluation row iff it is independent of the
    // kept ones (dependence is possible only when N <= m + n)
    std::vector<std::vector<Felt>> echelon;
    for (const WitnessedPoint& w : basis) {
        if (w.point.a > m || w.point.b > n) continue;
        std::vector<Felt> row;
        row.reserve(points.size());
        for (const AffinePoint& pt : points) row.push_back(w.witness.evaluate(pt));
        echelon.push_back(row);
        if (rref(echelon, curve.field()).size() == echelon.size())
            code.genMatrix.push_back(std::move(row));
        else
            echelon.pop_back();
    }
    code.k = static_cast<int>(code.genMatrix.size());
    code.trivial = code.k == 0;
    long dl = code.N() - m - n;
    if (dl > 0) code.dLower = dl;
    return code;
}

EvalCode build_code(const Curve& curve, long m, long n, const std::vector<AffinePoint>& points) {
    NearWeight wr(curve, curve.placeP()), ws(curve, curve.placeQ());
    long B = std::max({m, n, 2L * curve.genus() + 2});
    SemigroupView view = compute_H(wr, ws, B);
    std::vector<WitnessedPoint> basis = build_basis(wr, ws, view, spanning_pool(curve, B));
    return build_code(wr, ws, view, basis, m, n, points);
}

long min_distance(const EvalCode& code, long long cap) {
    if (code.trivial || code.k == 0) throw DomainError("min_distance: trivial code");
    const Field& F = code.curve.field();
    long long total = 1;
    for (int i = 0; i < code.k; ++i) {
        total *= F.card();
        if (total > cap) throw TooLarge("min_distance: q^k exceeds the enumeration cap");
    }

    std::vector<Felt> elts = F.elements();
    const long N = code.N();
    std::vector<Felt> word(N, F.zero());
    std::vector<uint32_t> digit(code.k, 0);
    std::vector<bool> up(code.k, true);
    int nonzero_digits = 0;
    long best = N + 1;

    auto visit = [&]() {
        if (nonzero_digits == 0) return;
        long w = 0;
        for (const Felt& c : word)
            if (!c.is_zero()) ++w;
        best = std::min(best, w);
    };
    // q-ary reflected Gray enumeration: exactly one digit moves per step
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos < 0) {
            visit();
            return;
        }
        self(self, pos - 1);
        for (uint32_t s = 1; s < F.card(); ++s) {
            uint32_t old = digit[pos];
            uint32_t next = up[pos] ? old + 1 : old - 1;
            Felt delta = elts[next] - elts[old];
            for (long j = 0; j < N; ++j) word[j] += delta * code.genMatrix[pos][j];
            if (old == 0) ++nonzero_digits;
            if (next == 0) --nonzero_digits;
            digit[pos] = next;
            self(self, pos - 1);
        }
        up[pos] = !up[pos];
    };
    rec(rec, code.k - 1);
    return best;
}

PureGapTable pure_gap_experiment(const NearWeight& wrho, const NearWeight& wsigma, const SemigroupView& view,
                                 const std::vector<AffinePoint>& points, long long distance_cap) {
    PureGapTable table;
    std::vector<GridPoint> pure = pure_gaps(view);
    if (pure.empty()) {
        table.note = "no pure gaps";
        return table;
    }
    std::set<GridPoint> pureSet(pure.begin(), pure.end());
    std::vector<WitnessedPoint> basis =
        build_basis(wrho, wsigma, view, spanning_pool(wrho.curve(), view.bound));

    auto fill = [&](long m, long n, int& k, std::optional<long>& dl, std::optional<long>& dx) {
        EvalCode c = build_code(wrho, wsigma, view, basis, m, n, points);
        k = c.k;
        dl = c.dLower;
        try {
            dx = min_distance(c, distance_cap);
        } catch (const TooLarge&) {
            dx = std::nullopt;
        }
    };
    for (const GridPoint& pg : pure) {
        // deterministic reference: lexicographically first non-pure point
        // on the same antidiagonal
        std::optional<GridPoint> ref;
        for (long a = 0; a <= pg.a + pg.b && !ref; ++a) {
            GridPoint cand{a, pg.a + pg.b - a};
            if (cand.a <= view.bound && cand.b <= view.bound && !pureSet.count(cand) && cand != pg) ref = cand;
        }
        if (!ref) continue;
        PureGapRow row;
        row.pureGap = pg;
        row.reference = *ref;
        row.N = static_cast<long>(points.size());
        fill(pg.a, pg.b, row.kPure, row.dLowerPure, row.dExactPure);
        fill(ref->a, ref->b, row.kRef, row.dLowerRef, row.dExactRef);
        table.rows.push_back(row);
    }
    return table;
}

std::string PureGapTable::ascii() const {
    auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::ostringstream os;
    if (!note.empty()) {
        os << note << "\n";
        return os.str();
    }
    os << "pure gap   reference  N   k/kref  dLower/ref  dExact/ref\n";
    for (const PureGapRow& r : rows) {
        std::string a = r.pureGap.str(), b = r.reference.str();
        a.resize(11, ' ');
        b.resize(11, ' ');
        os << a << b << r.N << "   " << r.kPure << "/" << r.kRef << "     " << opt(r.dLowerPure) << "/"
           << opt(r.dLowerRef) << "         " << opt(r.dExactPure) << "/" << opt(r.dExactRef) << "\n";
    }
    return os.str();
}

}  // namespace agsg
