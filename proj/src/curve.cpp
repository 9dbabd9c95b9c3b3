#include "agsg/curve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace agsg {

namespace detail {

struct CurveImpl {
    Field field;
    CurveKind kind;
    int q = 0;
    int genus = 0;
    BiPoly equation;
    int ydeg = 0;        // deg_y of the monic equation; 0 on the projective line
    BiPoly ysubst;       // y^ydeg = ysubst (deg_y < ydeg)
    Place P, Q;

    mutable std::mutex cache_mu;
    mutable std::map<std::pair<uint32_t, uint32_t>, Series> ycache;

    CurveImpl(const Field& f) : field(f), equation(f), ysubst(f) {}

    bool has_y() const { return ydeg > 0; }

    BiPoly reduce(BiPoly p) const {
        if (!has_y()) return p;
        while (p.deg_y() >= ydeg) {
            BiPoly next(field);
            for (auto& [m, c] : p.terms()) {
                if (m.j < ydeg) {
                    next.add_term(m.i, m.j, c);
                } else {
                    BiPoly repl = ysubst * BiPoly::monomial(field, m.i, m.j - ydeg, c);
                    next = next + repl;
                }
            }
            p = std::move(next);
        }
        return p;
    }

    // -v at the place at infinity of a reduced polynomial
    long infinity_weight(const BiPoly& p) const {
        long w = 0;
        bool first = true;
        for (auto& [m, c] : p.terms()) {
            long t = kind == CurveKind::Hermitian ? static_cast<long>(q) * m.i + static_cast<long>(q + 1) * m.j
                                                  : static_cast<long>(m.i);
            if (first || t > w) w = t;
            first = false;
        }
        return w;
    }

    // Power series of y in the uniformizer t = x - a at an affine place,
    // by Newton iteration; requires E_y(a,b) != 0.
    Series y_series(const Place& pl, long prec) const {
        std::pair<uint32_t, uint32_t> key{pl.x.index(), pl.y.index()};
        {
            std::lock_guard<std::mutex> lk(cache_mu);
            auto it = ycache.find(key);
            if (it != ycache.end() && it->second.known_until() >= prec) return it->second.truncated(prec);
        }
        BiPoly ey = equation.dy();
        if (ey.eval(pl.x, pl.y).is_zero())
            throw DomainError("place " + pl.str() + " is not smooth in y; no uniformizer t = x - a");

        long window = 2;
        Series yk = Series::monomial(field, pl.y, 0, window) + Series(field, window);
        while (true) {
            Series xs = Series::monomial(field, pl.x, 0, window) + Series::monomial(field, field.one(), 1, window);
            Series e = eval_series(equation, xs, yk.truncated(window));
            Series d = eval_series(ey, xs, yk.truncated(window));
            yk = yk.truncated(window) - e * d.inverse();
            yk = yk.truncated(window);
            if (window >= prec) break;
            window = std::min(prec, window * 2);
            // re-widen the knowledge window; coefficients beyond the old
            // window are refined by the next iteration
            yk = widen(yk, window);
        }
        Series out = yk.truncated(prec);
        std::lock_guard<std::mutex> lk(cache_mu);
        auto [it, ins] = ycache.try_emplace(key, out);
        if (!ins && it->second.known_until() < out.known_until()) it->second = out;
        return out;
    }

    static Series widen(const Series& s, long until) {
        Series r(s.field(), until);
        if (auto l = s.lead()) {
            r = Series(s.field(), until);
            Series acc(s.field(), until);
            for (long e = *l; e < s.known_until(); ++e)
                acc = acc + Series::monomial(s.field(), s.coeff(e), e, until);
            return acc;
        }
        return r;
    }

    static Series eval_series(const BiPoly& p, const Series& xs, const Series& ys) {
        const Field& f = p.field();
        long until = std::min(xs.known_until(), ys.known_until());
        if (p.is_zero()) return Series(f, until);
        int dx = p.deg_x(), dyd = p.deg_y();
        std::vector<Series> xpow, ypow;
        xpow.reserve(dx + 1);
        ypow.reserve(dyd + 1);
        xpow.push_back(Series::monomial(f, f.one(), 0, until));
        for (int i = 1; i <= dx; ++i) xpow.push_back((xpow.back() * xs).truncated(until));
        ypow.push_back(Series::monomial(f, f.one(), 0, until));
        for (int j = 1; j <= dyd; ++j) ypow.push_back((ypow.back() * ys).truncated(until));
        Series r(f, until);
        for (auto& [m, c] : p.terms()) r = r + (xpow[m.i] * ypow[m.j]).truncated(until) * c;
        return r.truncated(until);
    }

    Series expand_poly(const BiPoly& p, const Place& pl, long prec) const {
        Series xs = Series::monomial(field, pl.x, 0, prec) + Series::monomial(field, field.one(), 1, prec);
        if (!has_y() || p.deg_y() == 0) return eval_series(p, xs, Series(field, prec));
        return eval_series(p, xs, y_series(pl, prec));
    }
};

}  // namespace detail

using detail::CurveImpl;

std::string Place::str() const {
    if (at_infinity) return "Pinf";
    return "(" + x.str() + "," + y.str() + ")";
}

// ---------------------------------------------------------------- Curve

Curve Curve::projective_line(const Field& f) {
    auto impl = std::make_shared<CurveImpl>(f);
    impl->kind = CurveKind::ProjectiveLine;
    impl->genus = 0;
    impl->P = Place{true, f.zero(), f.zero()};
    impl->Q = Place{false, f.zero(), f.zero()};
    return Curve(impl);
}

Curve Curve::hermitian(int q) {
    if (q < 2) throw DomainError("hermitian: q must be >= 2");
    // q must be a prime power p^e; the base field is GF(p^(2e))
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    for (long t = q; t > 1; t /= p, ++e)
        if (t % p != 0) throw DomainError("hermitian: q must be a prime power");
    Field f(p, 2 * e);
    auto impl = std::make_shared<CurveImpl>(f);
    impl->kind = CurveKind::Hermitian;
    impl->q = q;
    impl->genus = q * (q - 1) / 2;
    BiPoly eq(f);
    eq.set(0, q, f.one());
    eq.add_term(0, 1, f.one());
    eq.add_term(q + 1, 0, -f.one());  // y^q + y - x^(q+1)
    impl->equation = eq;
    impl->ydeg = q;
    BiPoly ys(f);
    ys.set(q + 1, 0, f.one());
    ys.add_term(0, 1, -f.one());  // y^q = x^(q+1) - y
    impl->ysubst = ys;
    impl->P = Place{true, f.zero(), f.zero()};
    impl->Q = Place{false, f.zero(), f.zero()};
    return Curve(impl);
}

Curve Curve::custom_plane(const Field& f, const BiPoly& equation, const Place& P, const Place& Q, int genus) {
    if (P.at_infinity || Q.at_infinity)
        throw DomainError("custom_plane: designated places must be affine smooth points");
    if (P == Q) throw DomainError("custom_plane: P and Q must differ");
    int d = equation.deg_y();
    if (d < 1) throw DomainError("custom_plane: equation must involve y");
    BiPoly lead(f);
    for (auto& [m, c] : equation.terms())
        if (m.j == d) lead.add_term(m.i, 0, c);
    if (!(lead == BiPoly(f, f.one()))) throw DomainError("custom_plane: equation must be monic in y");
    if (genus < 0) throw DomainError("custom_plane: genus must be non-negative");
    auto impl = std::make_shared<CurveImpl>(f);
    impl->kind = CurveKind::CustomPlane;
    impl->genus = genus;
    impl->equation = equation;
    impl->ydeg = d;
    BiPoly ys(f);
    ys.set(0, d, f.one());
    impl->ysubst = ys - equation;  // y^d = y^d - E
    impl->P = P;
    impl->Q = Q;
    for (const Place& pl : {P, Q}) {
        if (!equation.eval(pl.x, pl.y).is_zero()) throw DomainError("custom_plane: " + pl.str() + " is not on the curve");
        if (equation.dy().eval(pl.x, pl.y).is_zero())
            throw DomainError("custom_plane: " + pl.str() + " has E_y = 0; supply a smooth point");
    }
    return Curve(impl);
}

const Field& Curve::field() const { return impl_->field; }
CurveKind Curve::kind() const { return impl_->kind; }
int Curve::q() const { return impl_->q; }
int Curve::genus() const { return impl_->genus; }
const BiPoly& Curve::equation() const { return impl_->equation; }
Place Curve::placeP() const { return impl_->P; }
Place Curve::placeQ() const { return impl_->Q; }

Func Curve::x() const {
    return Func(*this, BiPoly::monomial(field(), 1, 0, field().one()), BiPoly(field(), field().one()));
}

Func Curve::y() const {
    if (!impl_->has_y()) throw DomainError("the projective line backend has no y");
    return Func(*this, BiPoly::monomial(field(), 0, 1, field().one()), BiPoly(field(), field().one()));
}

Func Curve::constant(const Felt& c) const { return Func(*this, BiPoly(field(), c), BiPoly(field(), field().one())); }
Func Curve::zero() const { return constant(field().zero()); }
Func Curve::one() const { return constant(field().one()); }

std::vector<AffinePoint> Curve::rational_points() const {
    std::vector<AffinePoint> pts;
    if (impl_->kind == CurveKind::ProjectiveLine) {
        for (auto a : field().elements()) pts.push_back({a, field().zero()});
        return pts;
    }
    for (auto a : field().elements())
        for (auto b : field().elements())
            if (impl_->equation.eval(a, b).is_zero()) pts.push_back({a, b});
    return pts;
}

// ---------------------------------------------------------------- Func

Func::Func(const Curve& curve, const BiPoly& num, const BiPoly& den) : curve_(curve), num_(num), den_(den) {
    const auto& impl = *curve_.impl_;
    if (!impl.has_y() && (num_.deg_y() > 0 || den_.deg_y() > 0))
        throw DomainError("y is not a function on the projective line");
    num_ = impl.reduce(num_);
    den_ = impl.reduce(den_);
    if (den_.is_zero()) throw DivisionByZero("function with zero denominator");
    if (num_.is_zero()) {
        den_ = BiPoly(curve_.field(), curve_.field().one());
        return;
    }
    // cancel common monomial factors x^i y^j (before any further reduction)
    BiPoly n = num_, d = den_;
    Mono mn = n.strip_monomial();
    Mono md = d.strip_monomial();
    int ci = std::min(mn.i, md.i), cj = std::min(mn.j, md.j);
    num_ = impl.reduce(n * BiPoly::monomial(curve_.field(), mn.i - ci, mn.j - cj, curve_.field().one()));
    den_ = impl.reduce(d * BiPoly::monomial(curve_.field(), md.i - ci, md.j - cj, curve_.field().one()));
    // cancel an x-only gcd when both sides are polynomials in x
    if (num_.is_x_only() && den_.is_x_only()) {
        BiPoly g = gcd_in_x(num_, den_);
        if (g.deg_x() > 0) {
            num_ = div_in_x(num_, g);
            den_ = div_in_x(den_, g);
        }
    }
    Felt lc = den_.leading().second;
    if (!lc.is_one()) {
        Felt s = lc.inv();
        num_ = num_ * s;
        den_ = den_ * s;
    }
}

bool Func::is_constant() const { return num_.total_deg() == 0 && den_.total_deg() == 0; }

static void check_same_curve(const Curve& a, const Curve& b) {
    if (!a.same(b)) throw DomainError("functions on different curves");
}

Func Func::operator+(const Func& o) const {
    check_same_curve(curve_, o.curve_);
    return Func(curve_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Func Func::operator-(const Func& o) const {
    check_same_curve(curve_, o.curve_);
    return Func(curve_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Func Func::operator-() const { return Func(curve_, -num_, den_); }

Func Func::operator*(const Func& o) const {
    check_same_curve(curve_, o.curve_);
    return Func(curve_, num_ * o.num_, den_ * o.den_);
}

Func Func::operator*(const Felt& c) const { return Func(curve_, num_ * c, den_); }

Func Func::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero function");
    return Func(curve_, den_, num_);
}

Func Func::operator/(const Func& o) const { return *this * o.inv(); }

Func Func::pow(long e) const {
    Func base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Func r = curve_.one();
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Func::operator==(const Func& o) const {
    check_same_curve(curve_, o.curve_);
    return curve_.impl_->reduce(num_ * o.den_ - o.num_ * den_).is_zero();
}

long Func::valuation(const Place& place) const {
    if (is_zero()) throw DomainError("valuation of the zero function (it is +infinity)");
    const auto& impl = *curve_.impl_;
    if (place.at_infinity) {
        if (impl.kind == CurveKind::CustomPlane)
            throw DomainError("custom backend has no place at infinity");
        return impl.infinity_weight(den_) - impl.infinity_weight(num_);
    }
    long bound = std::max(1, num_.total_deg() + den_.total_deg() + 1) * (impl.ydeg + 1);
    long prec = 4 * bound;
    for (int attempt = 0; attempt <= 6; ++attempt, prec *= 2) {
        Series ns = impl.expand_poly(num_, place, prec);
        Series ds = impl.expand_poly(den_, place, prec);
        auto ln = ns.lead();
        auto ld = ds.lead();
        if (ln && ld) return *ln - *ld;
    }
    throw PrecisionUndecided("valuation at " + place.str() + ": no nonzero term within the precision cap");
}

LocalExpansion Func::expand_at(const Place& place, int precision) const {
    if (is_zero()) throw DomainError("expansion of the zero function");
    if (precision < 1) throw DomainError("precision must be >= 1");
    if (place.at_infinity) throw DomainError("series expansion at the place at infinity is not supported");
    const auto& impl = *curve_.impl_;
    long bound = std::max(1, num_.total_deg() + den_.total_deg() + 1) * (impl.ydeg + 1);
    long prec = 4 * std::max<long>(bound, precision);
    for (int attempt = 0; attempt <= 6; ++attempt, prec *= 2) {
        Series ns = impl.expand_poly(num_, place, prec);
        Series ds = impl.expand_poly(den_, place, prec);
        if (!ns.lead() || !ds.lead()) continue;
        Series r = ns * ds.inverse();
        if (r.lead() && r.known_until() - *r.lead() >= precision) {
            return LocalExpansion{place, r.truncated(*r.lead() + precision)};
        }
    }
    throw PrecisionUndecided("expansion at " + place.str() + ": precision cap exhausted");
}

long LocalExpansion::lead() const {
    auto l = series.lead();
    if (!l) throw PrecisionUndecided("expansion has no nonzero term within precision");
    return *l;
}

Felt Func::evaluate(const AffinePoint& pt) const {
    const auto& impl = *curve_.impl_;
    for (const Place& pl : {impl.P, impl.Q})
        if (!pl.at_infinity && pl.x == pt.x && (!impl.has_y() || pl.y == pt.y))
            throw DomainError("evaluation at a designated place");
    Felt dv = den_.eval(pt.x, pt.y);
    if (!dv.is_zero()) return num_.eval(pt.x, pt.y) / dv;
    if (is_zero()) return curve_.field().zero();
    // denominator vanishes: settle it with a local expansion
    Place pl{false, pt.x, pt.y};
    if (impl.has_y() && impl.equation.dy().eval(pt.x, pt.y).is_zero())
        throw EvaluationFailed("indeterminate form at a non-smooth point " + pl.str());
    long v = valuation(pl);
    if (v < 0) throw PoleError("pole of order " + std::to_string(-v) + " at " + pl.str());
    if (v > 0) return curve_.field().zero();
    LocalExpansion e = expand_at(pl, 1);
    return e.series.lead_coeff();
}

std::string Func::str() const {
    if (den_ == BiPoly(curve_.field(), curve_.field().one())) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const Curve& curve;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Func expr() {
        skip();
        bool neg = false;
        while (true) {
            if (eat('-')) {
                neg = !neg;
                continue;
            }
            if (eat('+')) continue;
            break;
        }
        Func v = term();
        if (neg) v = -v;
        while (true) {
            skip();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                break;
        }
        return v;
    }

    Func term() {
        Func v = factor();
        while (true) {
            skip();
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                break;
        }
        return v;
    }

    Func factor() {
        Func v = base();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw ParseError("expected exponent in: " + s);
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e = e * 10 + (s[pos++] - '0');
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    Func base() {
        skip();
        if (pos >= s.size()) throw ParseError("unexpected end of input in: " + s);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Func v = expr();
            if (!eat(')')) throw ParseError("missing ')' in: " + s);
            return v;
        }
        if (c == 'x') {
            ++pos;
            return curve.x();
        }
        if (c == 'y') {
            ++pos;
            return curve.y();
        }
        if (c == 'w') {
            ++pos;
            return curve.constant(curve.field().gen());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) n = n * 10 + (s[pos++] - '0');
            return curve.constant(curve.field().from_int(n));
        }
        throw ParseError(std::string("unexpected character '") + c + "' in: " + s);
    }
};

}  // namespace

Func Curve::parse(const std::string& text) const {
    Parser p{*this, text};
    Func v = p.expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("trailing input in: " + text);
    return v;
}

}  // namespace agsg
