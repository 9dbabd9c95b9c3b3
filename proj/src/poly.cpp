#include "agsg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace agsg {

Felt BiPoly::coeff(int i, int j) const {
    auto it = terms_.find(Mono{i, j});
    return it == terms_.end() ? field_.zero() : it->second;
}

void BiPoly::set(int i, int j, const Felt& c) {
    if (c.is_zero())
        terms_.erase(Mono{i, j});
    else
        terms_[Mono{i, j}] = c;
}

void BiPoly::add_term(int i, int j, const Felt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Mono{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m.i, m.j, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m.i, m.j, -c);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(field_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r(field_);
    for (auto& [m, c] : terms_)
        for (auto& [n, d] : o.terms_) r.add_term(m.i + n.i, m.j + n.j, c * d);
    return r;
}

BiPoly BiPoly::operator*(const Felt& c) const {
    BiPoly r(field_);
    if (c.is_zero()) return r;
    for (auto& [m, d] : terms_) r.terms_[m] = c * d;
    return r;
}

std::pair<Mono, Felt> BiPoly::leading() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

int BiPoly::deg_x() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
}

int BiPoly::deg_y() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
}

int BiPoly::total_deg() const {
    if (terms_.empty()) return 0;
    return std::prev(terms_.end())->first.i + std::prev(terms_.end())->first.j;
}

Felt BiPoly::eval(const Felt& x, const Felt& y) const {
    Felt r = field_.zero();
    for (auto& [m, c] : terms_) r += c * x.pow(m.i) * y.pow(m.j);
    return r;
}

BiPoly BiPoly::shifted(const Felt& a, const Felt& b) const {
    BiPoly x_plus_a(field_);
    x_plus_a.set(1, 0, field_.one());
    x_plus_a.add_term(0, 0, a);
    BiPoly y_plus_b(field_);
    y_plus_b.set(0, 1, field_.one());
    y_plus_b.add_term(0, 0, b);
    BiPoly r(field_);
    for (auto& [m, c] : terms_) {
        BiPoly t(field_, c);
        for (int e = 0; e < m.i; ++e) t = t * x_plus_a;
        for (int e = 0; e < m.j; ++e) t = t * y_plus_b;
        r = r + t;
    }
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r(field_);
    for (auto& [m, c] : terms_)
        if (m.j > 0) r.add_term(m.i, m.j - 1, c * field_.from_int(m.j));
    return r;
}

bool BiPoly::is_x_only() const {
    for (auto& [m, c] : terms_)
        if (m.j != 0) return false;
    return true;
}

Mono BiPoly::strip_monomial() {
    if (terms_.empty()) return {0, 0};
    int mi = terms_.begin()->first.i, mj = terms_.begin()->first.j;
    for (auto& [m, c] : terms_) {
        mi = std::min(mi, m.i);
        mj = std::min(mj, m.j);
    }
    if (mi == 0 && mj == 0) return {0, 0};
    std::map<Mono, Felt> out;
    for (auto& [m, c] : terms_) out[Mono{m.i - mi, m.j - mj}] = c;
    terms_ = std::move(out);
    return {mi, mj};
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest order first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        auto& [m, c] = *it;
        bool unit = c.is_one() && (m.i > 0 || m.j > 0);
        if (!unit) {
            std::string cs = c.str();
            bool needs_parens = cs.find('+') != std::string::npos;
            os << (needs_parens ? "(" + cs + ")" : cs);
            if (m.i > 0 || m.j > 0) os << "*";
        }
        if (m.i > 0) {
            os << "x";
            if (m.i > 1) os << "^" << m.i;
            if (m.j > 0) os << "*";
        }
        if (m.j > 0) {
            os << "y";
            if (m.j > 1) os << "^" << m.j;
        }
    }
    return os.str();
}

namespace {

// dense coefficient vector in x of an x-only BiPoly
std::vector<Felt> to_dense(const BiPoly& a) {
    std::vector<Felt> v(a.deg_x() + 1, a.field().zero());
    for (auto& [m, c] : a.terms()) v[m.i] = c;
    return v;
}

BiPoly from_dense(const Field& f, const std::vector<Felt>& v) {
    BiPoly p(f);
    for (size_t i = 0; i < v.size(); ++i) p.set(static_cast<int>(i), 0, v[i]);
    return p;
}

void trim(std::vector<Felt>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// remainder of a by b, in place on a
void rem_dense(std::vector<Felt>& a, const std::vector<Felt>& b) {
    Felt lead = b.back();
    while (a.size() >= b.size()) {
        Felt q = a.back() / lead;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
        if (a.empty()) break;
    }
}

}  // namespace

BiPoly gcd_in_x(const BiPoly& a, const BiPoly& b) {
    if (!a.is_x_only() || !b.is_x_only()) throw DomainError("gcd_in_x: operands must be polynomials in x");
    if (a.is_zero() || b.is_zero()) throw DomainError("gcd_in_x: zero operand");
    auto u = to_dense(a), v = to_dense(b);
    while (!v.empty()) {
        rem_dense(u, v);
        std::swap(u, v);
    }
    Felt lead = u.back();
    for (auto& c : u) c = c / lead;
    return from_dense(a.field(), u);
}

BiPoly div_in_x(const BiPoly& a, const BiPoly& b) {
    if (!a.is_x_only() || !b.is_x_only()) throw DomainError("div_in_x: operands must be polynomials in x");
    if (b.is_zero()) throw DivisionByZero("div_in_x by zero");
    auto u = to_dense(a);
    auto v = to_dense(b);
    std::vector<Felt> q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0, a.field().zero());
    Felt lead = v.back();
    while (u.size() >= v.size()) {
        Felt c = u.back() / lead;
        size_t off = u.size() - v.size();
        q[off] = c;
        for (size_t i = 0; i < v.size(); ++i) u[off + i] -= c * v[i];
        trim(u);
        if (u.empty()) break;
    }
    if (!u.empty()) throw DomainError("div_in_x: not divisible");
    return from_dense(a.field(), q);
}

}  // namespace agsg
