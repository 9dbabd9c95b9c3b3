#include "agsg/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace agsg {
namespace detail {

namespace {

// Dense polynomial arithmetic over Z_p, used only while building tables.
using Zp = std::vector<int>;  // c_0..c_d

Zp trim(Zp a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Zp mul_mod(const Zp& a, const Zp& b, const Zp& mod, int p) {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce modulo the monic modulus
    int k = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(r.size()) - 1; d >= k; --d) {
        int c = r[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int idx = d - k + i;
            r[idx] = ((r[idx] - c * mod[i]) % p + p) % p;
        }
    }
    r.resize(k, 0);
    return trim(r);
}

// Remainder of a by monic b over Z_p.
Zp rem(Zp a, const Zp& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
        int c = a[d];
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) {
            int idx = d - db + i;
            a[idx] = ((a[idx] - c * b[i]) % p + p) % p;
        }
    }
    return trim(a);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial division against all monic polynomials of degree 1..k/2.
bool is_irreducible(const Zp& mod, int p) {
    int k = static_cast<int>(mod.size()) - 1;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Zp div(d + 1, 0);
            div[d] = 1;
            long long t = c;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (rem(mod, div, p).empty()) return false;
        }
    }
    return true;
}

uint32_t coeffs_to_index(const Zp& c, int p, int k) {
    uint32_t idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
}

Zp index_to_coeffs(uint32_t idx, int p, int k) {
    Zp c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return c;
}

}  // namespace

struct FieldTables {
    int p = 0;
    int k = 0;
    uint32_t card = 0;
    std::vector<int> modulus;       // c_0..c_k, monic
    std::vector<uint32_t> explog;   // explog[e] = index of g^e, e in [0, card-1)
    std::vector<uint32_t> logtab;   // logtab[idx] = e, undefined at 0

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t r = 0, mul = 1;
        while (a != 0 || b != 0) {
            uint32_t d = (a % p + b % p) % p;
            r += d * mul;
            mul *= p;
            a /= p;
            b /= p;
        }
        return r;
    }

    uint32_t neg(uint32_t a) const {
        uint32_t r = 0, mul = 1;
        while (a != 0) {
            uint32_t d = (p - a % p) % p;
            r += d * mul;
            mul *= p;
            a /= p;
        }
        return r;
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return explog[(logtab[a] + logtab[b]) % (card - 1)];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of 0");
        return explog[(card - 1 - logtab[a]) % (card - 1)];
    }
};

}  // namespace detail

namespace {

using detail::FieldTables;

std::vector<int> builtin_modulus(int p, int k) {
    if (k == 1) return {0, 1};  // t
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},        // t^2+t+1
        {{2, 3}, {1, 1, 0, 1}},     // t^3+t+1
        {{2, 4}, {1, 1, 0, 0, 1}},  // t^4+t+1
        {{3, 2}, {1, 0, 1}},        // t^2+1
        {{3, 3}, {1, 2, 0, 1}},     // t^3+2t+1
        {{5, 2}, {1, 1, 1}},        // t^2+t+1
    };
    auto it = table.find({p, k});
    if (it == table.end()) throw DomainError("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) + "); supply one");
    return it->second;
}

std::shared_ptr<const FieldTables> build_tables(int p, int k, std::vector<int> modulus) {
    if (!detail::is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw DomainError("extension degree must be >= 1");
    long long card = 1;
    for (int i = 0; i < k; ++i) {
        card *= p;
        if (card > (1 << 16)) throw DomainError("field cardinality exceeds 2^16");
    }
    if (static_cast<int>(modulus.size()) != k + 1 || modulus[k] != 1)
        throw DomainError("modulus must be monic of degree k");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (!detail::is_irreducible(modulus, p)) throw DomainError("modulus is reducible over GF(" + std::to_string(p) + ")");

    auto t = std::make_shared<FieldTables>();
    t->p = p;
    t->k = k;
    t->card = static_cast<uint32_t>(card);
    t->modulus = modulus;

    // Find a primitive element and fill exp/log.
    t->explog.assign(t->card - 1, 0);
    t->logtab.assign(t->card, 0);
    for (uint32_t g = (k == 1 ? 2u : static_cast<uint32_t>(p)); g < t->card; ++g) {
        auto gc = detail::index_to_coeffs(g, p, k);
        detail::Zp pw = {1};
        uint32_t e = 0;
        bool primitive = true;
        std::vector<uint32_t> seen;
        seen.reserve(t->card);
        for (; e < t->card - 1; ++e) {
            uint32_t idx = detail::coeffs_to_index(pw, p, k);
            if (idx == 1 && e > 0) {
                primitive = false;
                break;
            }
            t->explog[e] = idx;
            pw = detail::mul_mod(pw, gc, modulus, p);
        }
        if (primitive) {
            for (uint32_t i = 0; i < t->card - 1; ++i) t->logtab[t->explog[i]] = i;
            return t;
        }
    }
    if (t->card == 2) {  // GF(2): trivial multiplicative group
        t->explog = {1};
        t->logtab = {0, 0};
        return t;
    }
    throw DomainError("no primitive element found (modulus bug?)");
}

}  // namespace

Field::Field(int p, int k) : tab_(build_tables(p, k, builtin_modulus(p, k))) {}
Field::Field(int p, int k, const std::vector<int>& modulus) : tab_(build_tables(p, k, modulus)) {}

int Field::p() const { return tab_->p; }
int Field::k() const { return tab_->k; }
uint32_t Field::card() const { return tab_->card; }
const std::vector<int>& Field::modulus() const { return tab_->modulus; }

Felt Field::zero() const { return Felt(tab_, 0); }
Felt Field::one() const { return Felt(tab_, 1); }
Felt Field::gen() const { return Felt(tab_, tab_->k == 1 ? 1u : static_cast<uint32_t>(tab_->p)); }

Felt Field::from_index(uint32_t idx) const {
    if (idx >= tab_->card) throw DomainError("element index out of range");
    return Felt(tab_, idx);
}

Felt Field::from_int(long long n) const {
    long long r = ((n % tab_->p) + tab_->p) % tab_->p;
    return Felt(tab_, static_cast<uint32_t>(r));
}

Felt Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > tab_->k) throw DomainError("too many coefficients");
    uint32_t idx = 0;
    for (int i = tab_->k - 1; i >= 0; --i) {
        int ci = i < static_cast<int>(c.size()) ? ((c[i] % tab_->p) + tab_->p) % tab_->p : 0;
        idx = idx * tab_->p + ci;
    }
    return Felt(tab_, idx);
}

std::vector<Felt> Field::elements() const {
    std::vector<Felt> out;
    out.reserve(tab_->card);
    for (uint32_t i = 0; i < tab_->card; ++i) out.emplace_back(Felt(tab_, i));
    return out;
}

static void check_same(const std::shared_ptr<const FieldTables>& ta, const std::shared_ptr<const FieldTables>& tb) {
    if (ta != tb) throw DomainError("elements of different fields");
}

Felt Felt::operator+(const Felt& o) const {
    check_same(tab_, o.tab_);
    return Felt(tab_, tab_->add(idx_, o.idx_));
}

Felt Felt::operator-() const { return Felt(tab_, tab_->neg(idx_)); }

Felt Felt::operator-(const Felt& o) const {
    check_same(tab_, o.tab_);
    return Felt(tab_, tab_->add(idx_, tab_->neg(o.idx_)));
}

Felt Felt::operator*(const Felt& o) const {
    check_same(tab_, o.tab_);
    return Felt(tab_, tab_->mul(idx_, o.idx_));
}

Felt Felt::operator/(const Felt& o) const {
    check_same(tab_, o.tab_);
    return Felt(tab_, tab_->mul(idx_, tab_->inv(o.idx_)));
}

bool Felt::operator==(const Felt& o) const {
    if (tab_ != o.tab_) throw DomainError("elements of different fields");
    return idx_ == o.idx_;
}

Felt Felt::inv() const { return Felt(tab_, tab_->inv(idx_)); }

Felt Felt::pow(long long e) const {
    if (idx_ == 0) {
        if (e < 0) throw DivisionByZero("0 to a negative power");
        return e == 0 ? Felt(tab_, 1) : *this;
    }
    long long ord = tab_->card - 1;
    long long r = ((static_cast<long long>(tab_->logtab[idx_]) * (e % ord)) % ord + ord) % ord;
    return Felt(tab_, tab_->explog[r]);
}

std::vector<int> Felt::coeffs() const {
    std::vector<int> c(tab_->k, 0);
    uint32_t v = idx_;
    for (int i = 0; i < tab_->k; ++i) {
        c[i] = static_cast<int>(v % tab_->p);
        v /= tab_->p;
    }
    return c;
}

std::string Felt::str() const {
    if (idx_ == 0) return "0";
    auto c = coeffs();
    std::ostringstream os;
    bool first = true;
    for (int i = tab_->k - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Field Felt::field() const { return Field(tab_); }

Felt Field::parse(const std::string& text) const {
    // integer literals and polynomials in w: "w+1", "2*w^2+w+2", "-1"
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    Felt acc = zero();
    skip();
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
        skip();
        if (pos >= text.size()) break;
        char ch = text[pos];
        if (ch == '+') {
            sign = 1;
            ++pos;
            expect_term = true;
            continue;
        }
        if (ch == '-') {
            sign = -1;
            ++pos;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("unexpected character in field element: " + text);
        long long coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coef = coef * 10 + (text[pos++] - '0');
            saw_coef = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }
        int deg = 0;
        if (pos < text.size() && text[pos] == 'w') {
            ++pos;
            deg = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("bad exponent in field element: " + text);
                deg = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    deg = deg * 10 + (text[pos++] - '0');
            }
        } else if (!saw_coef) {
            throw ParseError("unexpected character in field element: " + text);
        }
        if (deg >= tab_->k && !(deg == 0))
            throw ParseError("exponent " + std::to_string(deg) + " too large for GF(p^" + std::to_string(tab_->k) + ")");
        std::vector<int> c(tab_->k, 0);
        c[deg] = 1;
        acc += from_coeffs(c) * from_int(sign * coef);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !(text.find_first_not_of(" \t") == std::string::npos)) {
        // a bare sign with no term
        throw ParseError("empty term in field element: " + text);
    }
    return acc;
}

std::vector<int> rref(std::vector<std::vector<Felt>>& rows, const Field& field) {
    size_t cols = 0;
    for (auto& r : rows) cols = std::max(cols, r.size());
    for (auto& r : rows) r.resize(cols, field.zero());
    std::vector<int> pivots;
    size_t lead = 0;
    for (size_t col = 0; col < cols && lead < rows.size(); ++col) {
        size_t piv = lead;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        Felt s = rows[lead][col].inv();
        for (size_t j = col; j < cols; ++j) rows[lead][j] *= s;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col].is_zero()) continue;
            Felt f = rows[i][col];
            for (size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[lead][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++lead;
    }
    return pivots;
}

int rank_of(std::vector<std::vector<Felt>> rows, const Field& field) {
    return static_cast<int>(rref(rows, field).size());
}

Field field_of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int k = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
        return Field(p, k);
    }
    throw DomainError("invalid field order " + std::to_string(q));
}

}  // namespace agsg
