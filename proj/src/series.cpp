#include "agsg/series.hpp"

#include <algorithm>
#include <sstream>

namespace agsg {

void Series::trim() {
    size_t z = 0;
    while (z < c_.size() && c_[z].is_zero()) ++z;
    if (z > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
        base_ += static_cast<long>(z);
    }
}

Series Series::monomial(const Field& f, const Felt& c, long e, long known_until) {
    Series s(f, known_until);
    if (e >= known_until) throw DomainError("monomial exponent beyond precision");
    if (!c.is_zero()) {
        s.base_ = e;
        s.c_.assign(static_cast<size_t>(known_until - e), f.zero());
        s.c_[0] = c;
    }
    return s;
}

std::optional<long> Series::lead() const {
    if (c_.empty()) return std::nullopt;
    return base_;  // trim() keeps c_[0] nonzero
}

Felt Series::lead_coeff() const {
    if (c_.empty()) throw DomainError("lead of series with no known nonzero term");
    return c_[0];
}

Felt Series::coeff(long e) const {
    if (e >= known_until()) throw DomainError("series coefficient beyond precision");
    if (e < base_) return field_.zero();
    return c_[static_cast<size_t>(e - base_)];
}

Series Series::operator+(const Series& o) const {
    long until = std::min(known_until(), o.known_until());
    long base = std::min(base_, o.base_);
    Series r(field_, until);
    if (base >= until) return r;
    r.base_ = base;
    r.c_.assign(static_cast<size_t>(until - base), field_.zero());
    for (size_t i = 0; i < c_.size() && base_ + static_cast<long>(i) < until; ++i)
        r.c_[static_cast<size_t>(base_ - base) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size() && o.base_ + static_cast<long>(i) < until; ++i)
        r.c_[static_cast<size_t>(o.base_ - base) + i] += o.c_[i];
    r.trim();
    return r;
}

Series Series::operator-(const Series& o) const { return *this + o * (-field_.one()); }

Series Series::operator*(const Felt& c) const {
    Series r(field_, known_until());
    if (c.is_zero()) return r;
    r.base_ = base_;
    r.c_ = c_;
    for (auto& v : r.c_) v *= c;
    return r;
}

Series Series::operator*(const Series& o) const {
    // a zero factor is known-zero through a shifted precision window
    if (c_.empty() || o.c_.empty()) {
        long until = std::min(base_ + o.known_until(), o.base_ + known_until());
        return Series(field_, until);
    }
    long until = std::min(base_ + o.known_until(), o.base_ + known_until());
    long base = base_ + o.base_;
    Series r(field_, until);
    r.base_ = base;
    r.c_.assign(static_cast<size_t>(until - base), field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long e1 = base_ + static_cast<long>(i);
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long e = e1 + o.base_ + static_cast<long>(j);
            if (e >= until) break;
            r.c_[static_cast<size_t>(e - base)] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

Series Series::inverse() const {
    if (c_.empty())
        throw PrecisionUndecided("series inverse: no nonzero term within known precision");
    size_t n = c_.size();
    Series r(field_, -base_ + static_cast<long>(n));
    r.base_ = -base_;
    r.c_.assign(n, field_.zero());
    Felt c0i = c_[0].inv();
    r.c_[0] = c0i;
    for (size_t m = 1; m < n; ++m) {
        Felt acc = field_.zero();
        for (size_t i = 1; i <= m; ++i) acc += c_[i] * r.c_[m - i];
        r.c_[m] = -(c0i * acc);
    }
    r.trim();
    return r;
}

Series Series::truncated(long until) const {
    until = std::min(until, known_until());
    Series r(field_, until);
    if (base_ < until && !c_.empty()) {
        r.base_ = base_;
        r.c_.assign(c_.begin(), c_.begin() + static_cast<long>(std::min<long>(static_cast<long>(c_.size()), until - base_)));
        r.trim();
    }
    return r;
}

std::string Series::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long e = base_ + static_cast<long>(i);
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].str();
        if (e == 0) {
            os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c_[i].is_one()) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << known_until() << ")";
    return os.str();
}

}  // namespace agsg
