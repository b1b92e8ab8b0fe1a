#include "qtri/scalar.hpp"

#include <sstream>
#include <vector>

namespace qtri {

bool LaurentScalar::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentScalar::isUnitMonomial(std::int64_t* e, bool* negative) const {
    if (terms_.size() != 1) return false;
    const auto& [exp, c] = *terms_.begin();
    if (c != 1 && c != -1) return false;
    if (e) *e = exp;
    if (negative) *negative = (c == -1);
    return true;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const { return *this + (-o); }

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    LaurentScalar r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Integer& c = r.terms_[e1 + e2];
            c += c1 * c2;
            if (c == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

LaurentScalar LaurentScalar::reflected() const {
    LaurentScalar r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentScalar LaurentScalar::shifted(std::int64_t e) const {
    LaurentScalar r;
    for (const auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
    return r;
}

Integer LaurentScalar::atOne() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending hq exponent
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (it->first == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "hq^" << it->first;
        }
    }
    return os.str();
}

LaurentScalar qPower(int n, std::int64_t num, std::int64_t den) {
    if (n <= 0) throw std::invalid_argument("qPower: n must be positive");
    if (den == 0) throw std::invalid_argument("qPower: zero denominator");
    // q^{num/den} = hq^{2 n^2 num / den}
    std::int64_t top = 2 * static_cast<std::int64_t>(n) * n * num;
    if (top % den != 0)
        throw std::invalid_argument("qPower: q^(" + std::to_string(num) + "/" + std::to_string(den) +
                                    ") is not an integer power of hq for n=" + std::to_string(n));
    return LaurentScalar::hqPow(top / den);
}

LaurentScalar quantumInt(int n, int m) {
    if (m < 0) throw std::invalid_argument("quantumInt: m must be non-negative");
    LaurentScalar s;
    for (int e = m - 1; e >= 1 - m; e -= 2) s += qPower(n, e);
    return s;
}

LaurentScalar quantumFactorial(int n, int m) {
    LaurentScalar r(1);
    for (int i = 1; i <= m; ++i) r *= quantumInt(n, i);
    return r;
}

RingConstants ringConstants(int n) {
    RingConstants k;
    k.t = qPower(n, n * n - 1, n);
    if (n % 2 == 0) k.t = -k.t;
    k.a = qPower(n, (1 - n) * (2 * n + 1), 4);
    k.c.resize(n);
    for (int i = 1; i <= n; ++i) {
        LaurentScalar v = qPower(n, n - 1, 2 * n) * qPower(n, n - i);
        if ((n - i) % 2 == 1) v = -v;
        k.c[i - 1] = v;
    }
    return k;
}

}  // namespace qtri
