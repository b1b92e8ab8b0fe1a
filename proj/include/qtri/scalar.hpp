#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace qtri {

using Integer = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in the quantum parameter hq with Integer
/// coefficients. This is the coefficient ring of every algebra in the
/// library. Terms are kept in canonical form: no zero coefficients.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(long v) { if (v != 0) terms_[0] = v; }
    LaurentScalar(const Integer& v) { if (v != 0) terms_[0] = v; }

    /// c * hq^e
    static LaurentScalar term(const Integer& c, std::int64_t e) {
        LaurentScalar s;
        if (c != 0) s.terms_[e] = c;
        return s;
    }
    static LaurentScalar hqPow(std::int64_t e) { return term(1, e); }

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    /// single term with coefficient +1 or -1; exponent reported via *e
    bool isUnitMonomial(std::int64_t* e = nullptr, bool* negative = nullptr) const;

    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }
    bool operator<(const LaurentScalar& o) const { return terms_ < o.terms_; }

    /// hq -> hq^{-1}, termwise
    LaurentScalar reflected() const;

    /// multiply by hq^e
    LaurentScalar shifted(std::int64_t e) const;

    /// value at hq = 1
    Integer atOne() const;

    /// terms sorted by descending hq exponent, e.g. "hq^4 - hq^-4"
    std::string str() const;

    const std::map<std::int64_t, Integer>& terms() const { return terms_; }

private:
    std::map<std::int64_t, Integer> terms_;  // exponent -> coefficient
};

/// q = hq^{2n^2}; returns q^{num/den}, rejecting non-integral hq exponents.
LaurentScalar qPower(int n, std::int64_t num, std::int64_t den = 1);

/// quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}
LaurentScalar quantumInt(int n, int m);

/// [m]! = [1][2]...[m]
LaurentScalar quantumFactorial(int n, int m);

struct RingConstants {
    LaurentScalar t;                   // (-1)^{n-1} q^{(n^2-1)/n}
    LaurentScalar a;                   // q^{(1-n)(2n+1)/4}
    std::vector<LaurentScalar> c;      // c[i-1] = q^{(n-1)/2n} (-q)^{n-i}, i = 1..n
};

RingConstants ringConstants(int n);

}  // namespace qtri
