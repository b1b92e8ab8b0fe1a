#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qtri {

/// Rational with small operands; enough for weight-lattice pairings
/// (denominators divide n) and classical specializations.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rational operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(num * o.den, den * o.num);
    }
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool isInteger() const { return den == 1; }
};

/// Element of the sl_n weight lattice L = <w_1..w_n | w_1+...+w_n = 0>,
/// stored as the canonical representative with last coordinate 0.
class WeightVector {
public:
    explicit WeightVector(int n) : coeffs_(n, 0) {
        if (n < 1) throw std::invalid_argument("WeightVector: n must be positive");
    }

    int n() const { return static_cast<int>(coeffs_.size()); }

    /// w_i, 1-based
    static WeightVector basis(int n, int i);
    /// fundamental weight ϖ_i = w_1 + ... + w_i; ϖ_0 = ϖ_n = 0
    static WeightVector fundamental(int n, int i);

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    WeightVector operator*(std::int64_t c) const;
    bool operator==(const WeightVector& o) const { return coeffs_ == o.coeffs_; }

    /// the involution w_i -> -w_{n+1-i}
    WeightVector reversed() const;

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

private:
    void canonicalize();
    std::vector<std::int64_t> coeffs_;
};

/// bilinear extension of <w_i, w_j> = δ_ij - 1/n
Rational weightPairing(const WeightVector& u, const WeightVector& v);

}  // namespace qtri
