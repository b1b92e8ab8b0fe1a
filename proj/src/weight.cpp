#include "qtri/weight.hpp"

namespace qtri {

void WeightVector::canonicalize() {
    // subtract last coordinate times (w_1 + ... + w_n) = 0
    std::int64_t last = coeffs_.back();
    if (last != 0)
        for (auto& c : coeffs_) c -= last;
}

WeightVector WeightVector::basis(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("WeightVector::basis: index out of range");
    WeightVector w(n);
    w.coeffs_[i - 1] = 1;
    w.canonicalize();
    return w;
}

WeightVector WeightVector::fundamental(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("WeightVector::fundamental: index out of range");
    WeightVector w(n);
    for (int t = 1; t <= i && i < n; ++t) w.coeffs_[t - 1] = 1;
    w.canonicalize();
    return w;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    if (n() != o.n()) throw std::invalid_argument("WeightVector: rank mismatch");
    WeightVector r(n());
    for (int t = 0; t < n(); ++t) r.coeffs_[t] = coeffs_[t] + o.coeffs_[t];
    r.canonicalize();
    return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    if (n() != o.n()) throw std::invalid_argument("WeightVector: rank mismatch");
    WeightVector r(n());
    for (int t = 0; t < n(); ++t) r.coeffs_[t] = coeffs_[t] - o.coeffs_[t];
    r.canonicalize();
    return r;
}

WeightVector WeightVector::operator*(std::int64_t c) const {
    WeightVector r(n());
    for (int t = 0; t < n(); ++t) r.coeffs_[t] = coeffs_[t] * c;
    r.canonicalize();
    return r;
}

WeightVector WeightVector::reversed() const {
    WeightVector r(n());
    for (int t = 0; t < n(); ++t) r.coeffs_[n() - 1 - t] = -coeffs_[t];
    r.canonicalize();
    return r;
}

Rational weightPairing(const WeightVector& u, const WeightVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("weightPairing: rank mismatch");
    int n = u.n();
    std::int64_t dot = 0, su = 0, sv = 0;
    for (int t = 0; t < n; ++t) {
        dot += u.coeffs()[t] * v.coeffs()[t];
        su += u.coeffs()[t];
        sv += v.coeffs()[t];
    }
    // sum of (δ_ij - 1/n) u_i v_j
    return Rational(dot) - Rational(su * sv, n);
}

}  // namespace qtri
