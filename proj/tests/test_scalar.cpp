#include "qtri/scalar.hpp"
#include "qtri/weight.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qtri;

TEST_CASE("q powers resolve to integer hq exponents") {
    CHECK(qPower(2, 1, 1) == LaurentScalar::hqPow(8));
    CHECK(qPower(3, 0, 1) == LaurentScalar(1));
    CHECK(qPower(2, 1, 2) == LaurentScalar::hqPow(4));
    CHECK(qPower(3, -2, 3) == LaurentScalar::hqPow(-12));
    CHECK_THROWS_AS(qPower(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(qPower(2, 1, 0), std::invalid_argument);
}

TEST_CASE("quantum integers") {
    CHECK(quantumInt(2, 0).isZero());
    CHECK(quantumInt(3, 1).isOne());
    CHECK(quantumInt(2, 2) == LaurentScalar::hqPow(8) + LaurentScalar::hqPow(-8));

    // oracle: (q - q^{-1}) [m] = q^m - q^{-m}, the defining fraction
    for (int n : {2, 3, 4})
        for (int m = 0; m <= 6; ++m) {
            LaurentScalar lhs = (qPower(n, 1) - qPower(n, -1)) * quantumInt(n, m);
            LaurentScalar rhs = qPower(n, m) - qPower(n, -m);
            CHECK(lhs == rhs);
        }

    CHECK(quantumFactorial(2, 3) == quantumInt(2, 1) * quantumInt(2, 2) * quantumInt(2, 3));
}

TEST_CASE("ring constants") {
    auto k2 = ringConstants(2);
    CHECK(k2.t == -LaurentScalar::hqPow(12));
    CHECK(k2.c[1] == LaurentScalar::hqPow(2));  // c_2 = q^{1/4}

    for (int n : {2, 3, 4, 5}) {
        auto ks = ringConstants(n);
        // consecutive ratio c_i / c_{i+1} = -q
        for (int i = 0; i + 1 < n; ++i) CHECK(ks.c[i] == -(qPower(n, 1) * ks.c[i + 1]));
        // t = (-1)^{n-1} q^{(n^2-1)/n}
        LaurentScalar t = qPower(n, n * n - 1, n);
        CHECK(ks.t == (n % 2 == 0 ? -t : t));
        CHECK(ks.a == qPower(n, (1 - n) * (2 * n + 1), 4));
    }
}

TEST_CASE("reflection is an involutive ring map inverting hq") {
    CHECK((LaurentScalar::hqPow(2) + LaurentScalar(1)).reflected() ==
          LaurentScalar::hqPow(-2) + LaurentScalar(1));
    CHECK(LaurentScalar().reflected().isZero());
    for (int t = 0; t < 50; ++t) {
        LaurentScalar a = oracle::randScalar(), b = oracle::randScalar();
        CHECK(a.reflected().reflected() == a);
        CHECK((a * b).reflected() == a.reflected() * b.reflected());
        CHECK((a + b).reflected() == a.reflected() + b.reflected());
    }
}

TEST_CASE("ring axioms hold exactly on random scalars") {
    for (int t = 0; t < 50; ++t) {
        LaurentScalar a = oracle::randScalar(), b = oracle::randScalar(), c = oracle::randScalar();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).isZero());
        CHECK(a * LaurentScalar(1) == a);
    }
}

TEST_CASE("canonical text form") {
    LaurentScalar s = LaurentScalar::hqPow(4) - LaurentScalar::hqPow(-4);
    CHECK(s.str() == "hq^4 - hq^-4");
    CHECK(LaurentScalar().str() == "0");
    CHECK((LaurentScalar(2) * LaurentScalar::hqPow(3) - LaurentScalar(7)).str() == "2*hq^3 - 7");
}

TEST_CASE("weight pairing on fundamental weights") {
    CHECK(weightPairing(WeightVector::fundamental(3, 1), WeightVector::fundamental(3, 2)) ==
          Rational(1, 3));
    CHECK(weightPairing(WeightVector::basis(2, 1), WeightVector::basis(2, 1)) == Rational(1, 2));

    for (int n = 2; n <= 5; ++n) {
        for (int j = 0; j <= n; ++j)
            CHECK(weightPairing(WeightVector::fundamental(n, 0), WeightVector::fundamental(n, j)) ==
                  Rational(0));
        // <w_i, w_j> = delta - 1/n
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(weightPairing(WeightVector::basis(n, i), WeightVector::basis(n, j)) ==
                      Rational(i == j ? n - 1 : -1, n));
        // <pi_i, pi_j> = min - ij/n
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                CHECK(weightPairing(WeightVector::fundamental(n, i), WeightVector::fundamental(n, j)) ==
                      Rational(std::min(i, j)) - Rational(static_cast<std::int64_t>(i) * j, n));
    }
}

TEST_CASE("weight pairing properties") {
    for (int n : {2, 3, 4})
        for (int t = 0; t < 30; ++t) {
            WeightVector u(n), v(n);
            for (int i = 1; i <= n; ++i) {
                u = u + WeightVector::basis(n, i) * oracle::randInt(-3, 3);
                v = v + WeightVector::basis(n, i) * oracle::randInt(-3, 3);
            }
            Rational p = weightPairing(u, v);
            CHECK(p == weightPairing(v, u));
            CHECK((p * Rational(n)).isInteger());
            // the involution: <or(u), pi_i> = <u, pi_{n-i}>
            for (int i = 0; i <= n; ++i)
                CHECK(weightPairing(u.reversed(), WeightVector::fundamental(n, i)) ==
                      weightPairing(u, WeightVector::fundamental(n, n - i)));
        }
}
