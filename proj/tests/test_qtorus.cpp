#include "qtri/qtorus.hpp"
#include "qtri/json_io.hpp"
#include "qtri/structmat.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qtri;

namespace {

PresentationPtr rank2() {
    return std::make_shared<TorusPresentation>(std::vector<std::string>{"u", "v"},
                                               Mat{{0, 1}, {-1, 0}});
}

PresentationPtr random4() {
    // fixed antisymmetric matrix with mixed entries
    return std::make_shared<TorusPresentation>(
        std::vector<std::string>{"a", "b", "c", "d"},
        Mat{{0, 2, -1, 3}, {-2, 0, 0, -1}, {1, 0, 0, 2}, {-3, 1, -2, 0}});
}

}  // namespace

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(TorusPresentation({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TorusPresentation({"a", "a"}, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("normalized monomials multiply by eq.prod") {
    auto p = rank2();
    ExponentVector e10, e01, e11;
    e10.set(0, 1);
    e01.set(1, 1);
    e11.set(0, 1);
    e11.set(1, 1);

    CHECK(TorusElement::monomial(p, ExponentVector()) ==
          TorusElement::scalar(p, LaurentScalar(1)));

    // x^{(1,0)} x^{(0,1)} = hq^{Q_12} x^{(1,1)}
    CHECK(TorusElement::monomial(p, e10) * TorusElement::monomial(p, e01) ==
          TorusElement::monomial(p, e11, LaurentScalar::hqPow(1)));

    for (int t = 0; t < 30; ++t) {
        ExponentVector k = oracle::randExponent(2);
        CHECK(TorusElement::monomial(p, k) * TorusElement::monomial(p, -k) ==
              TorusElement::scalar(p, LaurentScalar(1)));
    }
}

TEST_CASE("generator commutation and algebra laws") {
    auto p = random4();
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            TorusElement xu = TorusElement::generator(p, p->id(u));
            TorusElement xv = TorusElement::generator(p, p->id(v));
            CHECK(xu * xv == xv * xu * LaurentScalar::hqPow(2 * p->q(u, v)));
        }

    TorusElement one = TorusElement::scalar(p, LaurentScalar(1));
    for (int t = 0; t < 25; ++t) {
        TorusElement a = oracle::randElement(p), b = oracle::randElement(p),
                     c = oracle::randElement(p);
        CHECK(a * one == a);
        CHECK(one * a == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // x^k x^{k'} = hq^{2<k,k'>} x^{k'} x^k on monomial parts is implied by
        // comparing both orders of whole random elements termwise via the
        // generator relation; here check reflection behaviour instead
        CHECK((a + b).reflected() == a.reflected() + b.reflected());
    }
}

TEST_CASE("monomial commutation exponent is 2<k,k'>_Q") {
    auto p = random4();
    for (int t = 0; t < 30; ++t) {
        ExponentVector k = oracle::randExponent(4), k2 = oracle::randExponent(4);
        TorusElement a = TorusElement::monomial(p, k), b = TorusElement::monomial(p, k2);
        CHECK(a * b == b * a * LaurentScalar::hqPow(2 * qForm(*p, k, k2)));
    }
}

TEST_CASE("psi_H: multiplicatively linear homomorphisms") {
    auto p = random4();
    // identity
    Mat id4 = matIdentity(4);
    MultLinearHom ident(p, p, id4);
    for (int t = 0; t < 10; ++t) {
        TorusElement a = oracle::randElement(p);
        CHECK(ident.apply(a) == a);
    }

    // compatibility failure reports the first offending entry
    Mat bad = id4;
    bad[0][1] = 1;
    CHECK_THROWS_WITH_AS(MultLinearHom(p, p, bad),
                         doctest::Contains("H Q' H^t != Q at (a,a)"), std::invalid_argument);

    // a genuine non-identity example: double every exponent needs Q scaled by 4
    auto p4 = std::make_shared<TorusPresentation>(
        std::vector<std::string>{"a", "b", "c", "d"},
        Mat{{0, 8, -4, 12}, {-8, 0, 0, -4}, {4, 0, 0, 8}, {-12, 4, -8, 0}});
    MultLinearHom dbl(p4, p, matScale(id4, 2));
    for (int t = 0; t < 20; ++t) {
        TorusElement a = oracle::randElement(p4), b = oracle::randElement(p4);
        CHECK(dbl.apply(a * b) == dbl.apply(a) * dbl.apply(b));
    }
}

TEST_CASE("reflection fixes normalized monomials") {
    auto p = random4();
    for (int t = 0; t < 20; ++t) {
        ExponentVector k = oracle::randExponent(4);
        TorusElement m = TorusElement::monomial(p, k);
        CHECK(m.reflected() == m);
        TorusElement a = oracle::randElement(p);
        CHECK(a.reflected().reflected() == a);
        TorusElement b = oracle::randElement(p);
        // reflection is an algebra anti-homomorphism; monomial algebras here
        // satisfy reflect(ab) = reflect(b) reflect(a)
        CHECK((a * b).reflected() == b.reflected() * a.reflected());
    }
    CHECK((TorusElement::generator(p, "a") * LaurentScalar::hqPow(1)).reflected() ==
          TorusElement::generator(p, "a") * LaurentScalar::hqPow(-1));
}

TEST_CASE("degree queries") {
    auto p = rank2();
    ExponentVector e10, e01;
    e10.set(0, 1);
    e01.set(1, 1);
    CHECK(TorusElement::monomial(p, e10).degreeIn("u") == 1);
    CHECK(TorusElement::monomial(p, e10).degreeIn("v") == 0);
    TorusElement mixed = TorusElement::monomial(p, e10) + TorusElement::monomial(p, e01);
    CHECK(!mixed.degreeIn("u").has_value());
}

TEST_CASE("classical specialization") {
    auto p = rank2();
    std::map<std::string, Rational> ones{{"u", Rational(1)}, {"v", Rational(1)}};
    CHECK(TorusElement::scalar(p, LaurentScalar(1)).specializeClassical(ones) == Rational(1));
    for (int t = 0; t < 10; ++t) {
        ExponentVector k = oracle::randExponent(2);
        CHECK(TorusElement::monomial(p, k).specializeClassical(ones) == Rational(1));
    }
    ExponentVector k;
    k.set(0, 2);
    k.set(1, -1);
    std::map<std::string, Rational> vals{{"u", Rational(3)}, {"v", Rational(2)}};
    CHECK(TorusElement::monomial(p, k, LaurentScalar::hqPow(5)).specializeClassical(vals) ==
          Rational(9, 2));
}

TEST_CASE("canonical JSON serialization is stable") {
    auto p = rank2();
    TorusElement a = oracle::randElement(p, 4);
    Json j1 = elementToJson(a);
    Json j2 = elementToJson(a + TorusElement(p));
    CHECK(j1.dump() == j2.dump());
}
