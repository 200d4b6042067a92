#include <catch2/catch_amalgamated.hpp>

#include "rhobar/qpoly.hpp"

using namespace rhobar;

TEST_CASE("univariate exact polynomials") {
    QPoly b3 = QPoly::binomial(3);
    CHECK(b3.degree() == 3);
    CHECK(b3.eval(QQ(5)) == QQ(10));
    CHECK(b3.eval(QQ(-2)) == QQ(-4));
    CHECK(QPoly::binomial(-1).is_zero());
    // derivative at integer points matches binom_deriv
    for (long n = 0; n <= 5; ++n) {
        QPoly d = QPoly::binomial(n).derivative();
        for (long x = -4; x <= 6; ++x) CHECK(d.eval(QQ(x)) == binom_deriv(x, n));
    }
    // shifted binomials
    QPoly s = QPoly::binomial(2, QQ(3));  // binom(X+3, 2)
    CHECK(s.eval(QQ(0)) == QQ(3));
    CHECK(QPoly::binomial(2).shift(QQ(3)) == s);
    // Pascal in polynomial form: binom(X,n) + binom(X,n-1) = binom(X+1,n)
    for (long n = 1; n <= 5; ++n)
        CHECK(QPoly::binomial(n) + QPoly::binomial(n - 1) == QPoly::binomial(n, QQ(1)));
}

TEST_CASE("binom_deriv equals the z-linear coefficient of binom(z+x, n)") {
    for (long x = -5; x <= 5; ++x)
        for (long n = 0; n <= 5; ++n) {
            QPoly pz = QPoly::binomial(n, QQ(x));  // binom(z + x, n) as polynomial in z
            CHECK(pz.coeff(1) == binom_deriv(x, n));
        }
}

TEST_CASE("bivariate exact polynomials") {
    QPoly2 f = QPoly2::binomial_lin(2, QQ(1), QQ(-1), QQ(0));  // binom(z-w, 2)
    CHECK(f.eval(QQ(5), QQ(2)) == QQ(3));
    CHECK(f.eval(QQ(2), QQ(5)) == QQ(6));  // binom(-3,2)
    QPoly2 g = (QPoly2::z() - QPoly2::w()) * (QPoly2::z() - QPoly2::w() - QPoly2(QQ(1))) * QQ(1, 2);
    CHECK(f == g);
    CHECK((f - g).is_zero());
    // d/dz binom(z+c, n) matches the univariate derivative
    QPoly2 h = QPoly2::binomial_lin(3, QQ(1), QQ(0), QQ(2));
    QPoly2 hd = h.dz();
    for (long zv = -3; zv <= 3; ++zv)
        CHECK(hd.eval(QQ(zv), QQ(0)) == binom_deriv(zv + 2, 3));
}
