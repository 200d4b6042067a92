#include <catch2/catch_amalgamated.hpp>

#include "rhobar/eps_jet.hpp"
#include "rhobar/padic_scalar.hpp"
#include "rhobar/slope.hpp"

using namespace rhobar;

TEST_CASE("PadicScalar rational arithmetic and valuations") {
    auto a = PadicScalar::rational(QQ(50), 5);
    CHECK(a.valuation().is_exact());
    CHECK(a.valuation().v == 2);
    auto z = PadicScalar::rational(QQ(0), 5);
    CHECK(z.valuation().is_infinite());
    auto q = PadicScalar::rational(QQ(3, 5), 5);
    CHECK(q.valuation().v == -1);
    CHECK((a * q).is_exact());
    CHECK_THROWS(a * PadicScalar::rational(QQ(1), 7));
}

TEST_CASE("PadicScalar residue arithmetic tracks precision") {
    auto a = PadicScalar::residue(ZZ(10), 5, 3);  // 10 mod 125
    CHECK(a.valuation().v == 1);
    auto zero = PadicScalar::residue(ZZ(0), 5, 3);
    CHECK(zero.valuation().kind == Valuation::Kind::AtLeast);
    CHECK(zero.valuation().v == 3);
    // unit division works, non-unit division fails loudly
    auto u = PadicScalar::residue(ZZ(7), 5, 3);
    CHECK((a / u).valuation().v == 1);
    CHECK_THROWS(a / a);
    // mixing exact and residue drops to residue precision
    auto m = PadicScalar::rational(QQ(1, 2), 5) + a;
    CHECK(!m.is_exact());
    CHECK(m.precision() == 3);
    CHECK(m.residue_value() == mod_reduce(ZZ(63) + 10, ZZ(125)));  // 1/2 = 63 mod 125
}

TEST_CASE("p-adic literal parsing") {
    auto a = parse_padic("3*7^2 + O(7^5)", 7);
    CHECK(!a.is_exact());
    CHECK(a.precision() == 5);
    CHECK(a.residue_value() == 147);
    CHECK(a.valuation().v == 2);
    auto b = parse_padic("-5/9", 7);
    CHECK(b.is_exact());
    CHECK(b.rational_value() == QQ(-5, 9));
    auto c = parse_padic("7^3 + O(7^4)", 7);
    CHECK(c.residue_value() == 343);
    CHECK_THROWS(parse_padic("3*5^2 + O(7^5)", 7));
}

TEST_CASE("slope class symbolic comparisons") {
    auto g = SlopeClass::generic(3);  // v_p(a) in (2,3)
    CHECK(g.cmp_vpa_minus(1, QQ(1)) == Cmp::Greater);   // v_p(a)-1 in (1,2) > 1
    CHECK(g.cmp_vpa_minus(1, QQ(2)) == Cmp::Less);      // < 2
    CHECK(g.cmp_vpa_minus(1, QQ(3, 2)) == Cmp::Unknown);
    CHECK(g.cmp_val_vs_vpa(Valuation::exact(2), 1) == Cmp::Greater);
    CHECK(g.cmp_val_vs_vpa(Valuation::exact(1), 1) == Cmp::Less);
    CHECK(g.cmp_val_vs_vpa(Valuation::at_least(2), 1) == Cmp::Greater);
    CHECK(g.cmp_val_vs_vpa(Valuation::at_least(1), 1) == Cmp::Unknown);

    auto e = SlopeClass::integer(3, 2);  // v_p(a) = 2
    CHECK(e.cmp_vpa_minus(1, QQ(1)) == Cmp::Equal);
    CHECK(e.cmp_val_vs_vpa(Valuation::exact(1), 1) == Cmp::Equal);
    CHECK(e.cmp_val_vs_vpa(Valuation::at_least(2), 1) == Cmp::Greater);
    CHECK(e.cmp_val_vs_vpa(Valuation::at_least(1), 1) == Cmp::Unknown);
}

TEST_CASE("eps jets: arithmetic, truncation, valuation profile") {
    auto ctx = EpsContext::canonical(5, 2, 1);  // eps = 25 + c*125 with (p-1) | eps
    CHECK(vp(ctx.eps, 5) == 2);
    CHECK(mod_reduce(ctx.eps, ZZ(4)) == 0);
    CHECK(ctx.leading_unit() == 1);

    EpsJet e = EpsJet::eps(ctx);
    EpsJet sq = e * e;
    CHECK(sq.a0() == 0);
    CHECK(sq.a1() == 0);  // eps^2 truncated into O(eps p)
    CHECK(sq.valuation().kind == Valuation::Kind::AtLeast);
    CHECK(sq.valuation().v == 3);

    EpsJet a(QQ(3), QQ(5), ctx);
    CHECK(a.valuation().is_exact());
    CHECK(a.valuation().v == 0);

    EpsJet b(QQ(0), QQ(2), ctx);
    CHECK(b.valuation().is_exact());
    CHECK(b.valuation().v == 2);  // t + v_p(2)

    // mixing: a0 of valuation exactly t can cancel against a1*eps
    EpsJet c(QQ(-ctx.eps), QQ(1), ctx);
    CHECK(c.valuation().kind == Valuation::Kind::AtLeast);

    // ring laws under truncation
    EpsJet x(QQ(2, 3), QQ(4), ctx), y(QQ(-1), QQ(7), ctx), zj(QQ(5), QQ(0), ctx);
    CHECK(((x + y) * zj).a0() == (x * zj + y * zj).a0());
    CHECK(((x + y) * zj).a1() == (x * zj + y * zj).a1());
    CHECK(((x * y) * zj).a1() == (x * (y * zj)).a1());

    // division by a unit jet inverts exactly to first order
    EpsJet q = x / y;
    EpsJet back = q * y;
    CHECK(back.a0() == x.a0());
    CHECK(back.a1() == x.a1());
    CHECK_THROWS(x / b);  // divisor constant term not a unit
}
