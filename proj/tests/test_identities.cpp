#include <catch2/catch_amalgamated.hpp>

#include "rhobar/identities.hpp"

using namespace rhobar;

static CheckReport run(IdentityId id, IdParams ps, long p = 5) { return check_identity(id, ps, p); }

TEST_CASE("spec examples: named identity checks") {
    // CE with (b,l,n,w,u) = (0,2,2,2,8): direct summation gives 28 - 2*30 + 6 = 4 = 2^2
    auto ce = run(IdentityId::CE, {{"b", 0}, {"l", 2}, {"n", 2}, {"w", 2}, {"u", 8}});
    CHECK(ce.passed());
    // CB with (p,u) = (5,9): M_9 = 136, 1 + 0 + (2/1)*5 = 11, v_5(125) = 3 >= v_5(t_u p^2) = 2
    auto cb = run(IdentityId::CB, {{"u", 9}}, 5);
    CHECK(cb.passed());
    CHECK(m_sum(9, 0, 5) == 136);
    // F_UVC with (u,v,c) = (2,1,0): both sides are the constant polynomial -1
    auto fu = run(IdentityId::F_UVC, {{"u", 2}, {"v", 1}, {"c", 0}});
    CHECK(fu.passed());
    CHECK(detail::f_uvc_lhs(2, 1, 0) == QPoly(QQ(-1)));
    // CD with (p,u,n) = (5,6,2): 16 = 1 * binom(2,2) mod 5
    auto cd = run(IdentityId::CD, {{"u", 6}, {"n", 2}}, 5);
    CHECK(cd.passed());
}

TEST_CASE("admissibility is refused, not falsely passed") {
    auto r = run(IdentityId::CE, {{"b", 1}, {"l", 2}, {"n", 3}, {"w", 2}, {"u", 2}});  // u < (b+l)n
    CHECK(r.status == CheckReport::Status::Inadmissible);
    auto r2 = run(IdentityId::CD, {{"u", 0}, {"n", 0}});  // u >= 1 required
    CHECK(r2.status == CheckReport::Status::Inadmissible);
    auto r3 = run(IdentityId::CA, {{"u", 3}, {"v", 4}, {"n", 0}, {"m", 1}});  // 3 != 4 mod p-1
    CHECK(r3.status == CheckReport::Status::Inadmissible);
}

TEST_CASE("identity sweeps at small bounds are clean") {
    SweepBounds b;
    b.max_u = 40;
    b.max_n = 5;
    b.max_small = 4;
    b.max_m = 2;
    b.max_uv_poly = 6;
    for (long p : {5L, 7L}) {
        for (const auto& e : identity_registry()) {
            auto rep = sweep_identity(e.id, p, b);
            INFO("identity " << e.name << " at p=" << p << ", "
                             << (rep.failures.empty() ? "" : rep.failures[0].witness));
            CHECK(rep.failed == 0);
            CHECK(rep.passed > 0);
        }
    }
}

TEST_CASE("a perturbed CD claim fails with a usable witness") {
    // deliberately wrong right side: drop the doubling delta at u = n = 0 mod p-1
    long p = 5, u = 8, n = 4;
    QQ lhs(m_sum(u, n, p));
    QQ wrong = QQ(binom(ZZ(more_rep(u, p)), less_rep(n, p)));
    QQ diff = lhs - wrong;
    CHECK((diff != 0 && vp(diff, p) == 0));  // the delta really is load-bearing
    auto good = run(IdentityId::CD, {{"u", u}, {"n", n}}, p);
    CHECK(good.passed());
}

TEST_CASE("L-series and PHI identities hold on their stated ranges") {
    CHECK(run(IdentityId::L1_EQ_R1, {{"u", 7}, {"v", 5}, {"w", 2}, {"t", 4}}).passed());
    CHECK(run(IdentityId::L2_EQ_R2, {{"u", 7}, {"v", 5}, {"w", 1}, {"t", 3}}).passed());
    CHECK(run(IdentityId::L3_EQ_R3, {{"u", 7}, {"v", 4}, {"w", 2}}).passed());
    CHECK(run(IdentityId::PHI_BETA_ZERO, {{"s", 4}, {"a", 2}, {"b", 1}, {"i", 1}}).passed());
    CHECK(run(IdentityId::PHI_BETA_ZERO, {{"s", 4}, {"a", 2}, {"b", 1}, {"i", 2}}).passed());
    CHECK(run(IdentityId::PHI_BETA_ZERO, {{"s", 6}, {"a", 4}, {"b", 2}, {"i", 3}}).passed());
    // below the diagonal block the rows are replaced; the functional need not vanish
    CHECK(run(IdentityId::PHI_BETA_ZERO, {{"s", 4}, {"a", 2}, {"b", 2}, {"i", 1}}).status ==
          CheckReport::Status::Inadmissible);
}

TEST_CASE("pivot-block entries and determinant") {
    for (long b = 1; b <= 9; ++b) {
        CHECK(run(IdentityId::DET_2X2, {{"b", b}}).passed());
        CHECK(run(IdentityId::E_ROW_ENTRIES, {{"b", b}, {"which", 0}}).passed());
        CHECK(run(IdentityId::E_ROW_ENTRIES, {{"b", b}, {"which", 1}}).passed());
        if (b >= 2) CHECK(run(IdentityId::E_ROW_ENTRIES, {{"b", b}, {"which", 2}}).passed());
    }
}
