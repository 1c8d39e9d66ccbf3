#include <doctest.h>

#include "oracles.hpp"
#include "skein/dilog.hpp"

using oracle::RaySeries;
using skein::adjoint;
using skein::AlgebraKind;
using skein::Cutoff;
using skein::PBWMonomial;
using skein::quantum_integer;
using skein::Scalar;
using skein::skein_dilog;
using skein::skein_dilog_inverse;
using skein::SkeinElement;
using skein::Vec2;

namespace {

SkeinElement P(Vec2 x, Cutoff cutoff) { return SkeinElement::generator(x, cutoff); }

RaySeries dilog_exponent_oracle(int max_degree, bool inverted) {
    RaySeries e(max_degree);
    for (int k = 1; k <= max_degree; ++k) {
        Scalar c = Scalar::rational(k % 2 == 1 ? 1 : -1, k) * quantum_integer(k).inv();
        e.c[static_cast<std::size_t>(k)] = inverted ? -c : c;
    }
    return e;
}

}  // namespace

TEST_CASE("skein dilogarithm low-degree parts") {
    Vec2 x{1, 0};
    CHECK(skein_dilog(x, 0) == SkeinElement::unit(Cutoff(0)));

    SkeinElement q = skein_dilog(x, 6);
    CHECK(q.coeff(PBWMonomial::generator(x)) == quantum_integer(1).inv());

    // degree-2 part: P_x^2/(2{1}^2) - P_{2x}/(2{2}), from the truncated
    // exponential oracle on the ray
    RaySeries expected = oracle::ray_exp(dilog_exponent_oracle(6, false));
    CHECK(q.coeff(PBWMonomial::from_sorted({x, x})) ==
          Scalar::rational(1, 2) * (quantum_integer(1) * quantum_integer(1)).inv());
    CHECK(q.coeff(PBWMonomial::generator({2, 0})) ==
          -(Scalar::rational(1, 2) * quantum_integer(2).inv()));

    // on one ray the full expansion matches the commutative oracle after
    // regrouping P_x^a P_{2x}^b ... monomials by total multiple of x; spot
    // check the pure powers P_x^k against exp(c_1 T)-style contributions is
    // subsumed by the quantum-torus image tests; here pin the first two.
    CHECK(expected.c[1] == q.coeff(PBWMonomial::generator(x)));

    CHECK_THROWS_AS((void)skein_dilog({0, 0}, 4), std::domain_error);
}

TEST_CASE("dilogarithm inverse") {
    Vec2 l{1, 1};
    CHECK(skein_dilog_inverse(l, 0) == SkeinElement::unit(Cutoff(0)));
    SkeinElement q = skein_dilog(l, 8);
    SkeinElement qinv = skein_dilog_inverse(l, 8);
    CHECK(qinv.coeff(PBWMonomial::generator(l)) == -quantum_integer(1).inv());
    CHECK(q * qinv == SkeinElement::unit(Cutoff(8)));
    CHECK(qinv * q == SkeinElement::unit(Cutoff(8)));
}

TEST_CASE("adjoint action") {
    Vec2 x{1, 0}, y{0, 1};
    Cutoff cutoff{6};
    SkeinElement qx = skein_dilog(x, 6);

    // Ad_{Q_x} P_y = P_y + P_{x+y}, all higher corrections cancel
    CHECK(adjoint(qx, P(y, cutoff)) == P(y, cutoff) + P(x + y, cutoff));
    // everything in the exponent commutes with P_x
    CHECK(adjoint(qx, P(x, cutoff)) == P(x, cutoff));
    // Ad_1 is the identity
    skein::Sampler s(51);
    SkeinElement f = P(y, cutoff) * P({2, 1}, cutoff) + P(x, cutoff).scaled(Scalar(3));
    CHECK(adjoint(SkeinElement::unit(cutoff), f) == f);

    SUBCASE("adjoint is an algebra map on truncations") {
        SkeinElement g = P({1, 1}, cutoff) + P(x, cutoff).scaled(Scalar::s_power(1));
        CHECK(adjoint(qx, f * g) == adjoint(qx, f) * adjoint(qx, g));
    }
}

TEST_CASE("group-like bidegree support") {
    int n = 6;
    SkeinElement qx = skein_dilog({1, 0}, n);
    SkeinElement qy = skein_dilog({0, 1}, n);
    SkeinElement qxy = skein_dilog({1, 1}, n);
    for (const auto& [m, c] : qx.terms()) CHECK(m.bidegree().j == 0);
    for (const auto& [m, c] : qy.terms()) CHECK(m.bidegree().i == 0);
    for (const auto& [m, c] : qxy.terms()) CHECK(m.bidegree().i == m.bidegree().j);
}

TEST_CASE("pentagon check") {
    auto trivial = skein::pentagon_check(0, AlgebraKind::torus_skein);
    CHECK(trivial.passed);
    CHECK(trivial.bidegrees_checked == 1);

    SUBCASE("bidegree (1,1) by hand") {
        Cutoff cutoff{2};
        Scalar inv1 = quantum_integer(1).inv();
        SkeinElement lhs_part =
            (P({1, 0}, cutoff) * P({0, 1}, cutoff)).scaled(inv1 * inv1);
        SkeinElement rhs_part = (P({0, 1}, cutoff) * P({1, 0}, cutoff)).scaled(inv1 * inv1) +
                                P({1, 1}, cutoff).scaled(inv1);
        CHECK(lhs_part == rhs_part);
    }

    SUBCASE("bidegree (0,k) equals the degree-k part of Q_y") {
        int n = 5;
        SkeinElement qx = skein_dilog({1, 0}, n);
        SkeinElement qy = skein_dilog({0, 1}, n);
        SkeinElement qxy = skein_dilog({1, 1}, n);
        SkeinElement lhs = qx * qy;
        SkeinElement rhs = qy * qxy * qx;
        for (int k = 0; k <= n; ++k) {
            CHECK(lhs.bidegree_part({0, k}) == qy.bidegree_part({0, k}));
            CHECK(rhs.bidegree_part({0, k}) == qy.bidegree_part({0, k}));
        }
    }

    SUBCASE("both algebras pass at N = 6") {
        auto sk = skein::pentagon_check(6, AlgebraKind::torus_skein);
        CHECK(sk.passed);
        CHECK(sk.bidegrees_checked == 28);
        auto qt = skein::pentagon_check(6, AlgebraKind::quantum_torus);
        CHECK(qt.passed);
        CHECK(qt.bidegrees_checked == 28);
    }
}

TEST_CASE("bidegree (2,2) identity") {
    auto report = skein::identity_2_2_check();
    CHECK(report.passed);

    // LHS coefficient {4}/{2}^2, RHS coefficient {2}/{1}^2 - 2/{2}, both equal
    // (s^2 + s^-2)/(s^2 - s^-2)
    Scalar lhs = quantum_integer(4) * (quantum_integer(2) * quantum_integer(2)).inv();
    Scalar rhs = quantum_integer(2) * (quantum_integer(1) * quantum_integer(1)).inv() -
                 Scalar(2) * quantum_integer(2).inv();
    CHECK(lhs == rhs);
    CHECK(lhs == skein::parse_scalar("(s^2 + s^-2)/(s^2 - s^-2)"));
}

TEST_CASE("ad property suite") {
    auto vacuous = skein::ad_property_check(0, 4, 1);
    CHECK(vacuous.passed);

    auto named = skein::ad_property_check(4, 3, 1);  // (1,0), (0,1), (1,1) pairs
    CHECK(named.passed);
    CHECK(named.bidegrees_checked == 3);

    auto sampled = skein::ad_property_check(6, 10, 12345);
    CHECK(sampled.passed);
    CHECK(sampled.bidegrees_checked == 10);
}

TEST_CASE("jacobi suite") {
    auto report = skein::jacobi_suite(100, 7);
    CHECK(report.passed);
    CHECK(report.bidegrees_checked == 100);
}

TEST_CASE("unimodular partner construction") {
    skein::Sampler s(52);
    for (int n = 0; n < 100; ++n) {
        int target = n % 2 == 0 ? 1 : -1;
        Vec2 x;
        do {
            x = s.primitive_first_quadrant_vec(4);
        } while ((target == 1 && x.i == 0) || (target == -1 && x.j == 0));
        Vec2 y = skein::unimodular_partner(x, target);
        CHECK(in_first_quadrant(y));
        CHECK(det2(x, y) == target);
    }
}
