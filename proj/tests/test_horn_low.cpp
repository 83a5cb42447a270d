#include <random>

#include "doctest.h"
#include "horn/error.hpp"
#include "horn/horn_low.hpp"
#include "support.hpp"

using namespace horn;
using horn::testing::on_det_one;

namespace {

const double kEps = 1e-12;

double circ(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

double pair_err(const AnglePair& p, const AnglePair& q) { return pair_distance(p, q); }

// Reversed-complemented triple: ((2pi - g2, 2pi - g1), ...), the U(2) analogue of psi.
ClassTriple mirror(const ClassTriple& t) { return psi(t); }

}  // namespace

TEST_CASE("u2_member examples") {
    auto z = u2_member(parse_triple("0,0;0,0;0,0"));
    CHECK(z.member);
    CHECK(z.component == U2Component::C0);
    auto a = u2_member(parse_triple("pi,0;pi,0;0,0"));
    CHECK(a.member);
    CHECK(a.component == U2Component::C2pi);
    auto b = u2_member(parse_triple("pi/2,pi/2;pi/2,pi/2;pi,pi"));
    CHECK(b.member);
    CHECK(b.component == U2Component::C4pi);
    auto c = u2_member(parse_triple("pi/2,0;pi/2,0;3pi/2,3pi/2"));
    CHECK(c.member);
    CHECK(c.component == U2Component::C4pi);
    // S = 3pi here: det(ABC) = -1, so no solution.
    CHECK_FALSE(u2_member(parse_triple("pi/2,0;pi/2,0;3pi/2,pi/2")).member);
    CHECK_FALSE(u2_member(parse_triple("pi/2,0;pi/2,0;pi/2,0")).member);
}

TEST_CASE("u2_construct examples") {
    auto s0 = u2_construct(parse_triple("0,0;0,0;0,0"));
    CHECK((s0.A - Mat2::Identity()).norm() < kEps);
    CHECK((s0.B - Mat2::Identity()).norm() < kEps);
    CHECK((s0.C - Mat2::Identity()).norm() < kEps);

    auto s1 = u2_construct(parse_triple("pi,0;pi,0;0,0"));
    Mat2 d;
    d << -1, 0, 0, 1;
    CHECK((s1.A - d).norm() < 1e-12);
    CHECK((s1.B - d).norm() < 1e-12);
    CHECK((s1.C - Mat2::Identity()).norm() < 1e-12);

    auto t = parse_triple("pi/2,0;pi/2,0;3pi/2,3pi/2");
    auto s2 = u2_construct(t);
    CHECK((s2.A * s2.B * s2.C - Mat2::Identity()).norm() < 1e-9);
    CHECK(pair_err(u2_class(s2.A), t.alpha) < 1e-8);
    CHECK(pair_err(u2_class(s2.B), t.beta) < 1e-8);
    CHECK(pair_err(u2_class(s2.C), t.gamma) < 1e-8);

    CHECK_THROWS_AS(u2_construct(parse_triple("pi/2,0;pi/2,0;pi/2,0")), HornError);
    CHECK_THROWS_AS(u2_construct(parse_triple("pi/2,0;pi/2,0;3pi/2,pi/2")), HornError);
}

TEST_CASE("u2_construct on random member triples") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 1000) {
        auto t = on_det_one(rng);
        if (!u2_member(t).member) continue;
        ++done;
        auto s = u2_construct(t);
        REQUIRE((s.A * s.B * s.C - Mat2::Identity()).norm() <= 1e-9);
        REQUIRE(pair_err(u2_class(s.A), t.alpha) <= 1e-8);
        REQUIRE(pair_err(u2_class(s.B), t.beta) <= 1e-8);
        REQUIRE(pair_err(u2_class(s.C), t.gamma) <= 1e-8);
    }
}

TEST_CASE("u2_member is invariant under the reversed-complemented relabeling") {
    std::mt19937_64 rng(32);
    int members = 0;
    for (int k = 0; k < 10000; ++k) {
        auto t = on_det_one(rng);
        if (!t.is_interior()) continue;
        auto a = u2_member(t), b = u2_member(mirror(t));
        REQUIRE(a.member == b.member);
        members += a.member;
    }
    CHECK(members > 100);
}

TEST_CASE("pu11_member examples") {
    auto a = pu11_member({Angle::exact(1, 2), Angle::exact(1, 2), Angle::exact(1, 2)});
    CHECK(a.member);
    CHECK(a.layer == -1);
    CHECK_FALSE(pu11_member({Angle::exact(1), Angle::exact(1), Angle::exact(1)}).member);
    auto c = pu11_member({Angle::exact(3, 2), Angle::exact(3, 2), Angle::exact(3, 2)});
    CHECK(c.member);
    CHECK(c.layer == 1);
}

TEST_CASE("pu11_member is permutation invariant") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int k = 0; k < 10000; ++k) {
        double x = u(rng), y = u(rng), z = u(rng);
        auto m = pu11_member({x, y, z});
        for (auto p : {PU11Triple{y, x, z}, PU11Triple{z, y, x}, PU11Triple{x, z, y}, PU11Triple{y, z, x}}) {
            auto q = pu11_member(p);
            REQUIRE(q.member == m.member);
            REQUIRE(q.layer == m.layer);
        }
    }
}

TEST_CASE("pu11_construct examples") {
    auto s = pu11_construct({kPi / 2, kPi / 2, kPi / 2});
    Mat2 P = s.A * s.B * s.C;
    CHECK((P - P(0, 0) * Mat2::Identity()).norm() < 1e-9);
    CHECK_FALSE(s.common_fixed_point);
    CHECK(circ(pu11_angle(s.A), kPi / 2) < 1e-8);

    auto e = pu11_construct({Angle::exact(2, 3), Angle::exact(2, 3), Angle::exact(2, 3)});
    CHECK(e.common_fixed_point);
    Mat2 Q = e.A * e.B * e.C;
    CHECK((Q - Q(0, 0) * Mat2::Identity()).norm() < 1e-12);

    try {
        pu11_construct({Angle::exact(1), Angle::exact(1), Angle::exact(1)});
        FAIL("expected NoSolution");
    } catch (const HornError& err) {
        CHECK(err.code() == ErrorCode::NoSolution);
    }
    try {
        pu11_construct({0.0, 1.0, 1.0});
        FAIL("expected DegenerateAngle");
    } catch (const HornError& err) {
        CHECK(err.code() == ErrorCode::DegenerateAngle);
    }
}

TEST_CASE("disk rotations preserve the form and rotate by the given angle") {
    Mat2 J2;
    J2 << 1, 0, 0, -1;
    auto R = disk_rotation(cplx(0.3, -0.4), 1.1);
    CHECK((R.adjoint() * J2 * R - J2).norm() < 1e-12);
    CHECK(circ(pu11_angle(R), 1.1) < 1e-12);
}

TEST_CASE("pu11_construct on random triples on both sides of the gap") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(1e-3, kTwoPi - 1e-3);
    Mat2 J2;
    J2 << 1, 0, 0, -1;
    for (int side = 0; side < 2; ++side) {
        int done = 0;
        while (done < 1000) {
            double a = u(rng), b = u(rng), c = u(rng), s = a + b + c;
            if (side == 0 ? !(s < kTwoPi - 0.05) : !(s > 2 * kTwoPi + 0.05)) continue;
            ++done;
            auto sol = pu11_construct({a, b, c});
            Mat2 P = sol.A * sol.B * sol.C;
            REQUIRE((P - P(0, 0) * Mat2::Identity()).norm() <= 1e-9);
            REQUIRE(circ(pu11_angle(sol.A), a) <= 1e-8);
            REQUIRE(circ(pu11_angle(sol.B), b) <= 1e-8);
            REQUIRE(circ(pu11_angle(sol.C), c) <= 1e-8);
            REQUIRE((sol.A.adjoint() * J2 * sol.A - J2).norm() <= 1e-9 * std::max(1.0, sol.A.squaredNorm()));
        }
    }
}
