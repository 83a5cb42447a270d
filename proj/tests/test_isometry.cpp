#include "doctest.h"
#include "horn/error.hpp"
#include "horn/isometry.hpp"
#include "horn/oracle.hpp"

using namespace horn;

namespace {

Mat3 diag(cplx a, cplx b, cplx c) { return Eigen::Vector3cd(a, b, c).asDiagonal(); }
cplx e(double t) { return std::polar(1.0, t); }

bool pair_near(const AnglePair& p, double a1, double a2, double tol) {
    return pair_distance(p, AnglePair(a1, a2)) <= tol;
}

Mat3 boost() {
    Mat3 m = Mat3::Identity();
    m(1, 1) = std::cosh(1.0);
    m(1, 2) = std::sinh(1.0);
    m(2, 1) = std::sinh(1.0);
    m(2, 2) = std::cosh(1.0);
    return m;
}

}  // namespace

TEST_CASE("angle parsing") {
    auto a = parse_angle("2pi/3");
    REQUIRE(a.is_exact());
    CHECK(*a.pi == Rational(2, 3));
    auto z = parse_angle("0");
    REQUIRE(z.is_exact());
    CHECK(z.value == 0.0);
    auto b = parse_angle("11pi/6");
    REQUIRE(b.is_exact());
    CHECK(*b.pi == Rational(11, 6));
    CHECK(*parse_angle("pi").pi == Rational(1));
    CHECK(*parse_angle("-pi/2").pi == Rational(-1, 2));
    CHECK(parse_angle("1.25").value == 1.25);
    CHECK_FALSE(parse_angle("1.25").is_exact());
    CHECK_THROWS_AS(parse_angle("2pi/"), HornError);
    CHECK_THROWS_AS(parse_angle("abc"), HornError);
    try {
        parse_angle("2pq");
        FAIL("expected a parse error");
    } catch (const HornError& err) {
        CHECK(err.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("exact angle arithmetic and level comparison") {
    Angle a = Angle::exact(2, 3), b = Angle::exact(1, 3);
    CHECK(*(a + b).pi == Rational(1));
    CHECK(*(a - b).pi == Rational(1, 3));
    CHECK(*(3 * b).pi == Rational(1));
    CHECK(compare_level(a + b, Rational(1), 0.0) == 0);
    CHECK(compare_level(Angle(kPi + 1e-12), Rational(1), 1e-9) == 0);
    CHECK(compare_level(Angle(kPi + 1e-6), Rational(1), 1e-9) == 1);
    CHECK(reduce_mod_2pi(Angle::exact(5, 2)).pi == Rational(1, 2));
    CHECK(reduce_mod_2pi(Angle(kTwoPi - 1e-12)).value == 0.0);
}

TEST_CASE("angle pairs are reduced and ordered") {
    AnglePair p(Angle::exact(1, 3), Angle::exact(2, 3));
    CHECK(*p.a1.pi == Rational(2, 3));
    CHECK(*p.a2.pi == Rational(1, 3));
    AnglePair q(Angle::exact(7, 3), Angle::exact(-1, 2));
    CHECK(*q.a1.pi == Rational(3, 2));
    CHECK(*q.a2.pi == Rational(1, 3));
    CHECK(p.is_interior());
    CHECK_FALSE(AnglePair(1.0, 1.0).is_interior());
    CHECK_FALSE(AnglePair(1.0, 0.0).is_interior());
}

TEST_CASE("elliptic_rep examples") {
    CHECK((elliptic_rep(AnglePair(0.0, 0.0)).m - Mat3::Identity()).norm() < 1e-15);
    CHECK((elliptic_rep(AnglePair(2 * kPi / 3, kPi / 3)).m - diag(e(2 * kPi / 3), e(kPi / 3), 1)).norm() < 1e-15);
    CHECK((elliptic_rep(AnglePair(kPi, kPi)).m - diag(-1, -1, 1)).norm() < 1e-15);
}

TEST_CASE("classify examples") {
    auto c = classify(elliptic_rep(AnglePair(2 * kPi / 3, kPi / 3)));
    CHECK(c.kind == IsometryClass::Kind::RegularElliptic);
    REQUIRE(c.angles);
    CHECK(pair_near(*c.angles, 2 * kPi / 3, kPi / 3, 1e-12));

    auto r = classify(GroupElement(diag(e(kPi / 2), 1, 1)));
    CHECK(r.kind == IsometryClass::Kind::SpecialElliptic);
    REQUIRE(r.mirror);
    CHECK(*r.mirror == MirrorKind::Line);
    CHECK(pair_near(*r.angles, kPi / 2, 0, 1e-12));

    CHECK(classify(GroupElement(boost())).kind == IsometryClass::Kind::Loxodromic);

    Mat3 bad = Mat3::Identity();
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(classify(GroupElement(bad)), HornError);
}

TEST_CASE("complex reflection in a point is special with a point mirror") {
    // diag(1, 1, eta) fixes the negative line and rotates the positive plane.
    auto c = classify(GroupElement(diag(1, 1, e(kPi / 3))));
    CHECK(c.kind == IsometryClass::Kind::SpecialElliptic);
    REQUIRE(c.mirror);
    CHECK(*c.mirror == MirrorKind::Point);
    CHECK(pair_near(*c.angles, 5 * kPi / 3, 5 * kPi / 3, 1e-12));
}

TEST_CASE("parabolic element") {
    // Unipotent Heisenberg translation preserving J.
    Mat3 T;
    const cplx I(0, 1);
    T << 1.0, 0.0, 0.0, 0.0, 1.0 + I * 0.5, -I * 0.5, 0.0, I * 0.5, 1.0 - I * 0.5;
    GroupElement g(T);
    REQUIRE(g.unitarity_residual() < 1e-12);
    CHECK(classify(g).kind == IsometryClass::Kind::Parabolic);
    CHECK_THROWS_AS(angle_pair(g), HornError);
}

TEST_CASE("angle_pair examples") {
    CHECK(pair_near(angle_pair(elliptic_rep(AnglePair(5 * kPi / 3, kPi / 2))), 5 * kPi / 3, kPi / 2, 1e-12));
    Rng rng(9);
    auto Q = random_u21(rng);
    auto m = Q * elliptic_rep(AnglePair(5 * kPi / 3, kPi / 2)) * Q.inverse();
    CHECK(pair_near(angle_pair(m), 5 * kPi / 3, kPi / 2, 1e-8));

    auto w = decompfamily_witness();
    CHECK(pair_near(angle_pair(w.A), 2 * kPi / 3, kPi / 3, 1e-9));
}

TEST_CASE("standard_lift examples") {
    CHECK((standard_lift(AnglePair(0.0, 0.0)).m - Mat3::Identity()).norm() < 1e-15);
    CHECK((standard_lift(AnglePair(2 * kPi / 3, kPi / 3)).m - diag(e(kPi / 3), 1, e(-kPi / 3))).norm() < 1e-12);
    CHECK((standard_lift(AnglePair(kPi, kPi)).m - diag(e(kPi / 3), e(kPi / 3), e(-2 * kPi / 3))).norm() < 1e-12);
}

TEST_CASE("psi examples") {
    ClassTriple pipi{AnglePair(Angle::exact(1), Angle::exact(1)), AnglePair(Angle::exact(1), Angle::exact(1)),
                     AnglePair(Angle::exact(1), Angle::exact(1))};
    auto p = psi(pipi);
    for (auto& x : p.coords()) CHECK(*x.pi == Rational(1));

    auto t = parse_triple("2pi/3,pi/3;2pi/3,pi/3;2pi/3,pi/3");
    auto q = psi(t).coords();
    for (int i = 0; i < 6; i += 2) {
        CHECK(*q[i].pi == Rational(5, 3));
        CHECK(*q[i + 1].pi == Rational(4, 3));
    }

    auto u = parse_triple("3pi/4,pi/2;5pi/3,pi/6;pi,pi/5");
    auto pu = psi(u).coords();
    CHECK(*pu[0].pi == Rational(9, 5));
    CHECK(*pu[1].pi == Rational(1));
    CHECK(*pu[4].pi == Rational(3, 2));
    CHECK(*pu[5].pi == Rational(5, 4));
}

TEST_CASE("complex_reflection examples") {
    const cplx eta = e(0.7);
    auto r = complex_reflection(Vec3(1, 0, 0), eta);
    CHECK((r.m - diag(eta, 1, 1)).norm() < 1e-15);
    CHECK((complex_reflection(Vec3(0.3, cplx(1, 2), 0.5), 1.0).m - Mat3::Identity()).norm() < 1e-14);
    CHECK_THROWS_AS(complex_reflection(Vec3(1, 0, 1), eta), HornError);

    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int t = 0; t < 200; ++t) {
        Vec3 c(cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng)));
        if (std::abs(hermitian_pairing(c, c, HermitianForm::J())) < 1e-3) continue;
        cplx et = e(u(rng));
        auto R = complex_reflection(c, et);
        CHECK((R.m * c - et * c).norm() < 1e-9 * c.norm());
        CHECK(R.unitarity_residual() < 1e-9 * std::max(1.0, R.m.squaredNorm()));
    }
}

TEST_CASE("layer_product examples") {
    GroupElement id;
    CHECK(layer_product(id, id, id) == Layer::One);

    auto a = elliptic_rep(AnglePair(2 * kPi / 3, kPi / 3));
    auto c = (a * a).inverse();
    CHECK(layer_product(a, a, c) == Layer::Omega);

    auto w = decompfamily_witness();
    CHECK(layer_product(w.A, w.B, w.C) == Layer::Omega);

    auto b = elliptic_rep(AnglePair(1.0, 0.5));
    CHECK_THROWS_AS(layer_product(a, b, id), HornError);
}

TEST_CASE("round trip of elliptic_rep through angle_pair") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int t = 0; t < 10000; ++t) {
        AnglePair p(u(rng), u(rng));
        REQUIRE(pair_distance(angle_pair(elliptic_rep(p)), p) <= 1e-9);
    }
}

TEST_CASE("conjugation invariance and no parabolic misclassification") {
    std::mt19937_64 urng(2);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    Rng rng(3);
    int special = 0;
    for (int t = 0; t < 10000; ++t) {
        // Every fifth sample is a reflection in a line, the next a reflection in a point.
        const double x = u(urng);
        AnglePair p = (t % 5 == 0) ? AnglePair(x, 0.0) : (t % 5 == 1) ? AnglePair(x, x) : AnglePair(x, u(urng));
        auto Q = random_u21(rng);
        // Eigenvalue conditioning grows like ||Q||^2; past this the 1e-7 bands are below rounding.
        if (Q.m.norm() > 30.0) {
            --t;
            continue;
        }
        auto m = Q * elliptic_rep(p) * Q.inverse();
        auto c = classify(m);
        REQUIRE(c.kind != IsometryClass::Kind::Parabolic);
        REQUIRE(c.angles);
        if (c.kind == IsometryClass::Kind::SpecialElliptic) ++special;
        REQUIRE(pair_distance(*c.angles, p) <= 1e-6);
        if (t % 5 >= 2) REQUIRE(pair_distance(*c.angles, p) <= 1e-8);
    }
    CHECK(special >= 4000);
}

TEST_CASE("psi is an involution that preserves the interior") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.01, kTwoPi - 0.01);
    for (int t = 0; t < 10000; ++t) {
        auto x = ClassTriple::from_values({u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)});
        auto y = psi(psi(x));
        auto a = x.values(), b = y.values();
        for (int i = 0; i < 6; ++i) REQUIRE(std::abs(a[i] - b[i]) < 1e-12);
        if (x.is_interior()) REQUIRE(psi(x).is_interior());
    }
    auto t = parse_triple("3pi/4,pi/2;5pi/3,pi/6;pi,pi/5");
    auto tt = psi(psi(t)).coords();
    auto t0 = t.coords();
    for (int i = 0; i < 6; ++i) CHECK(*tt[i].pi == *t0[i].pi);
}

TEST_CASE("standard lift and elliptic_rep agree projectively") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int t = 0; t < 1000; ++t) {
        AnglePair p(u(rng), u(rng));
        Mat3 s = standard_lift(p).m, r = elliptic_rep(p).m;
        CHECK(std::abs(s.determinant() - cplx(1)) < 1e-12);
        Mat3 q = s * r.inverse();
        CHECK((q - q(0, 0) * Mat3::Identity()).norm() < 1e-12);
    }
}
