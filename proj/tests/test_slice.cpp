#include <random>

#include "doctest.h"
#include "horn/slice.hpp"

using namespace horn;

namespace {

SliceSpec fixed(int b1n, int b1d, int b2n, int b2d, int c1n, int c1d, int c2n, int c2d, int res = 600) {
    return SliceSpec::fixed(AnglePair(Angle::exact(b1n, b1d), Angle::exact(b2n, b2d)),
                            AnglePair(Angle::exact(c1n, c1d), Angle::exact(c2n, c2d)), res);
}

}  // namespace

TEST_CASE("symmetric slice component counts") {
    auto r = rasterize_slice(SliceSpec::symmetric());
    CHECK(r.components(Layer::Omega) == 5);
    CHECK(r.components(Layer::One) == 3);
    CHECK(r.components(Layer::Omega2) == 5);
}

TEST_CASE("slice with six 1-cells and only P6") {
    auto r = rasterize_slice(fixed(5, 4, 1, 2, 11, 6, 1, 2));
    CHECK(r.components(Layer::One) == 6);
    CHECK(r.count(kP6Bit) > 0);
    CHECK(r.count(kP4Bit) == 0);
    CHECK(r.count(kP8Bit) == 0);
}

TEST_CASE("slice with four omega-cells and three 1-cells") {
    auto r = rasterize_slice(fixed(6, 5, 4, 5, 1, 1, 1, 2));
    CHECK(r.components(Layer::Omega) == 4);
    CHECK(r.components(Layer::One) == 3);
}

TEST_CASE("slice with eight omega^2-cells") {
    auto r = rasterize_slice(fixed(11, 6, 5, 3, 5, 3, 4, 3));
    CHECK(r.components(Layer::Omega2) == 8);
}

TEST_CASE("slice with overlapping P6 and P8") {
    auto r = rasterize_slice(fixed(31, 16, 3, 2, 31, 16, 1, 1));
    CHECK(r.components(Layer::One) == 2);
    CHECK(r.components(Layer::Omega2) == 6);
    CHECK(r.count_overlap(kP6Bit, kP8Bit) > 0);
}

TEST_CASE("rendering is deterministic") {
    auto s = fixed(5, 4, 1, 2, 11, 6, 1, 2, 120);
    const std::string a = render_slice(s), b = render_slice(s);
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(render_slice(SliceSpec::symmetric(120)) != a);
}

TEST_CASE("restricted forms agree with the full forms") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (const auto& spec : {SliceSpec::symmetric(), fixed(6, 5, 4, 5, 1, 1, 1, 2)}) {
        for (int k = 0; k < 1000; ++k) {
            double x = u(rng), y = u(rng);
            if (x < y) std::swap(x, y);
            const auto t = spec.triple_at(x, y);
            const auto vals = t.values();
            for (const auto& w : wall_catalog()) {
                const auto f = w.form();
                const auto [p, q, r] = spec.restrict_form(f);
                REQUIRE(std::abs(p * x + q * y + r - f.eval(vals)) < 1e-12);
            }
        }
    }
}

TEST_CASE("wall segment endpoints lie on their hyperplanes") {
    for (const auto& spec : {SliceSpec::symmetric(), fixed(5, 4, 1, 2, 11, 6, 1, 2), fixed(6, 5, 4, 5, 1, 1, 1, 2),
                             fixed(11, 6, 5, 3, 5, 3, 4, 3), fixed(31, 16, 3, 2, 31, 16, 1, 1)}) {
        const auto segs = slice_walls(spec);
        CHECK_FALSE(segs.empty());
        const double px = kTwoPi / spec.resolution;
        for (const auto& s : segs) {
            const auto& w = wall_catalog()[s.wall];
            const auto [p, q, r] = spec.restrict_form(w.form());
            const double n = std::hypot(p, q);
            for (const auto& e : {s.p0, s.p1}) {
                INFO(spec.label() << " " << w.name());
                CHECK(std::abs(p * e[0] + q * e[1] + r - w.level * kPi) / n <= 0.5 * px);
                CHECK(e[0] >= e[1] - 0.5 * px);
                CHECK(e[0] <= kTwoPi + 0.5 * px);
                CHECK(e[1] >= -0.5 * px);
            }
        }
    }
}

TEST_CASE("raster bits stay inside the domain") {
    auto r = rasterize_slice(SliceSpec::symmetric(90));
    for (int iy = 0; iy < 90; ++iy)
        for (int ix = 0; ix < iy; ++ix) {
            const auto b = r.bits[static_cast<std::size_t>(iy) * 90 + ix];
            REQUIRE((b & 0x0f) == 0);
        }
    CHECK(r.count(kDomainBit) == 90 * 91 / 2);
}
