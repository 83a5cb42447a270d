#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "horn/error.hpp"
#include "support.hpp"

using namespace horn;
using horn::testing::random_interior;

TEST_CASE("cell table") {
    const auto& t = cell_table();
    CHECK(t.size() == 28);
    std::set<std::string> empty, names;
    int full = 0;
    std::map<Layer, std::pair<int, int>> per;  // full, empty
    for (const auto& c : t) {
        names.insert(c.id.name);
        if (c.full) {
            ++full;
            per[c.id.layer].first++;
        } else {
            empty.insert(c.id.name);
            per[c.id.layer].second++;
        }
    }
    CHECK(names.size() == 28);
    CHECK(full == 23);
    CHECK(empty == std::set<std::string>{"C_4pi^c,1", "C_4pi^c,2", "C_6pi^c", "C_8pi^c,1", "C_8pi^c,2"});
    CHECK(per[Layer::Omega] == std::pair{9, 2});
    CHECK(per[Layer::One] == std::pair{5, 1});
    CHECK(per[Layer::Omega2] == std::pair{9, 2});
    for (std::string n : {"C_4pi^---", "C_4pi^+++", "C_4pi^-", "C_6pi^221", "C_6pi^212", "C_6pi^122", "C_6pi^+",
                          "C_6pi^-", "C_8pi^+-+", "C_8pi^+"})
        CHECK(names.count(n) == 1);
    CHECK_THROWS_AS(cell_index("C_5pi"), HornError);
}

TEST_CASE("polytope_member examples") {
    auto a = polytope_member(parse_triple("7pi/4,3pi/4;7pi/4,3pi/4;7pi/4,3pi/4"));
    CHECK(a.member);
    CHECK(a.layers == std::set<Layer>{Layer::One});
    CHECK(a.polytopes == std::vector<PolytopeId>{PolytopeId::P6});
    CHECK_FALSE(a.boundary_caveat);

    auto b = polytope_member(parse_triple("pi/4,pi/16;pi/4,pi/16;pi/4,pi/16"));
    CHECK_FALSE(b.member);
    CHECK(b.layers.empty());

    auto c = polytope_member(parse_triple("3pi/2,pi/2;3pi/2,pi/2;3pi/2,pi/2"));
    CHECK(c.member);
    CHECK(c.polytopes == std::vector<PolytopeId>{PolytopeId::P6});
    const auto& on = c.cell_per_layer[static_cast<int>(Layer::One)];
    REQUIRE(on);
    CHECK(on->on_wall());

    auto d = polytope_member(parse_triple("pi,0;pi,0;0,0"));
    CHECK(d.boundary_caveat);
    CHECK_FALSE(d.interior);
}

TEST_CASE("cell_id examples") {
    auto a = cell_id(parse_triple("7pi/4,3pi/4;7pi/4,3pi/4;7pi/4,3pi/4"), Layer::One, 1e-9);
    REQUIRE(a.cell);
    CHECK(cell_table()[*a.cell].id.name == "C_6pi^+");

    auto b = cell_id(parse_triple("pi/4,pi/16;pi/4,pi/16;pi/4,pi/16"), Layer::Omega, 1e-9);
    REQUIRE(b.cell);
    CHECK(cell_table()[*b.cell].id.name == "C_4pi^c,2");

    auto c = cell_id(parse_triple("3pi/4,pi/2;2pi/3,pi/3;2pi/3,pi/3"), Layer::Omega, 1e-9);
    CHECK_FALSE(c.cell);
    std::set<std::string> walls;
    for (auto i : c.on_walls) walls.insert(wall_catalog()[i].name());
    CHECK(walls == std::set<std::string>{"H_112=2pi", "H_121=2pi"});
}

TEST_CASE("membership report is consistent with the cells") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 20000; ++k) {
        auto t = random_interior(rng);
        auto r = polytope_member(t, 1e-7);
        REQUIRE(r.member == !r.polytopes.empty());
        for (PolytopeId p : r.polytopes) REQUIRE(r.layers.count(polytope_layer(p)) == 1);
        for (Layer l : {Layer::One, Layer::Omega, Layer::Omega2}) {
            const auto& c = r.cell_per_layer[static_cast<int>(l)];
            REQUIRE(c);
            if (c->on_wall()) continue;
            // Off the walls, a full cell is exactly membership in that layer.
            REQUIRE(cell_table()[*c->cell].full == (r.layers.count(l) == 1));
        }
    }
}

TEST_CASE("tiling: exactly one cell per layer off the walls") {
    std::mt19937_64 rng(52);
    int resolved = 0;
    for (int k = 0; k < 20000; ++k) {
        auto t = random_interior(rng);
        auto v = linear_forms(t);
        for (Layer l : {Layer::One, Layer::Omega, Layer::Omega2}) {
            int matches = 0;
            for (const auto& c : cell_table())
                if (c.id.layer == l && c.holds(v, 1e-7)) ++matches;
            bool near_wall = false;
            for (const auto& a : active_walls(t, v, 1e-7)) near_wall |= wall_catalog()[a.index].layer == l;
            if (near_wall) continue;
            REQUIRE(matches == 1);
            ++resolved;
        }
    }
    CHECK(resolved > 50000);
}

TEST_CASE("walls separate cells according to their flags") {
    std::mt19937_64 rng(53);
    const auto& cat = wall_catalog();
    for (std::size_t w = 0; w < cat.size(); ++w) {
        int checked = 0;
        for (int k = 0; k < 40; ++k) {
            auto s = horn::testing::sample_on_wall(w, rng, 2e-3);
            if (!s) break;
            auto lo = cell_id(ClassTriple::from_values(horn::testing::shifted(*s, -1e-3)), cat[w].layer, 1e-9);
            auto hi = cell_id(ClassTriple::from_values(horn::testing::shifted(*s, 1e-3)), cat[w].layer, 1e-9);
            REQUIRE(lo.cell);
            REQUIRE(hi.cell);
            CHECK(*lo.cell != *hi.cell);
            const bool a = cell_table()[*lo.cell].full, b = cell_table()[*hi.cell].full;
            if (cat[w].interior) CHECK((a && b));
            else CHECK(a != b);
            ++checked;
        }
        INFO("wall " << cat[w].name());
        CHECK(checked == 40);
    }
}

TEST_CASE("psi symmetry of membership") {
    CHECK(psi_consistency(parse_triple("7pi/4,3pi/4;7pi/4,3pi/4;7pi/4,3pi/4")));
    auto img = polytope_member(psi(parse_triple("7pi/4,3pi/4;7pi/4,3pi/4;7pi/4,3pi/4")));
    CHECK(img.polytopes == std::vector<PolytopeId>{PolytopeId::P6});
    CHECK(psi_consistency(parse_triple("pi,pi;pi,pi;pi,pi")));

    std::mt19937_64 rng(54);
    for (int k = 0; k < 10000; ++k) REQUIRE(psi_consistency(random_interior(rng)));
}

TEST_CASE("surjective_pair examples") {
    CHECK(surjective_pair(AnglePair(kTwoPi - 0.01, 0.0), AnglePair(kTwoPi - 0.01, 0.0)));
    CHECK_FALSE(surjective_pair(AnglePair(Angle::exact(5, 4), Angle::exact(1, 2)),
                                AnglePair(Angle::exact(11, 6), Angle::exact(1, 2))));
    CHECK_FALSE(surjective_pair(AnglePair(0.0, 0.0), AnglePair(0.0, 0.0)));
}

TEST_CASE("surjective pairs put every gamma in the closure of P6") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    int pairs = 0;
    while (pairs < 100) {
        AnglePair a(u(rng), u(rng)), b(u(rng), u(rng));
        if (!surjective_pair(a, b)) continue;
        ++pairs;
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                double g1 = (i + 0.5) * kTwoPi / 20, g2 = (j + 0.5) * kTwoPi / 20;
                ClassTriple t{a, b, AnglePair(g1, g2)};
                REQUIRE(in_polytope_closure(PolytopeId::P6, linear_forms(t), 1e-9));
            }
    }
}

TEST_CASE("the diagonal meets full cells only on reducible walls") {
    // On a1 = a2, b1 = b2, c1 = c2 every H_ijk equals sigma_111, so no strict full-cell system can hold.
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (int k = 0; k < 20000; ++k) {
        const double a = u(rng), b = u(rng), c = u(rng);
        auto v = linear_forms(ClassTriple::from_values({a, a, b, b, c, c}));
        for (const auto& cell : cell_table())
            if (cell.full) REQUIRE_FALSE(cell.holds(v, 1e-9));
    }
}

TEST_CASE("membership report JSON") {
    auto j = to_json(polytope_member(parse_triple("7pi/4,3pi/4;7pi/4,3pi/4;7pi/4,3pi/4")));
    CHECK(j["member"] == true);
    CHECK(j["layers"] == nlohmann::json::array({"1"}));
    CHECK(j["cell_per_layer"]["1"]["cell"] == "C_6pi^+");
    CHECK(j["cell_per_layer"]["1"]["full"] == true);
    CHECK(j["boundary_caveat"] == false);
    CHECK(cell_table_json().size() == 28);
}
