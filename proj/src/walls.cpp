#include "horn/walls.hpp"

#include <cmath>

#include "horn/error.hpp"

namespace horn {

std::string Truncation::str() const {
    return "sigma_" + ijk_name(sigma_idx) + (le ? " <= " : " >= ") + std::to_string(level) + "pi";
}

std::string Wall::name() const {
    if (kind == Kind::Spherical) return "Sigma_" + std::to_string(level) + "pi";
    return "H_" + ijk_name(ijk) + "=" + std::to_string(level) + "pi";
}

namespace {

constexpr int I111 = 0, I112 = 1, I121 = 2, I122 = 3, I211 = 4, I212 = 5, I221 = 6, I222 = 7;

Wall spherical(std::int64_t level, Layer layer, bool interior, std::vector<Truncation> tr) {
    Wall w;
    w.kind = Wall::Kind::Spherical;
    w.level = level;
    w.layer = layer;
    w.interior = interior;
    w.truncations = std::move(tr);
    return w;
}

Wall hyperbolic(int item, int ijk, std::int64_t level, Layer layer, bool interior, std::optional<bool> le,
                std::int64_t bound) {
    Wall w;
    w.kind = Wall::Kind::Hyperbolic;
    w.item = item;
    w.ijk = ijk;
    w.level = level;
    w.layer = layer;
    w.interior = interior;
    if (le) w.truncations.push_back({complement(ijk), *le, bound});
    return w;
}

std::vector<Wall> build_catalog() {
    std::vector<Wall> c;
    c.push_back(spherical(4, Layer::Omega, false,
                          {{I111, true, 4}, {I122, true, 2}, {I212, true, 2}, {I221, true, 2}}));
    c.push_back(spherical(6, Layer::One, true,
                          {{I222, true, 2}, {I112, true, 4}, {I121, true, 4}, {I211, true, 4}}));
    c.push_back(spherical(8, Layer::Omega2, false,
                          {{I111, true, 6}, {I122, true, 4}, {I212, true, 4}, {I221, true, 4}}));

    c.push_back(hyperbolic(1, I222, -4, Layer::Omega, false, std::nullopt, 0));
    c.push_back(hyperbolic(2, I222, 0, Layer::One, false, false, 4));
    for (int ijk : {I221, I212, I122}) c.push_back(hyperbolic(2, ijk, 0, Layer::One, true, false, 4));
    for (int ijk : {I221, I212, I122, I111}) c.push_back(hyperbolic(3, ijk, 2, Layer::Omega, false, true, 2));
    for (int ijk : {I112, I121, I211}) c.push_back(hyperbolic(3, ijk, 2, Layer::Omega, true, true, 2));
    for (int ijk : {I222, I211, I121, I112}) c.push_back(hyperbolic(4, ijk, 4, Layer::Omega2, false, false, 4));
    for (int ijk : {I122, I212, I221}) c.push_back(hyperbolic(4, ijk, 4, Layer::Omega2, true, false, 4));
    c.push_back(hyperbolic(5, I111, 6, Layer::One, false, true, 2));
    for (int ijk : {I112, I121, I211}) c.push_back(hyperbolic(5, ijk, 6, Layer::One, true, true, 2));
    c.push_back(hyperbolic(6, I111, 10, Layer::Omega2, false, std::nullopt, 0));
    return c;
}

int reverse_complement(int idx) {
    int i = (idx >> 2) & 1, j = (idx >> 1) & 1, k = idx & 1;
    return ((1 - k) << 2) | ((1 - j) << 1) | (1 - i);
}

}  // namespace

const std::vector<Wall>& wall_catalog() {
    static const std::vector<Wall> catalog = build_catalog();
    return catalog;
}

std::optional<std::size_t> find_wall(Wall::Kind kind, int ijk, std::int64_t level) {
    const auto& c = wall_catalog();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].kind != kind || c[i].level != level) continue;
        if (kind == Wall::Kind::Hyperbolic && c[i].ijk != ijk) continue;
        return i;
    }
    return std::nullopt;
}

std::size_t psi_wall(std::size_t wall_index) {
    const Wall& w = wall_catalog().at(wall_index);
    std::optional<std::size_t> r = w.kind == Wall::Kind::Spherical
                                       ? find_wall(w.kind, -1, 12 - w.level)
                                       : find_wall(w.kind, reverse_complement(w.ijk), 6 - w.level);
    if (!r) throw HornError(ErrorCode::Unresolvable, "psi image of " + w.name() + " is not in the catalog");
    return *r;
}

Angle form_value(const Wall& w, const LinearFormValues& v) {
    return w.kind == Wall::Kind::Spherical ? v.S : v.H[w.ijk];
}

bool truncation_holds(const Truncation& tr, const LinearFormValues& v, double tol) {
    int c = compare_level(v.sigma[tr.sigma_idx], Rational(tr.level), tol);
    return tr.le ? c <= 0 : c >= 0;
}

std::vector<ActiveWall> active_walls(const ClassTriple& t, double tol) {
    return active_walls(t, linear_forms(t), tol);
}

std::vector<ActiveWall> active_walls(const ClassTriple&, const LinearFormValues& v, double tol) {
    std::vector<ActiveWall> out;
    const auto& c = wall_catalog();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Angle x = form_value(c[i], v);
        if (compare_level(x, Rational(c[i].level), tol) != 0) continue;
        bool ok = true;
        for (const auto& tr : c[i].truncations) ok = ok && truncation_holds(tr, v, tol);
        if (ok) out.push_back({i, x.value - static_cast<double>(c[i].level) * kPi});
    }
    return out;
}

const char* to_string(FacetType t) {
    switch (t) {
        case FacetType::Type1: return "1";
        case FacetType::Type2: return "2";
        case FacetType::Type3: return "3";
        case FacetType::Type4: return "4";
        case FacetType::Unclassified: return "unclassified";
    }
    return "?";
}

namespace {

FacetType facet_type_oriented(int ijk, int m, int n) {
    const bool pair_low = ijk == I122 || ijk == I212 || ijk == I221;
    const bool pair_high = ijk == I211 || ijk == I121 || ijk == I112;
    if (pair_low && m == 1 && n == 1) return FacetType::Type1;
    if (pair_high && m == 2 && n == 2) return FacetType::Type2;
    if (ijk == I111 && m == 2 && n == 1) return FacetType::Type3;
    if (pair_high && m == 2 && n == 1) return FacetType::Type4;
    return FacetType::Unclassified;
}

}  // namespace

Facet facet_of(int ijk, int m, int n) {
    Facet f;
    f.ijk = ijk;
    f.m = m;
    f.n = n;
    f.type = facet_type_oriented(ijk, m, n);
    if (f.type == FacetType::Unclassified) f.type = facet_type_oriented(complement(ijk), n, m);
    f.walls[0] = find_wall(Wall::Kind::Spherical, -1, 2 * (m + n));
    f.walls[1] = find_wall(Wall::Kind::Hyperbolic, ijk, 2 * (2 * m - n));
    f.walls[2] = find_wall(Wall::Kind::Hyperbolic, complement(ijk), 2 * (2 * n - m));
    return f;
}

Facet facet_from_wall_levels(int ijk, int nh, int nhbar, int ns) {
    if ((nh + ns) % 3 != 0) return Facet{ijk, -1, -1, FacetType::Unclassified, {}};
    int m = (nh + ns) / 3;
    int n = ns - m;
    if (2 * n - m != nhbar) return Facet{ijk, -1, -1, FacetType::Unclassified, {}};
    return facet_of(ijk, m, n);
}

nlohmann::json to_json(const Wall& w) {
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& t : w.truncations)
        tr.push_back({{"sigma", ijk_name(t.sigma_idx)}, {"op", t.le ? "<=" : ">="}, {"level_over_pi", t.level}});
    return {{"kind", w.kind == Wall::Kind::Spherical ? "spherical" : "hyperbolic"},
            {"ijk", w.kind == Wall::Kind::Spherical ? nlohmann::json(nullptr) : nlohmann::json(ijk_name(w.ijk))},
            {"level_over_pi", w.level},
            {"truncation", tr},
            {"layer", to_string(w.layer)},
            {"interior", w.interior},
            {"name", w.name()}};
}

nlohmann::json to_json(const LinearFormValues& v) {
    nlohmann::json sigma, h;
    for (int i = 0; i < 8; ++i) {
        sigma[ijk_name(i)] = v.sigma[i].value;
        h[ijk_name(i)] = v.H[i].value;
    }
    return {{"S", v.S.value}, {"sigma", sigma}, {"H", h}};
}

}  // namespace horn
