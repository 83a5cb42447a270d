#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horn/forms.hpp"

namespace horn {

// sigma_idx <= level*pi (le) or >= level*pi (!le).
struct Truncation {
    int sigma_idx = 0;
    bool le = true;
    std::int64_t level = 0;

    std::string str() const;
};

struct Wall {
    enum class Kind { Spherical, Hyperbolic };
    Kind kind = Kind::Spherical;
    int ijk = -1;            // hyperbolic walls only
    std::int64_t level = 0;  // multiple of pi
    std::vector<Truncation> truncations;
    Layer layer = Layer::One;
    bool interior = false;
    int item = 0;  // hyperbolic family 1..6, 0 for spherical walls

    LinearForm form() const { return kind == Kind::Spherical ? LinearForm::S() : LinearForm::H(ijk); }
    std::string name() const;
    bool operator==(const Wall& o) const { return kind == o.kind && ijk == o.ijk && level == o.level; }
};

const std::vector<Wall>& wall_catalog();

// Index into wall_catalog() of the wall with the given equation, if any.
std::optional<std::size_t> find_wall(Wall::Kind kind, int ijk, std::int64_t level);

// Image of a catalog wall under psi.
std::size_t psi_wall(std::size_t wall_index);

Angle form_value(const Wall& w, const LinearFormValues& v);
bool truncation_holds(const Truncation& tr, const LinearFormValues& v, double tol);

struct ActiveWall {
    std::size_t index;
    double signed_distance;
};

std::vector<ActiveWall> active_walls(const ClassTriple& t, double tol);
std::vector<ActiveWall> active_walls(const ClassTriple& t, const LinearFormValues& v, double tol);

enum class FacetType { Type1, Type2, Type3, Type4, Unclassified };
const char* to_string(FacetType t);

struct Facet {
    int ijk = 0;
    int m = 0;
    int n = 0;
    FacetType type = FacetType::Unclassified;
    // Sigma_{2(m+n)pi}, {H_ijk = 2(2m-n)pi}, {H_comp = 2(2n-m)pi}; each may be
    // absent from the catalog for unclassified facets.
    std::array<std::optional<std::size_t>, 3> walls;
};

// T_ijk(m,n) = {sigma_ijk = 2m pi, sigma_comp = 2n pi}. T_ijk(m,n) and
// T_comp(n,m) are the same facet; the type does not depend on the spelling.
Facet facet_of(int ijk, int m, int n);
// The same facet addressed by its wall levels: H_ijk = 2 nh pi, H_comp = 2 nhbar pi, S = 2 ns pi.
Facet facet_from_wall_levels(int ijk, int nh, int nhbar, int ns);

nlohmann::json to_json(const Wall& w);
nlohmann::json to_json(const LinearFormValues& v);

}  // namespace horn
