#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "horn/walls.hpp"

namespace horn {

enum class PolytopeId { P4_main, P4_spike, P6, P8_main, P8_spike };
const char* to_string(PolytopeId p);
Layer polytope_layer(PolytopeId p);
PolytopeId psi_polytope(PolytopeId p);
inline constexpr std::array<PolytopeId, 5> kAllPolytopes = {PolytopeId::P4_main, PolytopeId::P4_spike,
                                                             PolytopeId::P6, PolytopeId::P8_main,
                                                             PolytopeId::P8_spike};

// Strict membership in the open polytope and in its closure.
bool in_polytope(PolytopeId p, const LinearFormValues& v, double tol);
bool in_polytope_closure(PolytopeId p, const LinearFormValues& v, double tol);

struct CellId {
    Layer layer = Layer::One;
    std::string name;
    bool operator==(const CellId&) const = default;
};

struct CellRecord {
    CellId id;
    bool full = false;
    std::string system;
    // Strict system: every comparison must be strict (value off its level by
    // more than tol, or exactly for rational input).
    std::function<bool(const LinearFormValues&, double)> holds;
};

const std::vector<CellRecord>& cell_table();
std::size_t cell_index(const std::string& name);

struct CellResult {
    std::optional<std::size_t> cell;     // index into cell_table()
    std::vector<std::size_t> on_walls;   // indices into wall_catalog()

    bool on_wall() const { return !on_walls.empty(); }
};

CellResult cell_id(const ClassTriple& t, Layer layer, double tol);
CellResult cell_id(const LinearFormValues& v, Layer layer, double tol);

struct MembershipReport {
    bool interior = false;
    bool member = false;
    std::set<Layer> layers;
    std::vector<PolytopeId> polytopes;
    std::array<std::optional<CellResult>, 3> cell_per_layer;  // indexed by Layer
    bool boundary_caveat = false;
};

MembershipReport polytope_member(const ClassTriple& t, double tol);
MembershipReport polytope_member(const ClassTriple& t);

bool surjective_pair(const AnglePair& alpha, const AnglePair& beta);
bool psi_consistency(const ClassTriple& t);

nlohmann::json to_json(const CellResult& c);
nlohmann::json to_json(const MembershipReport& r);
nlohmann::json cell_table_json();

}  // namespace horn
