#include "horn/polytopes.hpp"

#include "horn/error.hpp"

namespace horn {

namespace {

constexpr int I111 = 0, I112 = 1, I121 = 2, I122 = 3, I211 = 4, I212 = 5, I221 = 6, I222 = 7;
constexpr int kS = -1;

struct Cond {
    int form;  // kS or an H index
    bool less;
    std::int64_t level;
};

const Angle& value_of(const LinearFormValues& v, int form) { return form == kS ? v.S : v.H[form]; }

bool strict(const Cond& c, const LinearFormValues& v, double tol) {
    int s = compare_level(value_of(v, c.form), Rational(c.level), tol);
    return c.less ? s < 0 : s > 0;
}

bool relaxed(const Cond& c, const LinearFormValues& v, double tol) {
    int s = compare_level(value_of(v, c.form), Rational(c.level), tol);
    return c.less ? s <= 0 : s >= 0;
}

const std::vector<Cond>& system_of(PolytopeId p) {
    static const std::vector<Cond> p4_main = {
        {kS, true, 4}, {I122, true, 2}, {I212, true, 2}, {I221, true, 2}, {I111, false, 2}};
    static const std::vector<Cond> p4_spike = {{I222, true, -4}};
    static const std::vector<Cond> p6 = {{I222, true, 0}, {I111, false, 6}};
    static const std::vector<Cond> p8_main = {
        {kS, false, 8}, {I211, false, 4}, {I121, false, 4}, {I112, false, 4}, {I222, true, 4}};
    static const std::vector<Cond> p8_spike = {{I111, false, 10}};
    switch (p) {
        case PolytopeId::P4_main: return p4_main;
        case PolytopeId::P4_spike: return p4_spike;
        case PolytopeId::P6: return p6;
        case PolytopeId::P8_main: return p8_main;
        case PolytopeId::P8_spike: return p8_spike;
    }
    return p6;
}

bool all_strict(const std::vector<Cond>& cs, const LinearFormValues& v, double tol) {
    for (const auto& c : cs)
        if (!strict(c, v, tol)) return false;
    return true;
}

bool any_strict(const std::vector<Cond>& cs, const LinearFormValues& v, double tol) {
    for (const auto& c : cs)
        if (strict(c, v, tol)) return true;
    return false;
}

std::string sign_name(int bits) {
    std::string s;
    for (int b = 2; b >= 0; --b) s += (bits >> b) & 1 ? '+' : '-';
    return s;
}

std::vector<CellRecord> build_cells() {
    std::vector<CellRecord> t;
    auto add = [&](Layer layer, std::string name, bool full, std::string system,
                   std::function<bool(const LinearFormValues&, double)> f) {
        t.push_back({{layer, std::move(name)}, full, std::move(system), std::move(f)});
    };

    // Layer omega: nine cells of P4, two empty cells.
    const std::array<int, 3> h4 = {I211, I121, I112};
    for (int bits : {0, 1, 2, 4, 3, 5, 6, 7}) {
        std::string sg = sign_name(bits);
        std::vector<Cond> cs = system_of(PolytopeId::P4_main);
        std::string sys = "P4_main";
        for (int b = 0; b < 3; ++b) {
            bool plus = (bits >> (2 - b)) & 1;
            cs.push_back({h4[b], !plus, 2});
            sys += std::string(", H_") + ijk_name(h4[b]) + (plus ? " > 2pi" : " < 2pi");
        }
        add(Layer::Omega, "C_4pi^" + sg, true, sys,
            [cs](const LinearFormValues& v, double tol) { return all_strict(cs, v, tol); });
    }
    add(Layer::Omega, "C_4pi^-", true, "H_222 < -4pi", [](const LinearFormValues& v, double tol) {
        return strict({I222, true, -4}, v, tol);
    });
    add(Layer::Omega, "C_4pi^c,1", false, "H_222 > -4pi and (S > 4pi or H_122 > 2pi or H_212 > 2pi or H_221 > 2pi)",
        [](const LinearFormValues& v, double tol) {
            return strict({I222, false, -4}, v, tol) &&
                   any_strict({{kS, false, 4}, {I122, false, 2}, {I212, false, 2}, {I221, false, 2}}, v, tol);
        });
    add(Layer::Omega, "C_4pi^c,2", false, "H_111 < 2pi", [](const LinearFormValues& v, double tol) {
        return strict({I111, true, 2}, v, tol);
    });

    // Layer 1: five cells of P6, one empty cell.
    const auto& p6 = system_of(PolytopeId::P6);
    for (auto [low, high] : {std::pair{I221, I112}, std::pair{I212, I121}, std::pair{I122, I211}}) {
        std::vector<Cond> cs = p6;
        cs.push_back({low, true, 0});
        cs.push_back({high, false, 6});
        add(Layer::One, "C_6pi^" + ijk_name(low), true,
            "P6, H_" + ijk_name(low) + " < 0, H_" + ijk_name(high) + " > 6pi",
            [cs](const LinearFormValues& v, double tol) { return all_strict(cs, v, tol); });
    }
    {
        std::vector<Cond> plus = p6, minus = p6;
        for (Cond c : {Cond{kS, false, 6}, Cond{I221, false, 0}, Cond{I212, false, 0}, Cond{I122, false, 0}})
            plus.push_back(c);
        for (Cond c : {Cond{kS, true, 6}, Cond{I112, true, 6}, Cond{I121, true, 6}, Cond{I211, true, 6}})
            minus.push_back(c);
        add(Layer::One, "C_6pi^+", true, "P6, S > 6pi, H_221 > 0, H_212 > 0, H_122 > 0",
            [plus](const LinearFormValues& v, double tol) { return all_strict(plus, v, tol); });
        add(Layer::One, "C_6pi^-", true, "P6, S < 6pi, H_112 < 6pi, H_121 < 6pi, H_211 < 6pi",
            [minus](const LinearFormValues& v, double tol) { return all_strict(minus, v, tol); });
    }
    add(Layer::One, "C_6pi^c", false, "H_222 > 0 or H_111 < 6pi", [](const LinearFormValues& v, double tol) {
        return any_strict({{I222, false, 0}, {I111, true, 6}}, v, tol);
    });

    // Layer omega^2: nine cells of P8, two empty cells.
    const std::array<int, 3> h8 = {I122, I212, I221};
    for (int bits : {0, 1, 2, 4, 3, 5, 6, 7}) {
        std::string sg = sign_name(bits);
        std::vector<Cond> cs = system_of(PolytopeId::P8_main);
        std::string sys = "P8_main";
        for (int b = 0; b < 3; ++b) {
            bool plus = (bits >> (2 - b)) & 1;
            cs.push_back({h8[b], !plus, 4});
            sys += std::string(", H_") + ijk_name(h8[b]) + (plus ? " > 4pi" : " < 4pi");
        }
        add(Layer::Omega2, "C_8pi^" + sg, true, sys,
            [cs](const LinearFormValues& v, double tol) { return all_strict(cs, v, tol); });
    }
    add(Layer::Omega2, "C_8pi^+", true, "H_111 > 10pi", [](const LinearFormValues& v, double tol) {
        return strict({I111, false, 10}, v, tol);
    });
    add(Layer::Omega2, "C_8pi^c,1", false, "H_111 < 10pi and (S < 8pi or H_211 < 4pi or H_121 < 4pi or H_112 < 4pi)",
        [](const LinearFormValues& v, double tol) {
            return strict({I111, true, 10}, v, tol) &&
                   any_strict({{kS, true, 8}, {I211, true, 4}, {I121, true, 4}, {I112, true, 4}}, v, tol);
        });
    add(Layer::Omega2, "C_8pi^c,2", false, "H_222 > 4pi", [](const LinearFormValues& v, double tol) {
        return strict({I222, false, 4}, v, tol);
    });
    return t;
}

}  // namespace

const char* to_string(PolytopeId p) {
    switch (p) {
        case PolytopeId::P4_main: return "P4_main";
        case PolytopeId::P4_spike: return "P4_spike";
        case PolytopeId::P6: return "P6";
        case PolytopeId::P8_main: return "P8_main";
        case PolytopeId::P8_spike: return "P8_spike";
    }
    return "?";
}

Layer polytope_layer(PolytopeId p) {
    switch (p) {
        case PolytopeId::P4_main:
        case PolytopeId::P4_spike: return Layer::Omega;
        case PolytopeId::P6: return Layer::One;
        default: return Layer::Omega2;
    }
}

PolytopeId psi_polytope(PolytopeId p) {
    switch (p) {
        case PolytopeId::P4_main: return PolytopeId::P8_main;
        case PolytopeId::P4_spike: return PolytopeId::P8_spike;
        case PolytopeId::P6: return PolytopeId::P6;
        case PolytopeId::P8_main: return PolytopeId::P4_main;
        case PolytopeId::P8_spike: return PolytopeId::P4_spike;
    }
    return p;
}

bool in_polytope(PolytopeId p, const LinearFormValues& v, double tol) { return all_strict(system_of(p), v, tol); }

bool in_polytope_closure(PolytopeId p, const LinearFormValues& v, double tol) {
    for (const auto& c : system_of(p))
        if (!relaxed(c, v, tol)) return false;
    return true;
}

const std::vector<CellRecord>& cell_table() {
    static const std::vector<CellRecord> table = build_cells();
    return table;
}

std::size_t cell_index(const std::string& name) {
    const auto& t = cell_table();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].id.name == name) return i;
    throw HornError(ErrorCode::Unresolvable, "no cell named " + name);
}

CellResult cell_id(const ClassTriple& t, Layer layer, double tol) { return cell_id(linear_forms(t), layer, tol); }

CellResult cell_id(const LinearFormValues& v, Layer layer, double tol) {
    CellResult r;
    const auto& walls = wall_catalog();
    ClassTriple dummy;
    for (const auto& a : active_walls(dummy, v, tol))
        if (walls[a.index].layer == layer) r.on_walls.push_back(a.index);
    if (r.on_wall()) return r;

    const auto& table = cell_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].id.layer != layer || !table[i].holds(v, tol)) continue;
        if (r.cell) throw HornError(ErrorCode::Unresolvable, "two cells match: " + table[*r.cell].id.name + " and " +
                                                                 table[i].id.name);
        r.cell = i;
    }
    if (!r.cell) throw HornError(ErrorCode::Unresolvable, std::string("no cell of layer ") + to_string(layer) + " matches");
    return r;
}

MembershipReport polytope_member(const ClassTriple& t) { return polytope_member(t, t.default_tol()); }

MembershipReport polytope_member(const ClassTriple& t, double tol) {
    LinearFormValues v = linear_forms(t);
    MembershipReport r;
    r.interior = t.is_interior();
    r.boundary_caveat = !r.interior;
    for (PolytopeId p : kAllPolytopes) {
        if (in_polytope_closure(p, v, tol)) {
            r.polytopes.push_back(p);
            r.layers.insert(polytope_layer(p));
        }
    }
    r.member = !r.polytopes.empty();
    for (Layer l : {Layer::One, Layer::Omega, Layer::Omega2}) {
        try {
            r.cell_per_layer[static_cast<int>(l)] = cell_id(v, l, tol);
        } catch (const HornError&) {
            // Only possible off the interior of T(G)^3; left unresolved.
        }
    }
    return r;
}

bool surjective_pair(const AnglePair& alpha, const AnglePair& beta) {
    Angle first = 2 * (alpha.a1 + beta.a1) - (alpha.a2 + beta.a2);
    Angle second = 2 * (alpha.a2 + beta.a2) - (alpha.a1 + beta.a1);
    return compare_level(first, Rational(6), 0.0) >= 0 && compare_level(second, Rational(-2), 0.0) <= 0;
}

bool psi_consistency(const ClassTriple& t) {
    MembershipReport a = polytope_member(t);
    MembershipReport b = polytope_member(psi(t), t.default_tol());
    std::set<PolytopeId> mapped, other(b.polytopes.begin(), b.polytopes.end());
    for (PolytopeId p : a.polytopes) mapped.insert(psi_polytope(p));
    return mapped == other;
}

nlohmann::json to_json(const CellResult& c) {
    if (c.on_wall()) {
        nlohmann::json walls = nlohmann::json::array();
        for (auto i : c.on_walls) walls.push_back(wall_catalog()[i].name());
        return {{"on_wall", walls}};
    }
    const CellRecord& rec = cell_table()[*c.cell];
    return {{"cell", rec.id.name}, {"full", rec.full}};
}

nlohmann::json to_json(const MembershipReport& r) {
    nlohmann::json layers = nlohmann::json::array(), polys = nlohmann::json::array(), cells;
    for (Layer l : r.layers) layers.push_back(to_string(l));
    for (PolytopeId p : r.polytopes) polys.push_back(to_string(p));
    for (Layer l : {Layer::One, Layer::Omega, Layer::Omega2}) {
        const auto& c = r.cell_per_layer[static_cast<int>(l)];
        cells[to_string(l)] = c ? to_json(*c) : nlohmann::json("unresolved");
    }
    return {{"interior", r.interior}, {"member", r.member},         {"layers", layers},
            {"polytopes", polys},     {"cell_per_layer", cells}, {"boundary_caveat", r.boundary_caveat}};
}

nlohmann::json cell_table_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : cell_table())
        rows.push_back({{"name", c.id.name}, {"layer", to_string(c.id.layer)}, {"full", c.full}, {"system", c.system}});
    return rows;
}

}  // namespace horn
