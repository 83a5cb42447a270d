#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "horn/horn_low.hpp"
#include "horn/polytopes.hpp"
#include "horn/slice.hpp"

namespace horn {

using Rng = std::mt19937_64;

struct SamplerConfig {
    std::uint64_t seed = 42;
    std::size_t budget = 200000;
    // Final class error a Monte-Carlo witness must reach.
    double tol = 1e-8;
    // Distance below which a sampled class is handed to the local polish.
    double capture_radius = 1.0;
};

enum class Reducibility { Irreducible, Spherical, Hyperbolic, Total };
const char* to_string(Reducibility r);

struct WitnessTriple {
    GroupElement A, B, C;
    cplx product_scalar;
    Layer layer = Layer::One;
    Reducibility reducibility = Reducibility::Irreducible;
    std::string method;
    double class_error = 0.0;
};

struct WitnessSearch {
    bool found = false;
    WitnessTriple witness;
    std::size_t samples = 0;
    double best_distance = 0.0;  // smallest class distance reached
};

GroupElement random_u21(Rng& rng);

// K1 * a_r * K2 with K1, K2 Haar in U(2) x U(1) and a_r the boost by r ~ U[0, r_max]
// in the (e1, e3) plane. Reaches far conjugators that random_u21 rarely draws.
GroupElement random_cartan_u21(Rng& rng, double r_max = 4.0);

// Class of (AB)^{-1} for A = E(c1), B = Q E(c2) Q^{-1}; nullopt when AB is not elliptic.
std::vector<std::optional<AnglePair>> sample_momentum(const AnglePair& c1, const AnglePair& c2, std::size_t n,
                                                      Rng& rng);

// Common-eigenvector search on the generators A, B.
Reducibility classify_reducibility(const GroupElement& a, const GroupElement& b);

WitnessTriple spherical_witness(const ClassTriple& t);
WitnessTriple hyperbolic_witness(const ClassTriple& t, std::size_t wall_index);

WitnessSearch find_witness(const ClassTriple& t, const SamplerConfig& cfg);

struct DecompWitness {
    HermitianForm H;
    GroupElement R1, R2, R3, A, B, C;
};

// The explicit irreducible triple with all classes (2pi/3, pi/3). The Gram
// matrix is the transpose of the matrix as printed in row-vector convention.
DecompWitness decompfamily_witness();

// Smallest projective distance between an eigenvector of a and one of b.
double min_eigenvector_distance(const GroupElement& a, const GroupElement& b);

struct GridPoint {
    double a1 = 0.0, a2 = 0.0;
    bool skipped = false;
    std::string skip_reason;
    bool predicted_member = false;
    std::vector<Layer> predicted_layers;
    bool found = false;
    std::optional<Layer> witness_layer;
    std::size_t samples = 0;
    double best_distance = 0.0;
};

struct GridReport {
    std::vector<GridPoint> points;
    std::size_t agreements = 0;
    std::vector<std::size_t> disagreements;      // witness found for a predicted non-member, or wrong layer
    std::vector<std::size_t> missing_witnesses;  // predicted member, nothing found
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    double runtime_ms = 0.0;
};

// Six-dimensional distance from t to the nearest wall of the catalog,
// counting a wall only where its truncations (relaxed by margin) hold at the
// projection.
double wall_separation(const ClassTriple& t, double margin);

GridReport verify_grid(const SliceSpec& slice, int grid_n, const SamplerConfig& cfg, double separation = 0.05,
                       int threads = 1);

nlohmann::json to_json(const WitnessTriple& w);
nlohmann::json to_json(const WitnessSearch& s);
nlohmann::json to_json(const GridReport& r, bool with_runtime = true);

}  // namespace horn
