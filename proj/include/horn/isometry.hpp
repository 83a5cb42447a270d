#pragma once

#include <array>
#include <optional>
#include <string>

#include "horn/angles.hpp"
#include "horn/linalg.hpp"

namespace horn {

// Ordered pair a1 >= a2 of angles reduced into [0, 2pi).
struct AnglePair {
    Angle a1;
    Angle a2;

    AnglePair() : a1(Angle::exact(0)), a2(Angle::exact(0)) {}
    AnglePair(Angle x, Angle y);
    AnglePair(double x, double y) : AnglePair(Angle(x), Angle(y)) {}

    bool is_exact() const { return a1.is_exact() && a2.is_exact(); }
    bool is_interior() const;
    std::string str() const;
};

struct ClassTriple {
    AnglePair alpha;
    AnglePair beta;
    AnglePair gamma;

    // (alpha1, alpha2, beta1, beta2, gamma1, gamma2)
    std::array<Angle, 6> coords() const;
    std::array<double, 6> values() const;
    static ClassTriple from_values(const std::array<double, 6>& v);
    bool is_exact() const;
    bool is_interior() const;
    // 1e-9 for exact inputs, 1e-7 for floating inputs.
    double default_tol() const { return is_exact() ? 1e-9 : 1e-7; }
    std::string str() const;
};

ClassTriple parse_triple(const std::string& text);  // "a1,a2;b1,b2;c1,c2"

enum class Layer { One, Omega, Omega2 };
cplx layer_value(Layer u);
const char* to_string(Layer u);

enum class MirrorKind { Line, Point };

struct IsometryClass {
    enum class Kind { RegularElliptic, SpecialElliptic, Loxodromic, Parabolic };
    Kind kind = Kind::Parabolic;
    std::optional<AnglePair> angles;
    std::optional<MirrorKind> mirror;
    double discriminant = 0.0;

    bool is_elliptic() const { return kind == Kind::RegularElliptic || kind == Kind::SpecialElliptic; }
};
const char* to_string(IsometryClass::Kind k);
const char* to_string(MirrorKind k);

// Eigen-data of an elliptic element, relative to its own form.
struct EllipticData {
    AnglePair pair;
    cplx neg_eigenvalue;  // eigenvalue of the negative-type eigenvector, as given
    Vec3 neg_vector;
    bool special = false;
    MirrorKind mirror = MirrorKind::Line;
};

EllipticData elliptic_data(const GroupElement& g, const Tolerances& tol = default_tolerances());

double goldman_discriminant(cplx trace);

GroupElement elliptic_rep(const AnglePair& p);
IsometryClass classify(const GroupElement& g, const Tolerances& tol = default_tolerances());
AnglePair angle_pair(const GroupElement& g, const Tolerances& tol = default_tolerances());
GroupElement standard_lift(const AnglePair& p);
ClassTriple psi(const ClassTriple& t);
GroupElement complex_reflection(const Vec3& c, cplx eta, const HermitianForm& h = HermitianForm::J(),
                                const Tolerances& tol = default_tolerances());
Layer layer_product(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                    double scalar_tol = 1e-8);

// Circular distance between two angle pairs, componentwise then Euclidean.
double pair_distance(const AnglePair& p, const AnglePair& q);

nlohmann::json to_json(const AnglePair& p);
nlohmann::json to_json(const IsometryClass& c);

}  // namespace horn
