#pragma once

#include <array>
#include <string>

#include "horn/isometry.hpp"

namespace horn {

// Index of (i,j,k) in {1,2}^3; the complementary triple is 7 - index.
constexpr int ijk_index(int i, int j, int k) { return (i - 1) * 4 + (j - 1) * 2 + (k - 1); }
constexpr int complement(int idx) { return 7 - idx; }
std::string ijk_name(int idx);     // "122"
int ijk_from_name(const std::string& name);

// Integer linear form in the six coordinates (a1, a2, b1, b2, c1, c2).
struct LinearForm {
    std::array<int, 6> c{};

    Angle eval(const std::array<Angle, 6>& x) const;
    double eval(const std::array<double, 6>& x) const;
    double norm() const;

    static LinearForm S();
    static LinearForm sigma(int idx);
    static LinearForm H(int idx);
};

struct LinearFormValues {
    Angle S;
    std::array<Angle, 8> sigma;
    std::array<Angle, 8> H;
};

LinearFormValues linear_forms(const ClassTriple& t);

}  // namespace horn
