#pragma once

#include <array>
#include <optional>

#include "horn/forms.hpp"

namespace horn {

using U2Triple = ClassTriple;  // the U(2) chamber has the same shape as T(PU(2,1))

enum class U2Component { C0, C2pi, C4pi, C6pi, C8pi };
const char* to_string(U2Component c);

struct U2Membership {
    bool member = false;
    std::optional<U2Component> component;
};

U2Membership u2_member(const U2Triple& t);
U2Membership u2_member(const U2Triple& t, double tol);

struct U2Solution {
    Mat2 A, B, C;
    double rotation = 0.0;  // t* in [0, pi/2]
};

// A = diag(e^{i alpha}), B = Q(t) diag(e^{i beta}) Q(t)^T, C = (AB)^{-1}.
U2Solution u2_construct(const U2Triple& t);

struct PU11Triple {
    Angle alpha, beta, gamma;
};

struct PU11Membership {
    bool member = false;
    std::optional<int> layer;  // -1 or +1
};

PU11Membership pu11_member(const PU11Triple& t);
PU11Membership pu11_member(const PU11Triple& t, double tol);

struct PU11Solution {
    Mat2 A, B, C;  // preserve diag(1, -1)
    cplx product_scalar;
    bool common_fixed_point = false;
};

// Rotation by theta about p in the Poincare disk, as T_p diag(e^{i theta/2}, e^{-i theta/2}) T_p^{-1}.
Mat2 disk_rotation(cplx p, double theta);
// Rotation angle of an elliptic element of U(1,1): arg(lambda_pos / lambda_neg) in [0, 2pi).
double pu11_angle(const Mat2& m);

PU11Solution pu11_construct(const PU11Triple& t);

// Eigenvalue arguments of a 2x2 unitary matrix as a sorted pair.
AnglePair u2_class(const Mat2& m);

}  // namespace horn
