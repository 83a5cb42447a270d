#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "json.hpp"

namespace horn {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;
using Mat2 = Eigen::Matrix2cd;

struct Tolerances {
    double num = 1e-10;
    double unitary = 1e-9;
    double eig = 1e-9;       // relative to ||M||
    double type = 1e-9;      // relative to ||v||^2
    double repeated = 1e-7;  // unit eigenvalues closer than this share an eigenspace
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t;
    return t;
}

// Conjugate-symmetric Gram matrix G; the pairing is <v,w> = w^* G v.
struct HermitianForm {
    Mat3 entries = Mat3::Identity();

    static HermitianForm J();
    bool is_hermitian(double tol = 0.0) const;
};

// A 3x3 complex matrix together with the form it preserves.
struct GroupElement {
    Mat3 m = Mat3::Identity();
    HermitianForm form = HermitianForm::J();

    GroupElement() = default;
    explicit GroupElement(const Mat3& mat, const HermitianForm& h = HermitianForm::J()) : m(mat), form(h) {}

    double unitarity_residual() const;
    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(a.m * b.m, a.form);
    }
};

enum class VectorType { Negative, Null, Positive };
const char* to_string(VectorType t);

struct Signature {
    int p = 0;
    int n = 0;
    int z = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct EigenPair {
    cplx value;
    Vec3 vector;
};

cplx hermitian_pairing(const Vec3& v, const Vec3& w, const HermitianForm& h);
VectorType vector_type(const Vec3& v, const HermitianForm& h, const Tolerances& tol = default_tolerances());
Signature signature(const HermitianForm& h, const Tolerances& tol = default_tolerances());

// Roots of det(M - x I) by Cardano followed by Newton polishing.
std::vector<cplx> characteristic_roots(const Mat3& m);

// Three eigenpairs counted with multiplicity; vectors have unit Euclidean
// norm. Throws NonConvergence when M is not diagonalizable to within tol.
std::vector<EigenPair> eigensystem_3x3(const Mat3& m, const Tolerances& tol = default_tolerances());

GroupElement su_normalize(const GroupElement& g);

// JSON: row-major array of rows of {"re", "im"}.
nlohmann::json matrix_to_json(const Mat3& m);
Mat3 matrix_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(cplx z);

}  // namespace horn
