#include "horn/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "horn/error.hpp"

namespace horn {

HermitianForm HermitianForm::J() {
    HermitianForm h;
    h.entries = Mat3::Identity();
    h.entries(2, 2) = -1.0;
    return h;
}

bool HermitianForm::is_hermitian(double tol) const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double GroupElement::unitarity_residual() const {
    return (m.adjoint() * form.entries * m - form.entries).cwiseAbs().maxCoeff();
}

GroupElement GroupElement::inverse() const {
    const Mat3& g = form.entries;
    return GroupElement(g.inverse() * m.adjoint() * g, form);
}

const char* to_string(VectorType t) {
    switch (t) {
        case VectorType::Negative: return "Negative";
        case VectorType::Null: return "Null";
        case VectorType::Positive: return "Positive";
    }
    return "?";
}

cplx hermitian_pairing(const Vec3& v, const Vec3& w, const HermitianForm& h) {
    return w.dot(h.entries * v);  // Eigen's dot conjugates its left operand
}

VectorType vector_type(const Vec3& v, const HermitianForm& h, const Tolerances& tol) {
    double n2 = v.squaredNorm();
    if (n2 == 0.0) throw HornError(ErrorCode::ZeroVector, "vector_type of the zero vector");
    double q = hermitian_pairing(v, v, h).real();
    if (q < -tol.type * n2) return VectorType::Negative;
    if (q > tol.type * n2) return VectorType::Positive;
    return VectorType::Null;
}

Signature signature(const HermitianForm& h, const Tolerances& tol) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(h.entries, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    Signature s;
    for (int i = 0; i < 3; ++i) {
        if (ev(i) > tol.type * scale) ++s.p;
        else if (ev(i) < -tol.type * scale) ++s.n;
        else ++s.z;
    }
    return s;
}

std::vector<cplx> characteristic_roots(const Mat3& m) {
    // x^3 + a x^2 + b x + c
    cplx a = -m.trace();
    cplx b = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
             m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    cplx c = -m.determinant();

    cplx p = b - a * a / 3.0;
    cplx q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx u3 = -q / 2.0 + s;
    cplx alt = -q / 2.0 - s;
    if (std::abs(alt) > std::abs(u3)) u3 = alt;

    std::vector<cplx> roots(3);
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    if (std::abs(u3) == 0.0) {
        for (auto& r : roots) r = -a / 3.0;
    } else {
        cplx u = std::pow(u3, 1.0 / 3.0);
        for (int k = 0; k < 3; ++k) {
            roots[k] = u - p / (3.0 * u) - a / 3.0;
            u *= omega;
        }
    }

    for (auto& r : roots) {
        for (int it = 0; it < 4; ++it) {
            cplx f = ((r + a) * r + b) * r + c;
            cplx df = (3.0 * r + 2.0 * a) * r + b;
            if (std::abs(df) < 1e-12 * (1.0 + std::abs(r) * std::abs(r))) break;
            cplx step = f / df;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            cplx next = r - step;
            cplx fn = ((next + a) * next + b) * next + c;
            if (std::abs(fn) >= std::abs(f)) break;
            r = next;
        }
    }
    return roots;
}

namespace {

struct KernelResult {
    std::vector<Vec3> basis;
    double residual = 0.0;
};

// Right singular vectors of M - lambda I for the `dim` smallest singular values.
KernelResult kernel_of(const Mat3& m, cplx lambda, int dim) {
    Mat3 n = m - lambda * Mat3::Identity();
    Eigen::JacobiSVD<Mat3> svd(n, Eigen::ComputeFullV);
    KernelResult r;
    for (int k = 3 - dim; k < 3; ++k) {
        Vec3 v = svd.matrixV().col(k);
        r.basis.push_back(v.normalized());
        r.residual = std::max(r.residual, (n * v).norm());
    }
    return r;
}

// Two-sided Rayleigh iteration on a simple root: quadratic convergence, unlike the right-vector quotient.
cplx refine_simple_root(const Mat3& m, cplx lambda, int iterations = 3) {
    for (int it = 0; it < iterations; ++it) {
        Mat3 n = m - lambda * Mat3::Identity();
        Eigen::JacobiSVD<Mat3> svd(n, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Vec3 v = svd.matrixV().col(2), w = svd.matrixU().col(2);
        const cplx denom = w.dot(v);
        if (std::abs(denom) < 1e-8) break;
        const cplx step = w.dot(n * v) / denom;
        lambda += step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(lambda))) break;
    }
    return lambda;
}

bool simple_pair(const Mat3& m, cplx lambda, double target, EigenPair& out) {
    KernelResult k = kernel_of(m, lambda, 1);
    if (k.residual > target) {
        // Rayleigh refinement of the root before giving up.
        const Vec3& v = k.basis[0];
        cplx refined = v.dot(m * v);
        KernelResult k2 = kernel_of(m, refined, 1);
        if (k2.residual > target) return false;
        k = k2;
        lambda = refined;
    }
    out = {lambda, k.basis[0]};
    return true;
}

}  // namespace

std::vector<EigenPair> eigensystem_3x3(const Mat3& m, const Tolerances& tol) {
    if (!m.allFinite()) throw HornError(ErrorCode::NonConvergence, "non-finite matrix");
    const double norm = std::max(m.norm(), 1e-300);
    const double target = tol.eig * std::max(norm, 1.0);
    std::vector<cplx> roots = characteristic_roots(m);

    // Cardano splits a double root by about sqrt(eps) * ||M||, so root proximity only screens
    // candidates; a double root is accepted when M - lambda I has a two-dimensional kernel.
    const double screen = std::max(tol.repeated, 1e-4) * std::max(1.0, norm);
    auto close = [&](cplx x, cplx y) { return std::abs(x - y) < screen; };

    auto all_simple = [&]() -> std::vector<EigenPair> {
        std::vector<EigenPair> out(3);
        for (int i = 0; i < 3; ++i) {
            if (!simple_pair(m, refine_simple_root(m, roots[i], 1), target, out[i]))
                throw HornError(ErrorCode::NonConvergence, "eigenvector residual above target");
        }
        Mat3 v;
        for (int i = 0; i < 3; ++i) v.col(i) = out[i].vector;
        Eigen::JacobiSVD<Mat3> svd(v);
        if (svd.singularValues()(2) < 1e-6)
            throw HornError(ErrorCode::NonConvergence, "eigenvectors are not independent");
        return out;
    };

    // Double root opposite roots[l]: the simple root is well conditioned and the trace fixes the other.
    auto try_double = [&](int l, std::vector<EigenPair>& out) {
        const cplx simple = refine_simple_root(m, roots[l]);
        cplx rep = (m.trace() - simple) / 2.0;
        KernelResult k = kernel_of(m, rep, 2);
        EigenPair single;
        if (k.residual > target || !simple_pair(m, simple, target, single)) return false;
        Mat3 v;
        v << k.basis[0], k.basis[1], single.vector;
        if (Eigen::JacobiSVD<Mat3>(v).singularValues()(2) < 1e-6) return false;  // defective
        out = {{rep, k.basis[0]}, {rep, k.basis[1]}, single};
        return true;
    };

    const bool c01 = close(roots[0], roots[1]), c02 = close(roots[0], roots[2]), c12 = close(roots[1], roots[2]);
    if (c01 && c02 && c12) {
        cplx mean = m.trace() / 3.0;
        if ((m - mean * Mat3::Identity()).norm() <= target)
            return {{mean, Vec3::UnitX()}, {mean, Vec3::UnitY()}, {mean, Vec3::UnitZ()}};
    }
    std::vector<EigenPair> out;
    if (c12 && try_double(0, out)) return out;
    if (c02 && try_double(1, out)) return out;
    if (c01 && try_double(2, out)) return out;
    return all_simple();
}

GroupElement su_normalize(const GroupElement& g) {
    cplx det = g.m.determinant();
    double mod = std::abs(det);
    if (!(mod > 1e-300) || !std::isfinite(mod))
        throw HornError(ErrorCode::SingularMatrix, "determinant is zero");
    cplx factor = std::polar(std::pow(mod, -1.0 / 3.0), -std::arg(det) / 3.0);
    return GroupElement(factor * g.m, g.form);
}

nlohmann::json complex_to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json matrix_to_json(const Mat3& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat3 matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw HornError(ErrorCode::ParseError, "matrix must have 3 rows");
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != 3)
            throw HornError(ErrorCode::ParseError, "matrix row must have 3 entries");
        for (int c = 0; c < 3; ++c) {
            const auto& e = row[c];
            if (e.is_number()) m(r, c) = cplx(e.get<double>(), 0.0);
            else m(r, c) = cplx(e.value("re", 0.0), e.value("im", 0.0));
        }
    }
    return m;
}

}  // namespace horn
