#include "horn/horn_low.hpp"

#include <cmath>

#include "horn/error.hpp"

namespace horn {

const char* to_string(U2Component c) {
    switch (c) {
        case U2Component::C0: return "C_0";
        case U2Component::C2pi: return "C_2pi";
        case U2Component::C4pi: return "C_4pi";
        case U2Component::C6pi: return "C_6pi";
        case U2Component::C8pi: return "C_8pi";
    }
    return "?";
}

U2Membership u2_member(const U2Triple& t) { return u2_member(t, t.default_tol()); }

U2Membership u2_member(const U2Triple& t, double tol) {
    LinearFormValues v = linear_forms(t);
    auto le = [&](int idx, std::int64_t level) { return compare_level(v.sigma[idx], Rational(level), tol) <= 0; };
    const int s111 = 0, s112 = 1, s121 = 2, s122 = 3, s211 = 4, s212 = 5, s221 = 6, s222 = 7;
    U2Membership r;
    auto at = [&](std::int64_t level) { return compare_level(v.S, Rational(level), tol) == 0; };
    if (at(0)) r.component = U2Component::C0;
    else if (at(2) && le(s222, 0) && le(s112, 2) && le(s121, 2) && le(s211, 2)) r.component = U2Component::C2pi;
    else if (at(4) && le(s111, 4) && le(s122, 2) && le(s212, 2) && le(s221, 2)) r.component = U2Component::C4pi;
    else if (at(6) && le(s222, 2) && le(s112, 4) && le(s121, 4) && le(s211, 4)) r.component = U2Component::C6pi;
    else if (at(8) && le(s111, 6) && le(s122, 4) && le(s212, 4) && le(s221, 4)) r.component = U2Component::C8pi;
    r.member = r.component.has_value();
    return r;
}

AnglePair u2_class(const Mat2& m) {
    Eigen::ComplexEigenSolver<Mat2> es(m, false);
    return AnglePair(std::arg(es.eigenvalues()(0)), std::arg(es.eigenvalues()(1)));
}

U2Solution u2_construct(const U2Triple& t) {
    if (!u2_member(t).member) throw HornError(ErrorCode::NoSolution, "triple is not a U(2) Horn solution");
    const double a1 = t.alpha.a1.value, a2 = t.alpha.a2.value;
    const double b1 = t.beta.a1.value, b2 = t.beta.a2.value;
    const double g1 = t.gamma.a1.value, g2 = t.gamma.a2.value;
    const cplx ea1 = std::polar(1.0, a1), ea2 = std::polar(1.0, a2);
    const cplx eb1 = std::polar(1.0, b1), eb2 = std::polar(1.0, b2);
    const cplx phase = std::polar(1.0, -(a1 + a2 + b1 + b2) / 2.0);

    // tr(A B(t)) is affine in s = sin^2 t; after removing the fixed determinant
    // phase it is real, and its target is fixed by gamma.
    const double f0 = ((ea1 * eb1 + ea2 * eb2) * phase).real();
    const double f1 = ((ea1 * eb2 + ea2 * eb1) * phase).real();
    const double target = ((std::polar(1.0, -g1) + std::polar(1.0, -g2)) * phase).real();

    double s = 0.0;
    const double span = f1 - f0;
    if (std::abs(span) > 1e-12) {
        s = (target - f0) / span;
    } else if (std::abs(target - f0) > 1e-9) {
        throw HornError(ErrorCode::BisectionFailure, "trace path is constant and misses the target");
    }
    if (s < -1e-9 || s > 1.0 + 1e-9) throw HornError(ErrorCode::BisectionFailure, "target not bracketed");
    s = std::clamp(s, 0.0, 1.0);
    const double rot = std::asin(std::sqrt(s));

    U2Solution out;
    out.rotation = rot;
    out.A = Mat2::Zero();
    out.A(0, 0) = ea1;
    out.A(1, 1) = ea2;
    Eigen::Matrix2d q;
    q << std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot);
    Mat2 d = Mat2::Zero();
    d(0, 0) = eb1;
    d(1, 1) = eb2;
    out.B = q.cast<cplx>() * d * q.transpose().cast<cplx>();
    out.C = (out.A * out.B).adjoint();

    if (pair_distance(u2_class(out.C), t.gamma) > 1e-9)
        throw HornError(ErrorCode::BisectionFailure, "constructed C misses the requested class");
    return out;
}

PU11Membership pu11_member(const PU11Triple& t) {
    bool exact = t.alpha.is_exact() && t.beta.is_exact() && t.gamma.is_exact();
    return pu11_member(t, exact ? 1e-9 : 1e-7);
}

PU11Membership pu11_member(const PU11Triple& t, double tol) {
    Angle s = t.alpha + t.beta + t.gamma;
    PU11Membership r;
    if (compare_level(s, Rational(2), tol) <= 0) r.layer = -1;
    else if (compare_level(s, Rational(4), tol) >= 0) r.layer = 1;
    r.member = r.layer.has_value();
    return r;
}

namespace {

// Rotation by theta about the point at hyperbolic distance d from 0 in direction phi, given
// ch = cosh(d/2), sh = sinh(d/2). Avoids forming 1 - |p|^2 for points near the boundary.
Mat2 rotation_about(double ch, double sh, double phi, double theta) {
    const cplx e = std::polar(sh, phi);
    Mat2 tp, tinv;
    tp << ch, e, std::conj(e), ch;
    tinv << ch, -e, -std::conj(e), ch;
    Mat2 d = Mat2::Zero();
    d(0, 0) = std::polar(1.0, theta / 2.0);
    d(1, 1) = std::polar(1.0, -theta / 2.0);
    return tp * d * tinv;
}

// Inverse in U(1,1): J m^* J with J = diag(1, -1).
Mat2 j_inverse(const Mat2& m) {
    Mat2 r = m.adjoint();
    r(0, 1) = -r(0, 1);
    r(1, 0) = -r(1, 0);
    return r;
}

}  // namespace

Mat2 disk_rotation(cplx p, double theta) {
    const double c = 1.0 / std::sqrt(1.0 - std::norm(p));
    const double r = std::abs(p);
    return rotation_about(c, c * r, std::arg(p), theta);
}

double pu11_angle(const Mat2& m) {
    Eigen::ComplexEigenSolver<Mat2> es(m);
    auto quad = [&](int k) {
        const auto& v = es.eigenvectors().col(k);
        return (std::norm(v(0)) - std::norm(v(1))) / v.squaredNorm();
    };
    int neg = quad(0) < quad(1) ? 0 : 1;
    double a = std::arg(es.eigenvalues()(1 - neg) / es.eigenvalues()(neg));
    if (a < 0) a += kTwoPi;
    if (kTwoPi - a <= 1e-12) a = 0.0;
    return a;
}

namespace {

struct Triangle {
    Mat2 A, B, C;
    cplx scalar;
};

bool is_scalar(const Mat2& m, cplx& s, double tol) {
    s = 0.5 * m.trace();
    return (m - s * Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

// Rotations by alpha, beta, gamma about the vertices of the triangle with
// angles alpha/2, beta/2, gamma/2 (requires alpha + beta + gamma < 2 pi).
Triangle triangle_rotations_at_first(double alpha, double beta, double gamma);

// The largest-angle vertex goes to the origin: the others then carry either a short distance or a
// small rotation, which keeps all three matrices well scaled. Cyclic shifts keep ABC scalar.
Triangle triangle_rotations(double alpha, double beta, double gamma) {
    if (alpha >= beta && alpha >= gamma) return triangle_rotations_at_first(alpha, beta, gamma);
    if (beta >= gamma) {
        Triangle t = triangle_rotations_at_first(beta, gamma, alpha);
        return {t.C, t.A, t.B, t.scalar};
    }
    Triangle t = triangle_rotations_at_first(gamma, alpha, beta);
    return {t.B, t.C, t.A, t.scalar};
}

Triangle triangle_rotations_at_first(double alpha, double beta, double gamma) {
    const double a = alpha / 2.0, b = beta / 2.0, g = gamma / 2.0;
    // cosh(side) - 1 from the angle law of cosines, written without cancellation.
    const double mab = (std::cos(g) + std::cos(a + b)) / (std::sin(a) * std::sin(b));
    const double mac = (std::cos(b) + std::cos(a + g)) / (std::sin(a) * std::sin(g));
    auto half = [](double m) {
        m = std::max(0.0, m);
        return std::pair{std::sqrt(1.0 + m / 2.0), std::sqrt(m / 2.0)};
    };
    const auto [chb, shb] = half(mab);
    const auto [chc, shc] = half(mac);
    Triangle best;
    double best_err = 1e300;
    for (double orient : {1.0, -1.0}) {
        Triangle t;
        t.A = rotation_about(1.0, 0.0, 0.0, alpha);
        t.B = rotation_about(chb, shb, 0.0, beta);
        t.C = rotation_about(chc, shc, orient * a, gamma);
        Mat2 p = t.A * t.B * t.C;
        t.scalar = 0.5 * p.trace();
        double err = (p - t.scalar * Mat2::Identity()).cwiseAbs().maxCoeff();
        if (err < best_err) {
            best_err = err;
            best = t;
        }
    }
    return best;
}

}  // namespace

PU11Solution pu11_construct(const PU11Triple& t) {
    const double al = t.alpha.value, be = t.beta.value, ga = t.gamma.value;
    if (al <= 0.0 || be <= 0.0 || ga <= 0.0)
        throw HornError(ErrorCode::DegenerateAngle, "PU(1,1) construction needs nonzero angles");
    PU11Membership mem = pu11_member(t);
    if (!mem.member) throw HornError(ErrorCode::NoSolution, "sigma lies in the gap (2pi, 4pi)");

    const double sigma = al + be + ga;
    const double eps = 1e-9;
    PU11Solution out;
    if (std::abs(sigma - kTwoPi) <= eps || std::abs(sigma - 2.0 * kTwoPi) <= eps) {
        out.A = disk_rotation(0.0, al);
        out.B = disk_rotation(0.0, be);
        out.C = disk_rotation(0.0, ga);
        out.common_fixed_point = true;
    } else if (sigma < kTwoPi) {
        Triangle tr = triangle_rotations(al, be, ga);
        out.A = tr.A;
        out.B = tr.B;
        out.C = tr.C;
    } else {
        Triangle tr = triangle_rotations(kTwoPi - ga, kTwoPi - be, kTwoPi - al);
        out.A = j_inverse(tr.C);
        out.B = j_inverse(tr.B);
        out.C = j_inverse(tr.A);
    }
    Mat2 p = out.A * out.B * out.C;
    if (!is_scalar(p, out.product_scalar, 1e-9))
        throw HornError(ErrorCode::NoSolution, "triangle construction did not close up");
    return out;
}

}  // namespace horn
