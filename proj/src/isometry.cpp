#include "horn/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "horn/error.hpp"

namespace horn {

namespace {

bool angle_less(const Angle& x, const Angle& y) {
    if (x.pi && y.pi) return compare(*x.pi, *y.pi) < 0;
    return x.value < y.value;
}

double circ(double x, double y) {
    double d = std::fmod(std::abs(x - y), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

AnglePair::AnglePair(Angle x, Angle y) {
    x = reduce_mod_2pi(x);
    y = reduce_mod_2pi(y);
    if (angle_less(x, y)) std::swap(x, y);
    a1 = x;
    a2 = y;
}

bool AnglePair::is_interior() const {
    if (is_exact()) return compare(*a2.pi, Rational(0)) > 0 && compare(*a2.pi, *a1.pi) < 0;
    return a2.value > 0.0 && a1.value > a2.value && a1.value < kTwoPi;
}

std::string AnglePair::str() const { return a1.str() + "," + a2.str(); }

std::array<Angle, 6> ClassTriple::coords() const {
    return {alpha.a1, alpha.a2, beta.a1, beta.a2, gamma.a1, gamma.a2};
}

std::array<double, 6> ClassTriple::values() const {
    return {alpha.a1.value, alpha.a2.value, beta.a1.value, beta.a2.value, gamma.a1.value, gamma.a2.value};
}

ClassTriple ClassTriple::from_values(const std::array<double, 6>& v) {
    return {AnglePair(v[0], v[1]), AnglePair(v[2], v[3]), AnglePair(v[4], v[5])};
}

bool ClassTriple::is_exact() const { return alpha.is_exact() && beta.is_exact() && gamma.is_exact(); }

bool ClassTriple::is_interior() const { return alpha.is_interior() && beta.is_interior() && gamma.is_interior(); }

std::string ClassTriple::str() const { return alpha.str() + ";" + beta.str() + ";" + gamma.str(); }

ClassTriple parse_triple(const std::string& text) {
    std::vector<Angle> a;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',' || text[i] == ';') {
            a.push_back(parse_angle(std::string_view(text).substr(start, i - start)));
            start = i + 1;
        }
    }
    if (a.size() != 6)
        throw HornError(ErrorCode::ParseError, "expected six angles 'a1,a2;b1,b2;c1,c2', got " +
                                                   std::to_string(a.size()));
    return {AnglePair(a[0], a[1]), AnglePair(a[2], a[3]), AnglePair(a[4], a[5])};
}

cplx layer_value(Layer u) {
    switch (u) {
        case Layer::One: return 1.0;
        case Layer::Omega: return std::polar(1.0, kTwoPi / 3.0);
        case Layer::Omega2: return std::polar(1.0, 2.0 * kTwoPi / 3.0);
    }
    return 1.0;
}

const char* to_string(Layer u) {
    switch (u) {
        case Layer::One: return "1";
        case Layer::Omega: return "omega";
        case Layer::Omega2: return "omega^2";
    }
    return "?";
}

const char* to_string(IsometryClass::Kind k) {
    switch (k) {
        case IsometryClass::Kind::RegularElliptic: return "RegularElliptic";
        case IsometryClass::Kind::SpecialElliptic: return "SpecialElliptic";
        case IsometryClass::Kind::Loxodromic: return "Loxodromic";
        case IsometryClass::Kind::Parabolic: return "Parabolic";
    }
    return "?";
}

const char* to_string(MirrorKind k) { return k == MirrorKind::Line ? "Line" : "Point"; }

double goldman_discriminant(cplx z) {
    double m2 = std::norm(z);
    return m2 * m2 - 8.0 * (z * z * z).real() + 18.0 * m2 - 27.0;
}

EllipticData elliptic_data(const GroupElement& g, const Tolerances& tol) {
    const double scale = std::pow(std::abs(g.m.determinant()), -1.0 / 3.0);
    if (!std::isfinite(scale)) throw HornError(ErrorCode::NotElliptic, "singular matrix");
    std::vector<EigenPair> eig;
    try {
        eig = eigensystem_3x3(scale * g.m, tol);
    } catch (const HornError&) {
        throw HornError(ErrorCode::NotElliptic, "not diagonalizable");
    }
    for (auto& e : eig) {
        if (std::abs(std::abs(e.value) - 1.0) > 1e-6)
            throw HornError(ErrorCode::NotElliptic, "spectrum off the unit circle");
        e.value /= std::abs(e.value);
    }

    auto quad = [&](const Vec3& v) { return hermitian_pairing(v, v, g.form).real() / v.squaredNorm(); };
    auto same = [&](cplx x, cplx y) { return std::abs(x - y) < tol.repeated; };

    EllipticData d;
    cplx neg;
    std::array<cplx, 2> pos;

    bool s01 = same(eig[0].value, eig[1].value), s02 = same(eig[0].value, eig[2].value),
         s12 = same(eig[1].value, eig[2].value);
    if (s01 && s02 && s12) {
        d.special = true;
        d.mirror = MirrorKind::Line;
        neg = eig[0].value;
        pos = {neg, neg};
        Eigen::SelfAdjointEigenSolver<Mat3> es(g.form.entries);
        d.neg_vector = es.eigenvectors().col(0);
    } else if (s01 || s02 || s12) {
        int i = 0, j = 1, l = 2;
        if (s02) { i = 0; j = 2; l = 1; }
        if (s12) { i = 1; j = 2; l = 0; }
        d.special = true;
        Eigen::Matrix<cplx, 3, 2> b;
        b.col(0) = eig[i].vector;
        b.col(1) = eig[j].vector;
        Mat2 gram = b.adjoint() * g.form.entries * b;
        gram = 0.5 * (gram + gram.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Mat2> es(gram);
        cplx rep = 0.5 * (eig[i].value + eig[j].value);
        rep /= std::abs(rep);
        Vec3 low = b * es.eigenvectors().col(0);
        if (quad(low) < -tol.type) {
            d.mirror = MirrorKind::Line;
            neg = rep;
            d.neg_vector = low.normalized();
            pos = {rep, eig[l].value};
        } else {
            if (quad(eig[l].vector) >= -tol.type)
                throw HornError(ErrorCode::NotElliptic, "no negative-type eigenvector");
            d.mirror = MirrorKind::Point;
            neg = eig[l].value;
            d.neg_vector = eig[l].vector;
            pos = {rep, rep};
        }
    } else {
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (quad(eig[i].vector) < quad(eig[k].vector)) k = i;
        if (quad(eig[k].vector) >= -tol.type)
            throw HornError(ErrorCode::NotElliptic, "no negative-type eigenvector");
        neg = eig[k].value;
        d.neg_vector = eig[k].vector;
        int o = 0;
        for (int i = 0; i < 3; ++i)
            if (i != k) pos[o++] = eig[i].value;
    }
    d.neg_eigenvalue = neg / scale;
    d.pair = AnglePair(std::arg(pos[0] / neg), std::arg(pos[1] / neg));
    return d;
}

GroupElement elliptic_rep(const AnglePair& p) {
    Mat3 m = Mat3::Zero();
    m(0, 0) = std::polar(1.0, p.a1.value);
    m(1, 1) = std::polar(1.0, p.a2.value);
    m(2, 2) = 1.0;
    return GroupElement(m);
}

IsometryClass classify(const GroupElement& g, const Tolerances& tol) {
    double n2 = std::max(1.0, g.m.squaredNorm());
    if (g.unitarity_residual() > tol.unitary * n2)
        throw HornError(ErrorCode::NotUnitary, "matrix does not preserve its form");
    GroupElement s = su_normalize(g);
    IsometryClass c;
    c.discriminant = goldman_discriminant(s.m.trace());
    constexpr double eps_disc = 1e-7;
    if (c.discriminant > eps_disc) {
        c.kind = IsometryClass::Kind::Loxodromic;
        return c;
    }
    try {
        EllipticData d = elliptic_data(g, tol);
        c.angles = d.pair;
        if (d.special && c.discriminant >= -eps_disc) {
            c.kind = IsometryClass::Kind::SpecialElliptic;
            c.mirror = d.mirror;
        } else {
            c.kind = IsometryClass::Kind::RegularElliptic;
        }
    } catch (const HornError&) {
        if (c.discriminant < -eps_disc) throw;
        c.kind = IsometryClass::Kind::Parabolic;
        c.angles.reset();
    }
    return c;
}

AnglePair angle_pair(const GroupElement& g, const Tolerances& tol) { return elliptic_data(g, tol).pair; }

GroupElement standard_lift(const AnglePair& p) {
    double a1 = p.a1.value, a2 = p.a2.value;
    Mat3 m = Mat3::Zero();
    m(0, 0) = std::polar(1.0, (2.0 * a1 - a2) / 3.0);
    m(1, 1) = std::polar(1.0, (2.0 * a2 - a1) / 3.0);
    m(2, 2) = std::polar(1.0, -(a1 + a2) / 3.0);
    return GroupElement(m);
}

ClassTriple psi(const ClassTriple& t) {
    const Angle two_pi = Angle::exact(2);
    auto flip = [&](const AnglePair& p) { return AnglePair(two_pi - p.a2, two_pi - p.a1); };
    return {flip(t.gamma), flip(t.beta), flip(t.alpha)};
}

GroupElement complex_reflection(const Vec3& c, cplx eta, const HermitianForm& h, const Tolerances& tol) {
    cplx cc = hermitian_pairing(c, c, h);
    if (std::abs(cc) <= tol.type * c.squaredNorm())
        throw HornError(ErrorCode::NullPolarVector, "polar vector is null");
    Mat3 m = Mat3::Identity() + ((eta - 1.0) / cc) * c * (c.adjoint() * h.entries);
    return GroupElement(m, h);
}

Layer layer_product(const GroupElement& a, const GroupElement& b, const GroupElement& c, double scalar_tol) {
    Mat3 prod = a.m * b.m * c.m;
    cplx s = prod.trace() / 3.0;
    if ((prod - s * Mat3::Identity()).cwiseAbs().maxCoeff() > scalar_tol * std::max(1.0, std::abs(s)))
        throw HornError(ErrorCode::NotScalarProduct, "a*b*c is not a scalar matrix");
    cplx u = s;
    for (const GroupElement* g : {&a, &b, &c}) {
        EllipticData d = elliptic_data(*g);
        u *= std::polar(1.0, -(d.pair.a1.value + d.pair.a2.value) / 3.0) / d.neg_eigenvalue;
    }
    Layer best = Layer::One;
    double dist = 1e300;
    for (Layer l : {Layer::One, Layer::Omega, Layer::Omega2}) {
        double dl = std::abs(u - layer_value(l));
        if (dl < dist) {
            dist = dl;
            best = l;
        }
    }
    if (dist > 0.1) throw HornError(ErrorCode::NotScalarProduct, "lift product is not a cube root of unity");
    return best;
}

double pair_distance(const AnglePair& p, const AnglePair& q) {
    double x1 = p.a1.value, x2 = p.a2.value, y1 = q.a1.value, y2 = q.a2.value;
    double straight = std::hypot(circ(x1, y1), circ(x2, y2));
    double crossed = std::hypot(circ(x1, y2), circ(x2, y1));
    return std::min(straight, crossed);
}

nlohmann::json to_json(const AnglePair& p) {
    nlohmann::json j = {{"a1", p.a1.value}, {"a2", p.a2.value}};
    if (p.is_exact()) j["exact"] = {p.a1.str(), p.a2.str()};
    return j;
}

nlohmann::json to_json(const IsometryClass& c) {
    nlohmann::json j = {{"kind", to_string(c.kind)}, {"discriminant", c.discriminant}};
    if (c.angles) j["angle_pair"] = to_json(*c.angles);
    if (c.mirror) j["mirror_kind"] = to_string(*c.mirror);
    return j;
}

}  // namespace horn
