#include "horn/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>

#include "horn/error.hpp"

namespace horn {

const char* to_string(Reducibility r) {
    switch (r) {
        case Reducibility::Irreducible: return "Irreducible";
        case Reducibility::Spherical: return "Spherical";
        case Reducibility::Hyperbolic: return "Hyperbolic";
        case Reducibility::Total: return "Total";
    }
    return "?";
}

namespace {

const Mat3& J3() {
    static const Mat3 j = HermitianForm::J().entries;
    return j;
}

Mat3 j_inverse(const Mat3& q) { return J3() * q.adjoint() * J3(); }

Vec3 gaussian_vec(Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        double re = nd(rng);
        double im = nd(rng);
        v(i) = cplx(re, im);
    }
    return v;
}

cplx jdot(const Vec3& v, const Vec3& w) { return hermitian_pairing(v, w, HermitianForm::J()); }

// splitmix64, for deriving independent per-point seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

GroupElement random_u21(Rng& rng) {
    Vec3 neg;
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
        neg = gaussian_vec(rng);
        double q = jdot(neg, neg).real();
        if (q < -1e-6 * neg.squaredNorm()) {
            neg /= std::sqrt(-q);
            ok = true;
        }
    }
    if (!ok) throw HornError(ErrorCode::Degenerate, "no negative vector after 100 draws");

    // Two projection passes: near-null seeds give large entries and one pass leaves
    // cancellation error of order eps * |v|^2 in the pairings.
    Vec3 p1 = gaussian_vec(rng);
    for (int pass = 0; pass < 2; ++pass) p1 += jdot(p1, neg) * neg;
    p1 /= std::sqrt(jdot(p1, p1).real());
    Vec3 p2 = gaussian_vec(rng);
    for (int pass = 0; pass < 2; ++pass) {
        p2 += jdot(p2, neg) * neg;
        p2 -= jdot(p2, p1) * p1;
    }
    p2 /= std::sqrt(jdot(p2, p2).real());

    Mat3 m;
    m.col(0) = p1;
    m.col(1) = p2;
    m.col(2) = neg;
    return GroupElement(m);
}

namespace {

Mat3 random_k(Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat2 g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = cplx(nd(rng), nd(rng));
    Eigen::HouseholderQR<Mat2> qr(g);
    Mat2 q = qr.householderQ();
    for (int i = 0; i < 2; ++i) {
        const cplx d = qr.matrixQR()(i, i);
        q.col(i) *= d / std::abs(d);
    }
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    Mat3 k = Mat3::Zero();
    k.topLeftCorner<2, 2>() = q;
    k(2, 2) = std::polar(1.0, ang(rng));
    return k;
}

}  // namespace

GroupElement random_cartan_u21(Rng& rng, double r_max) {
    Mat3 k1 = random_k(rng);
    std::uniform_real_distribution<double> ur(0.0, r_max);
    const double r = ur(rng);
    Mat3 a = Mat3::Identity();
    a(0, 0) = a(2, 2) = std::cosh(r);
    a(0, 2) = a(2, 0) = std::sinh(r);
    Mat3 k2 = random_k(rng);
    return GroupElement(k1 * a * k2);
}

std::vector<std::optional<AnglePair>> sample_momentum(const AnglePair& c1, const AnglePair& c2, std::size_t n,
                                                      Rng& rng) {
    const Mat3 a = elliptic_rep(c1).m;
    const Mat3 e = elliptic_rep(c2).m;
    std::vector<std::optional<AnglePair>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Mat3 q = random_u21(rng).m;
        Mat3 ab = a * q * e * j_inverse(q);
        GroupElement c(j_inverse(ab));
        try {
            IsometryClass k = classify(c);
            if (k.is_elliptic()) out.emplace_back(*k.angles);
            else out.emplace_back(std::nullopt);
        } catch (const HornError&) {
            out.emplace_back(std::nullopt);
        }
    }
    return out;
}

double min_eigenvector_distance(const GroupElement& a, const GroupElement& b) {
    auto ea = eigensystem_3x3(a.m), eb = eigensystem_3x3(b.m);
    double best = 1e300;
    for (const auto& x : ea)
        for (const auto& y : eb) {
            double c = std::abs(x.vector.normalized().dot(y.vector.normalized()));
            best = std::min(best, std::sqrt(std::max(0.0, 1.0 - c * c)));
        }
    return best;
}

Reducibility classify_reducibility(const GroupElement& a, const GroupElement& b) {
    std::vector<Vec3> common;
    auto collect = [&](const GroupElement& x, const GroupElement& y) {
        std::vector<EigenPair> ex;
        try {
            ex = eigensystem_3x3(x.m);
        } catch (const HornError&) {
            return;
        }
        for (const auto& p : ex) {
            Vec3 v = p.vector.normalized();
            cplx mu = v.dot(y.m * v);
            if ((y.m * v - mu * v).norm() <= 1e-6 * std::max(1.0, y.m.norm())) common.push_back(v);
        }
    };
    collect(a, b);
    collect(b, a);
    if (common.empty()) return Reducibility::Irreducible;

    // Rank of the span of the common eigenvectors.
    Eigen::Matrix<cplx, 3, Eigen::Dynamic> span(3, common.size());
    for (std::size_t i = 0; i < common.size(); ++i) span.col(i) = common[i];
    Eigen::JacobiSVD<Eigen::Matrix<cplx, 3, Eigen::Dynamic>> svd(span);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 1e-6;
    if (rank >= 2) return Reducibility::Total;

    VectorType type = vector_type(common.front(), a.form);
    return type == VectorType::Negative ? Reducibility::Spherical : Reducibility::Hyperbolic;
}

namespace {

WitnessTriple finish(GroupElement a, GroupElement b, GroupElement c, std::string method, const ClassTriple& t) {
    WitnessTriple w;
    w.A = std::move(a);
    w.B = std::move(b);
    w.C = std::move(c);
    Mat3 p = w.A.m * w.B.m * w.C.m;
    w.product_scalar = p.trace() / 3.0;
    w.layer = layer_product(w.A, w.B, w.C);
    w.reducibility = classify_reducibility(w.A, w.B);
    w.method = std::move(method);
    w.class_error = std::max({pair_distance(angle_pair(w.A), t.alpha), pair_distance(angle_pair(w.B), t.beta),
                              pair_distance(angle_pair(w.C), t.gamma)});
    return w;
}

Mat3 embed_u2(const Mat2& m) {
    Mat3 r = Mat3::Identity();
    r.topLeftCorner<2, 2>() = m;
    return r;
}

Mat2 normalize_negative(const Mat2& m) {
    Eigen::ComplexEigenSolver<Mat2> es(m);
    auto quad = [&](int k) {
        const auto& v = es.eigenvectors().col(k);
        return (std::norm(v(0)) - std::norm(v(1))) / v.squaredNorm();
    };
    int neg = quad(0) < quad(1) ? 0 : 1;
    return m / es.eigenvalues()(neg);
}

Mat3 embed_u11(cplx scalar, const Mat2& m) {
    Mat3 r = Mat3::Zero();
    r(0, 0) = scalar;
    r.bottomRightCorner<2, 2>() = m;
    return r;
}

}  // namespace

WitnessTriple spherical_witness(const ClassTriple& t) {
    U2Solution s = u2_construct(t);
    return finish(GroupElement(embed_u2(s.A)), GroupElement(embed_u2(s.B)), GroupElement(embed_u2(s.C)),
                  "spherical", t);
}

WitnessTriple hyperbolic_witness(const ClassTriple& t, std::size_t wall_index) {
    const Wall& w = wall_catalog().at(wall_index);
    if (w.kind != Wall::Kind::Hyperbolic) throw HornError(ErrorCode::NoSolution, "not a hyperbolic wall");
    const int i = (w.ijk >> 2) & 1, j = (w.ijk >> 1) & 1, k = w.ijk & 1;
    auto pick = [](const AnglePair& p, int bit) { return bit ? p.a2 : p.a1; };
    PU11Triple low{pick(t.alpha, 1 - i), pick(t.beta, 1 - j), pick(t.gamma, 1 - k)};
    PU11Solution s = pu11_construct(low);
    Mat3 a = embed_u11(std::polar(1.0, pick(t.alpha, i).value), normalize_negative(s.A));
    Mat3 b = embed_u11(std::polar(1.0, pick(t.beta, j).value), normalize_negative(s.B));
    Mat3 c = embed_u11(std::polar(1.0, pick(t.gamma, k).value), normalize_negative(s.C));
    Mat3 p = a * b * c;
    cplx sc = p.trace() / 3.0;
    if ((p - sc * Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-8)
        throw HornError(ErrorCode::NoSolution, "block product is not scalar on " + w.name());
    return finish(GroupElement(a), GroupElement(b), GroupElement(c), "hyperbolic:" + w.name(), t);
}

DecompWitness decompfamily_witness() {
    const double r1 = std::sqrt(std::sqrt(3.0) - 1.0);
    const double r2 = std::sqrt(std::sqrt(3.0) + 1.0), r3 = r2;
    const double theta = 11.0 * kPi / 6.0, alpha = 2.0 * kPi / 3.0;
    const cplx e1 = std::polar(1.0, theta), e2 = e1, e3 = std::polar(1.0, theta + kPi);
    const cplx u = std::polar(1.0, alpha / 3.0), ui = std::conj(u);

    Mat3 printed;
    printed << -1.0, -r3 * ui, r2 * u, -r3 * u, 1.0, -r1 * ui, r2 * ui, -r1 * u, -1.0;
    HermitianForm h;
    h.entries = printed.transpose();

    auto root = [](cplx e) { return std::pow(e, -1.0 / 3.0); };
    Mat3 m1, m2, m3;
    m1 << e1, r3 * (e1 - 1.0) * u, -r2 * (e1 - 1.0) * ui, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0;
    m2 << 1.0, 0.0, 0.0, -r3 * (e2 - 1.0) * ui, e2, -r1 * (e2 - 1.0) * u, 0.0, 0.0, 1.0;
    m3 << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, -r2 * (e3 - 1.0) * u, r1 * (e3 - 1.0) * ui, e3;

    DecompWitness d;
    d.H = h;
    d.R1 = GroupElement(root(e1) * m1, h);
    d.R2 = GroupElement(root(e2) * m2, h);
    d.R3 = GroupElement(root(e3) * m3, h);
    d.A = GroupElement(d.R1.m * d.R2.m.inverse(), h);
    d.B = GroupElement(d.R2.m * d.R3.m.inverse(), h);
    d.C = GroupElement(d.R3.m * d.R1.m.inverse(), h);
    return d;
}

namespace {

// u(2,1) chart: X = [[0, a, b], [-conj(a), 0, d], [conj(b), conj(d), 0]].
Mat3 cayley(const std::array<double, 6>& x) {
    cplx a(x[0], x[1]), b(x[2], x[3]), d(x[4], x[5]);
    Mat3 X;
    X << 0.0, a, b, -std::conj(a), 0.0, d, std::conj(b), std::conj(d), 0.0;
    Mat3 I = Mat3::Identity();
    return (I - X).inverse() * (I + X);
}

struct ClassProblem {
    Mat3 a, e;
    AnglePair target;

    // Signed circular residual of the class of (A Q E Q^{-1})^{-1} against the target.
    bool residual(const Mat3& q, Eigen::Vector2d& r) const {
        GroupElement c(j_inverse(a * q * e * j_inverse(q)));
        AnglePair p;
        try {
            p = angle_pair(c);
        } catch (const HornError&) {
            return false;
        }
        auto wrap = [](double d) { return std::remainder(d, kTwoPi); };
        Eigen::Vector2d s(wrap(p.a1.value - target.a1.value), wrap(p.a2.value - target.a2.value));
        Eigen::Vector2d x(wrap(p.a1.value - target.a2.value), wrap(p.a2.value - target.a1.value));
        r = s.norm() <= x.norm() ? s : x;
        return true;
    }
};

// Levenberg-Marquardt on the conjugator with a forward-difference Jacobian.
bool polish(const ClassProblem& prob, Mat3& q, double goal, double& err) {
    Eigen::Vector2d r;
    if (!prob.residual(q, r)) return false;
    err = r.norm();
    double mu = 1e-3;
    const double h = 1e-7;
    for (int it = 0; it < 80 && err > goal; ++it) {
        Eigen::Matrix<double, 2, 6> jac;
        for (int k = 0; k < 6; ++k) {
            std::array<double, 6> x{};
            x[k] = h;
            Eigen::Vector2d rk;
            if (!prob.residual(cayley(x) * q, rk)) return false;
            jac.col(k) = (rk - r) / h;
        }
        bool improved = false;
        const Eigen::Matrix2d jjt = jac * jac.transpose();
        // Damping relative to the curvature scale, so rejected steps really shrink
        // when the conjugator is far out and the Jacobian is large.
        const double scale = std::max(jjt.trace() / 2.0, 1e-12);
        for (int tries = 0; tries < 16 && !improved; ++tries) {
            Eigen::Matrix2d m = jjt + mu * scale * Eigen::Matrix2d::Identity();
            Eigen::Matrix<double, 6, 1> step = -jac.transpose() * m.ldlt().solve(r);
            double sn = step.norm();
            if (sn > 0.5) step *= 0.5 / sn;
            std::array<double, 6> x;
            for (int k = 0; k < 6; ++k) x[k] = step(k);
            Mat3 q1 = cayley(x) * q;
            Eigen::Vector2d r1;
            if (prob.residual(q1, r1) && r1.norm() < err) {
                q = q1;
                r = r1;
                err = r1.norm();
                mu = std::max(mu / 3.0, 1e-12);
                improved = true;
            } else {
                mu *= 8.0;
            }
        }
        if (!improved) break;
    }
    return err <= goal;
}

bool matches(const AnglePair& p, double a1, double a2) {
    return pair_distance(p, AnglePair(a1, a2)) <= 1e-9;
}

}  // namespace

WitnessSearch find_witness(const ClassTriple& t, const SamplerConfig& cfg) {
    WitnessSearch out;
    const double tol = t.default_tol();

    // Known irreducible construction.
    const double a = 2.0 * kPi / 3.0, b = kPi / 3.0;
    if (matches(t.alpha, a, b) && matches(t.beta, a, b) && matches(t.gamma, a, b)) {
        DecompWitness d = decompfamily_witness();
        out.found = true;
        out.witness = finish(d.A, d.B, d.C, "explicit irreducible", t);
        return out;
    }

    std::vector<ActiveWall> active = active_walls(t, tol);
    for (const auto& aw : active) {
        if (wall_catalog()[aw.index].kind != Wall::Kind::Spherical) continue;
        try {
            out.witness = spherical_witness(t);
            out.found = true;
            return out;
        } catch (const HornError&) {
        }
    }
    for (const auto& aw : active) {
        if (wall_catalog()[aw.index].kind != Wall::Kind::Hyperbolic) continue;
        try {
            out.witness = hyperbolic_witness(t, aw.index);
            out.found = true;
            return out;
        } catch (const HornError&) {
        }
    }

    // Monte-Carlo over the conjugator of B, polishing the closest candidates.
    Rng rng(cfg.seed);
    ClassProblem prob{elliptic_rep(t.alpha).m, elliptic_rep(t.beta).m, t.gamma};
    struct Candidate {
        double d;
        Mat3 q;
    };
    std::vector<Candidate> pool;  // sorted by distance, unpolished only
    const std::size_t keep = 8;
    out.best_distance = 1e300;
    std::size_t next_check = 1000;

    auto try_pool = [&]() -> bool {
        std::vector<Candidate> batch;
        for (const auto& c : pool)
            if (c.d <= cfg.capture_radius) batch.push_back(c);
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [&](const Candidate& c) { return c.d <= cfg.capture_radius; }),
                   pool.end());
        for (auto& c : batch) {
            Mat3 q = c.q;
            double err = 0.0;
            bool ok = polish(prob, q, cfg.tol / 10.0, err);
            out.best_distance = std::min(out.best_distance, err);
            if (!ok) continue;
            GroupElement A(prob.a);
            GroupElement B(q * prob.e * j_inverse(q));
            GroupElement C((A.m * B.m).inverse());
            try {
                out.witness = finish(A, B, C, "monte-carlo", t);
            } catch (const HornError&) {
                continue;
            }
            out.found = true;
            return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < cfg.budget; ++i) {
        Mat3 q = (i % 2 == 0) ? random_u21(rng).m : random_cartan_u21(rng).m;
        Eigen::Vector2d r;
        ++out.samples;
        if (prob.residual(q, r)) {
            double d = r.norm();
            out.best_distance = std::min(out.best_distance, d);
            if (pool.size() < keep || d < pool.back().d) {
                if (pool.size() == keep) pool.pop_back();
                auto pos = std::lower_bound(pool.begin(), pool.end(), d,
                                            [](const Candidate& c, double v) { return c.d < v; });
                pool.insert(pos, {d, q});
            }
        }
        if (out.samples == next_check || out.samples == cfg.budget) {
            next_check *= 2;
            if (try_pool()) return out;
        }
    }
    return out;
}

double wall_separation(const ClassTriple& t, double margin) {
    const auto x = t.values();
    double best = 1e300;
    for (const auto& w : wall_catalog()) {
        LinearForm f = w.form();
        double n2 = f.norm() * f.norm();
        double off = f.eval(x) - w.level * kPi;
        std::array<double, 6> p;
        for (int i = 0; i < 6; ++i) p[i] = x[i] - off * f.c[i] / n2;
        bool holds = true;
        for (const auto& tr : w.truncations) {
            LinearForm s = LinearForm::sigma(tr.sigma_idx);
            double val = s.eval(p) - tr.level * kPi;
            double slack = margin * s.norm();
            holds = holds && (tr.le ? val <= slack : val >= -slack);
        }
        if (holds) best = std::min(best, std::abs(off) / std::sqrt(n2));
    }
    return best;
}

GridReport verify_grid(const SliceSpec& slice, int grid_n, const SamplerConfig& cfg, double separation,
                       int threads) {
    auto t0 = std::chrono::steady_clock::now();
    GridReport rep;
    rep.seed = cfg.seed;
    rep.budget = cfg.budget;

    std::vector<ClassTriple> triples;
    const double h = kTwoPi / grid_n;
    for (int j = 0; j < grid_n; ++j) {
        for (int i = 0; i < grid_n; ++i) {
            if (i <= j) continue;
            GridPoint g;
            g.a1 = (i + 0.5) * h;
            g.a2 = (j + 0.5) * h;
            ClassTriple t = slice.triple_at(g.a1, g.a2);
            if (!t.is_interior()) {
                g.skipped = true;
                g.skip_reason = "boundary";
            } else if (wall_separation(t, separation) <= separation) {
                g.skipped = true;
                g.skip_reason = "near wall";
            }
            rep.points.push_back(g);
            triples.push_back(t);
        }
    }

    auto run = [&](std::size_t k) {
        GridPoint& g = rep.points[k];
        if (g.skipped) return;
        MembershipReport m = polytope_member(triples[k]);
        g.predicted_member = m.member;
        g.predicted_layers.assign(m.layers.begin(), m.layers.end());
        SamplerConfig c = cfg;
        c.seed = mix(cfg.seed ^ mix(k));
        WitnessSearch s = find_witness(triples[k], c);
        g.found = s.found;
        g.samples = s.samples;
        g.best_distance = s.found ? s.witness.class_error : s.best_distance;
        if (s.found) g.witness_layer = s.witness.layer;
    };

    if (threads <= 1) {
        for (std::size_t k = 0; k < rep.points.size(); ++k) run(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < threads; ++w)
            workers.push_back(std::async(std::launch::async, [&]() {
                for (std::size_t k = next++; k < rep.points.size(); k = next++) run(k);
            }));
        for (auto& f : workers) f.get();
    }

    for (std::size_t k = 0; k < rep.points.size(); ++k) {
        const GridPoint& g = rep.points[k];
        if (g.skipped) continue;
        if (g.predicted_member && !g.found) {
            rep.missing_witnesses.push_back(k);
        } else if (!g.predicted_member && g.found) {
            rep.disagreements.push_back(k);
        } else if (g.found && std::find(g.predicted_layers.begin(), g.predicted_layers.end(), *g.witness_layer) ==
                                  g.predicted_layers.end()) {
            rep.disagreements.push_back(k);
        } else {
            ++rep.agreements;
        }
    }
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json to_json(const WitnessTriple& w) {
    return {{"A", matrix_to_json(w.A.m)},
            {"B", matrix_to_json(w.B.m)},
            {"C", matrix_to_json(w.C.m)},
            {"form", matrix_to_json(w.A.form.entries)},
            {"product_scalar", complex_to_json(w.product_scalar)},
            {"layer", to_string(w.layer)},
            {"reducibility", to_string(w.reducibility)},
            {"method", w.method},
            {"class_error", w.class_error}};
}

nlohmann::json to_json(const WitnessSearch& s) {
    if (s.found) {
        nlohmann::json j = to_json(s.witness);
        j["found"] = true;
        j["samples"] = s.samples;
        return j;
    }
    return {{"found", false}, {"result", "NotFound"}, {"samples", s.samples}, {"best_distance", s.best_distance}};
}

nlohmann::json to_json(const GridReport& r, bool with_runtime) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& g : r.points) {
        nlohmann::json p = {{"a1", g.a1}, {"a2", g.a2}};
        if (g.skipped) {
            p["skipped"] = g.skip_reason;
        } else {
            nlohmann::json layers = nlohmann::json::array();
            for (Layer l : g.predicted_layers) layers.push_back(to_string(l));
            p["predicted_member"] = g.predicted_member;
            p["predicted_layers"] = layers;
            p["found"] = g.found;
            p["samples"] = g.samples;
            p["best_distance"] = g.best_distance;
            if (g.witness_layer) p["witness_layer"] = to_string(*g.witness_layer);
        }
        pts.push_back(p);
    }
    std::size_t found = 0;
    for (const auto& g : r.points) found += g.found;
    nlohmann::json j = {{"grid", pts},
                        {"predictions", r.agreements + r.disagreements.size() + r.missing_witnesses.size()},
                        {"agreements", r.agreements},
                        {"witnesses_found", found},
                        {"disagreements", r.disagreements},
                        {"missing_witnesses", r.missing_witnesses},
                        {"seed", r.seed},
                        {"budget", r.budget}};
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace horn
