#pragma once

#include <cmath>
#include <optional>
#include <random>

#include "horn/polytopes.hpp"

namespace horn::testing {

inline ClassTriple random_interior(std::mt19937_64& rng, double margin = 0.01) {
    std::uniform_real_distribution<double> u(margin, kTwoPi - margin);
    for (;;) {
        auto t = ClassTriple::from_values({u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)});
        auto v = t.values();
        if (v[0] - v[1] > margin && v[2] - v[3] > margin && v[4] - v[5] > margin) return t;
    }
}

struct WallSample {
    std::array<double, 6> point;
    std::array<double, 6> normal;  // unit normal of the wall's hyperplane
};

// A point on the given wall with every truncation holding strictly (by more
// than `clearance`), inside T(G)^3 and at least `clearance` away from every
// other wall of the same layer.
inline std::optional<WallSample> sample_on_wall(std::size_t wall_index, std::mt19937_64& rng, double clearance,
                                                int max_tries = 200000) {
    const Wall& w = wall_catalog()[wall_index];
    const LinearForm f = w.form();
    const double n = f.norm();
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::array<double, 6> x{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const double off = (f.eval(x) - static_cast<double>(w.level) * kPi) / (n * n);
        for (int c = 0; c < 6; ++c) x[c] -= off * f.c[c];
        bool ok = true;
        for (int c = 0; c < 6 && ok; ++c) ok = x[c] > clearance && x[c] < kTwoPi - clearance;
        for (int c = 0; c < 6 && ok; c += 2) ok = x[c] - x[c + 1] > clearance;
        if (!ok) continue;
        for (const auto& tr : w.truncations) {
            const LinearForm s = LinearForm::sigma(tr.sigma_idx);
            const double slack = (static_cast<double>(tr.level) * kPi - s.eval(x)) * (tr.le ? 1.0 : -1.0);
            ok = ok && slack > clearance * s.norm();
        }
        if (!ok) continue;
        const auto& cat = wall_catalog();
        for (std::size_t j = 0; j < cat.size() && ok; ++j) {
            if (j == wall_index || cat[j].layer != w.layer) continue;
            const LinearForm g = cat[j].form();
            const double d = std::abs(g.eval(x) - static_cast<double>(cat[j].level) * kPi) / g.norm();
            ok = d > clearance;
        }
        if (!ok) continue;
        WallSample s;
        s.point = x;
        for (int c = 0; c < 6; ++c) s.normal[c] = f.c[c] / n;
        return s;
    }
    return std::nullopt;
}

inline std::array<double, 6> shifted(const WallSample& s, double offset) {
    std::array<double, 6> y = s.point;
    for (int c = 0; c < 6; ++c) y[c] += offset * s.normal[c];
    return y;
}

// Random triple with S on a multiple of 2pi: the last angle is solved for, since a free float
// sextuple meets S = 2k pi with probability zero.
inline ClassTriple on_det_one(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, kTwoPi);
    std::array<double, 6> x{};
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += (x[i] = u(rng));
    x[5] = std::fmod(kTwoPi * 5 - sum, kTwoPi);
    return ClassTriple::from_values(x);
}

}  // namespace horn::testing
