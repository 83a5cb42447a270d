#include "horn/slice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace horn {

ClassTriple SliceSpec::triple_at(double x, double y) const {
    if (kind == Kind::Symmetric) return {AnglePair(x, y), AnglePair(x, y), AnglePair(x, y)};
    return {AnglePair(x, y), beta, gamma};
}

std::array<double, 3> SliceSpec::restrict_form(const LinearForm& f) const {
    const auto& c = f.c;
    if (kind == Kind::Symmetric) return {double(c[0] + c[2] + c[4]), double(c[1] + c[3] + c[5]), 0.0};
    double r = c[2] * beta.a1.value + c[3] * beta.a2.value + c[4] * gamma.a1.value + c[5] * gamma.a2.value;
    return {double(c[0]), double(c[1]), r};
}

std::string SliceSpec::label() const {
    if (kind == Kind::Symmetric) return "Sym";
    return "Slice((" + beta.str() + "),(" + gamma.str() + "))";
}

std::vector<WallSegment> slice_walls(const SliceSpec& spec) {
    struct HalfPlane {
        double gx, gy, h;
    };
    std::vector<WallSegment> out;
    const auto& walls = wall_catalog();
    for (std::size_t w = 0; w < walls.size(); ++w) {
        auto [p, q, r] = spec.restrict_form(walls[w].form());
        const double level = walls[w].level * kPi - r;
        const double n2 = p * p + q * q;
        if (n2 < 1e-24) continue;  // constant on the slice: empty or the whole slice

        std::vector<HalfPlane> hp = {{1, 0, kTwoPi}, {0, -1, 0}, {-1, 1, 0}};
        for (const auto& tr : walls[w].truncations) {
            auto [ps, qs, rs] = spec.restrict_form(LinearForm::sigma(tr.sigma_idx));
            double bound = tr.level * kPi - rs;
            if (tr.le) hp.push_back({ps, qs, bound});
            else hp.push_back({-ps, -qs, -bound});
        }

        const double nrm = std::sqrt(n2);
        const double x0 = p * level / n2, y0 = q * level / n2;
        const double dx = -q / nrm, dy = p / nrm;
        double tmin = -1e9, tmax = 1e9;
        bool empty = false;
        for (const auto& h : hp) {
            double gd = h.gx * dx + h.gy * dy;
            double g0 = h.gx * x0 + h.gy * y0;
            if (std::abs(gd) < 1e-14) {
                if (g0 > h.h + 1e-12) empty = true;
                continue;
            }
            double t = (h.h - g0) / gd;
            if (gd > 0) tmax = std::min(tmax, t);
            else tmin = std::max(tmin, t);
        }
        if (empty || tmin > tmax + 1e-12) continue;
        if (tmax < tmin) tmax = tmin;
        WallSegment s{w, {x0 + tmin * dx, y0 + tmin * dy}, {x0 + tmax * dx, y0 + tmax * dy}};
        if (std::hypot(s.p1[0] - s.p0[0], s.p1[1] - s.p0[1]) < 1e-12) s.p1 = s.p0;
        out.push_back(s);
    }
    return out;
}

int band_bit(Layer layer) {
    switch (layer) {
        case Layer::Omega: return 4;
        case Layer::One: return 5;
        case Layer::Omega2: return 6;
    }
    return 4;
}

SliceRaster rasterize_slice(const SliceSpec& spec, double band_px) {
    const int n = spec.resolution;
    const double h = kTwoPi / n;
    SliceRaster r;
    r.resolution = n;
    r.bits.assign(static_cast<std::size_t>(n) * n, 0);
    r.walls = slice_walls(spec);

    auto S = spec.restrict_form(LinearForm::S());
    std::array<std::array<double, 3>, 8> sig, hh;
    for (int i = 0; i < 8; ++i) {
        sig[i] = spec.restrict_form(LinearForm::sigma(i));
        hh[i] = spec.restrict_form(LinearForm::H(i));
    }
    auto ev = [](const std::array<double, 3>& f, double x, double y) { return Angle(f[0] * x + f[1] * y + f[2]); };

    LinearFormValues v;
    for (int iy = 0; iy < n; ++iy) {
        const double y = (iy + 0.5) * h;
        for (int ix = 0; ix < n; ++ix) {
            const double x = (ix + 0.5) * h;
            if (ix < iy) continue;  // closed domain a1 >= a2; the diagonal row keeps the staircase 4-connected
            std::uint8_t b = 1u << kDomainBit;
            v.S = ev(S, x, y);
            for (int i = 0; i < 8; ++i) {
                v.sigma[i] = ev(sig[i], x, y);
                v.H[i] = ev(hh[i], x, y);
            }
            if (in_polytope_closure(PolytopeId::P4_main, v, spec.tol) ||
                in_polytope_closure(PolytopeId::P4_spike, v, spec.tol))
                b |= 1u << kP4Bit;
            if (in_polytope_closure(PolytopeId::P6, v, spec.tol)) b |= 1u << kP6Bit;
            if (in_polytope_closure(PolytopeId::P8_main, v, spec.tol) ||
                in_polytope_closure(PolytopeId::P8_spike, v, spec.tol))
                b |= 1u << kP8Bit;
            r.bits[static_cast<std::size_t>(iy) * n + ix] = b;
        }
    }

    const auto& walls = wall_catalog();
    for (const auto& s : r.walls) {
        const int bit = band_bit(walls[s.wall].layer);
        const double ax = s.p0[0] / h, ay = s.p0[1] / h, bx = s.p1[0] / h, by = s.p1[1] / h;
        const double ex = bx - ax, ey = by - ay, len2 = ex * ex + ey * ey;
        const int x_lo = std::max(0, int(std::floor(std::min(ax, bx) - band_px - 1)));
        const int x_hi = std::min(n - 1, int(std::ceil(std::max(ax, bx) + band_px + 1)));
        const int y_lo = std::max(0, int(std::floor(std::min(ay, by) - band_px - 1)));
        const int y_hi = std::min(n - 1, int(std::ceil(std::max(ay, by) + band_px + 1)));
        for (int iy = y_lo; iy <= y_hi; ++iy) {
            for (int ix = x_lo; ix <= x_hi; ++ix) {
                const double px = ix + 0.5 - ax, py = iy + 0.5 - ay;
                double t = len2 > 0 ? std::clamp((px * ex + py * ey) / len2, 0.0, 1.0) : 0.0;
                if (std::hypot(px - t * ex, py - t * ey) <= band_px)
                    r.bits[static_cast<std::size_t>(iy) * n + ix] |= 1u << bit;
            }
        }
    }
    return r;
}

int SliceRaster::components(Layer layer, std::size_t min_pixels) const {
    const int n = resolution;
    const std::uint8_t block = 1u << band_bit(layer);
    std::vector<char> seen(bits.size(), 0);
    std::vector<int> stack;
    int count = 0;
    for (std::size_t start = 0; start < bits.size(); ++start) {
        if (seen[start] || !(bits[start] & 1u) || (bits[start] & block)) continue;
        std::size_t size = 0;
        seen[start] = 1;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++size;
            int cx = cur % n, cy = cur / n;
            const int nb[4][2] = {{cx - 1, cy}, {cx + 1, cy}, {cx, cy - 1}, {cx, cy + 1}};
            for (const auto& q : nb) {
                if (q[0] < 0 || q[0] >= n || q[1] < 0 || q[1] >= n) continue;
                std::size_t k = static_cast<std::size_t>(q[1]) * n + q[0];
                if (seen[k] || !(bits[k] & 1u) || (bits[k] & block)) continue;
                seen[k] = 1;
                stack.push_back(static_cast<int>(k));
            }
        }
        if (size >= min_pixels) ++count;
    }
    return count;
}

std::size_t SliceRaster::count(int bit) const {
    std::size_t c = 0;
    for (auto b : bits) c += (b >> bit) & 1u;
    return c;
}

std::size_t SliceRaster::count_overlap(int bit_a, int bit_b) const {
    std::size_t c = 0;
    for (auto b : bits) c += ((b >> bit_a) & 1u) && ((b >> bit_b) & 1u);
    return c;
}

namespace {

const char* layer_color(Layer l) {
    switch (l) {
        case Layer::Omega: return "#ff0000";
        case Layer::One: return "#0000ff";
        case Layer::Omega2: return "#00ff00";
    }
    return "#000000";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string svg_of(const SliceSpec& spec, const SliceRaster& raster) {
    const int n = raster.resolution;
    const double h = kTwoPi / n;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << n << "\" height=\"" << n
        << "\" viewBox=\"0 0 " << n << " " << n << "\">\n"
        << "<title>" << spec.label() << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n << "\" fill=\"#ffffff\"/>\n";

    const std::array<std::pair<int, Layer>, 3> fills = {
        std::pair{kP4Bit, Layer::Omega}, std::pair{kP6Bit, Layer::One}, std::pair{kP8Bit, Layer::Omega2}};
    for (auto [bit, layer] : fills) {
        out << "<g fill=\"" << layer_color(layer) << "\" fill-opacity=\"0.3\">\n";
        for (int iy = 0; iy < n; ++iy) {
            int ix = 0;
            while (ix < n) {
                if (!((raster.bits[static_cast<std::size_t>(iy) * n + ix] >> bit) & 1u)) {
                    ++ix;
                    continue;
                }
                int start = ix;
                while (ix < n && ((raster.bits[static_cast<std::size_t>(iy) * n + ix] >> bit) & 1u)) ++ix;
                out << "<rect x=\"" << start << "\" y=\"" << (n - 1 - iy) << "\" width=\"" << (ix - start)
                    << "\" height=\"1\"/>\n";
            }
        }
        out << "</g>\n";
    }

    out << "<polygon points=\"0," << n << " " << n << "," << n << " " << n << ",0\" fill=\"none\" stroke=\"#000000\" "
        << "stroke-width=\"1\"/>\n";

    const auto& walls = wall_catalog();
    for (const auto& s : raster.walls) {
        const Wall& w = walls[s.wall];
        const std::string x1 = fmt(s.p0[0] / h), y1 = fmt(n - s.p0[1] / h);
        const std::string x2 = fmt(s.p1[0] / h), y2 = fmt(n - s.p1[1] / h);
        if (s.is_point()) {
            out << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"3\" fill=\"" << layer_color(w.layer)
                << "\"><title>" << w.name() << "</title></circle>\n";
            continue;
        }
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
            << layer_color(w.layer) << "\" stroke-width=\"" << (w.interior ? "1.5" : "3") << "\"";
        if (w.interior) out << " stroke-dasharray=\"6,4\"";
        out << "><title>" << w.name() << "</title></line>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_slice(const SliceSpec& spec) { return svg_of(spec, rasterize_slice(spec)); }

}  // namespace horn
