#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "horn/polytopes.hpp"

namespace horn {

struct SliceSpec {
    enum class Kind { Symmetric, Fixed };
    Kind kind = Kind::Symmetric;
    AnglePair beta;
    AnglePair gamma;
    int resolution = 600;
    double tol = 1e-7;

    static SliceSpec symmetric(int resolution = 600) {
        SliceSpec s;
        s.resolution = resolution;
        return s;
    }
    static SliceSpec fixed(const AnglePair& beta, const AnglePair& gamma, int resolution = 600) {
        SliceSpec s;
        s.kind = Kind::Fixed;
        s.beta = beta;
        s.gamma = gamma;
        s.resolution = resolution;
        return s;
    }

    // The class triple at slice coordinates (x, y) = (alpha1, alpha2).
    ClassTriple triple_at(double x, double y) const;
    // Coefficients (p, q, r) with form(triple_at(x, y)) = p x + q y + r.
    std::array<double, 3> restrict_form(const LinearForm& f) const;
    std::string label() const;
};

struct WallSegment {
    std::size_t wall;
    std::array<double, 2> p0, p1;  // slice coordinates, radians
    bool is_point() const { return p0 == p1; }
};

// Every catalog wall that meets the slice domain, clipped to its truncations.
std::vector<WallSegment> slice_walls(const SliceSpec& spec);

inline constexpr std::size_t kMinComponentPixels = 16;

struct SliceRaster {
    int resolution = 0;
    // Per pixel (row-major, row 0 at alpha2 = 0): bit 0 = in the closed domain a1 >= a2, bits 1..3 =
    // closure of P4, P6, P8 (main or spike), bits 4..6 = within the wall band of
    // layer omega, 1, omega^2.
    std::vector<std::uint8_t> bits;
    std::vector<WallSegment> walls;

    // 4-connected components of domain pixels off the given layer's wall band.
    // Components smaller than min_pixels (pixels stranded where two bands meet
    // at an acute angle) are not counted.
    int components(Layer layer, std::size_t min_pixels = kMinComponentPixels) const;
    std::size_t count(int bit) const;
    std::size_t count_overlap(int bit_a, int bit_b) const;
};

inline constexpr int kDomainBit = 0;
inline constexpr int kP4Bit = 1;
inline constexpr int kP6Bit = 2;
inline constexpr int kP8Bit = 3;
int band_bit(Layer layer);

SliceRaster rasterize_slice(const SliceSpec& spec, double band_px = 1.5);
std::string svg_of(const SliceSpec& spec, const SliceRaster& raster);
std::string render_slice(const SliceSpec& spec);

}  // namespace horn
