#pragma once

#include <cstdint>

#include "gaplab/model.hpp"

namespace gaplab {

// Gaussian-filtered uniform noise on a 1D grid, deterministic per seed.
// amplitude = 0 yields a flat profile; |height| <= 3 * amplitude always.
TerrainProfile generate_terrain(std::uint64_t seed, double amplitude,
                                double smoothing_sigma, double extent,
                                double grid_spacing = 0.05);

}  // namespace gaplab
