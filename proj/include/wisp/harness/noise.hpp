#pragma once

#include "wisp/core/field.hpp"
#include "wisp/core/region.hpp"

#include <cstdint>
#include <random>

namespace wisp {

struct NoiseSpec {
    double delta0 = 0.0;      ///< relative level in [0, 1)
    std::uint64_t seed = 1;
};

/// Recorded in every summary so runs can be reproduced elsewhere.
inline constexpr const char* noise_generator_name = "std::mt19937_64, r = 2 * ((x >> 11) * 2^-53) - 1";

/// Uniform draw on [-1, 1) from the top 53 bits of one 64-bit output.
inline double uniform_symmetric(std::mt19937_64& gen)
{
    return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
}

struct NoisyData {
    SpaceTimeField u_obs;
    double delta = 0.0;   ///< delta0 * max |u| over all nodes and levels
};

/// u_obs = u + delta * rand(-1, 1) independently at every observed node and
/// every level t > 0; u_obs = u at t = 0 on omega and 0 off omega.
/// Throws ConfigError unless 0 <= delta0 < 1.
NoisyData add_noise(const SpaceTimeField& u, const ObservationRegion& region, const NoiseSpec& spec);

} // namespace wisp
