#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "kepoly/casedb.hpp"
#include "kepoly/polytope.hpp"

namespace kepoly {

// Deterministic counter-based generator (SplitMix64 applied to
// seed + (counter + 1) * 0x9E3779B97F4A7C15), identical on every platform:
//   z  = seed + (counter + 1) * 0x9E3779B97F4A7C15
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27;  z *= 0x94D049BB133111EB
//   z ^= z >> 31
// uniform01 maps the top 53 bits into [0, 1).
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter);
double uniform01(std::uint64_t seed, std::uint64_t counter);

struct McEstimate {
    double value = 0.0;
    double stderr_value = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

// Monte-Carlo integral of f over the polygon by rejection sampling on the
// axis-aligned bounding box.  Sample i draws uniform01 at counters 2i and
// 2i + 1, so the stream is reproducible and mergeable.  Requires
// samples >= 1000.
McEstimate mc_integrate(const Polygon& poly, const std::function<double(double, double)>& f,
                        std::int64_t samples, std::uint64_t seed);

// f-weighted mean point (ratio estimator); standard errors come from the
// influence-function residuals of the ratio.
std::pair<McEstimate, McEstimate>
mc_mean_point(const Polygon& poly, const std::function<double(double, double)>& f,
              std::int64_t samples, std::uint64_t seed);

// Case-level wrappers: density evaluated in float64 directly from the
// realization roots and multiplicity, independent of the exact
// integration pipeline.
McEstimate mc_volume(const CaseRecord& rec, std::int64_t samples, std::uint64_t seed);
std::pair<McEstimate, McEstimate> mc_barycenter(const CaseRecord& rec, std::int64_t samples,
                                                std::uint64_t seed);

} // namespace kepoly
