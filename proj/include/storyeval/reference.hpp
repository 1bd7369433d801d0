#pragma once

#include "storyeval/mask.hpp"
#include "storyeval/surface.hpp"

// Serial brute-force implementations of the overlap and surface metrics.
// These are the reference results the accelerated kernels are tested and
// benchmarked against; they share only the data types with the fast path.

namespace storyeval::reference {

/// Per-cell scan over all source points, O(cells * points).
DistanceField build_distance_field(const ContourPointSet& points);

/// O(|a| * |b|) double loop.
double directed_max_distance(const ContourPointSet& a, const ContourPointSet& b);
double directed_mean_distance(const ContourPointSet& a, const ContourPointSet& b);
SurfaceDistances surface_distances(const ContourPointSet& a, const ContourPointSet& b);

/// Plain scalar counting loop.
OverlapResult overlap(const BinaryMask& a, const BinaryMask& b);

} // namespace storyeval::reference
