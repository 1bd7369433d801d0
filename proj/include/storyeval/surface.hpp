#pragma once

#include <vector>

#include "storyeval/mask.hpp"

namespace storyeval {

/// The three contour distance metrics, in pixel units.
struct SurfaceDistances {
    double hausdorff = 0.0;
    double modified_hausdorff = 0.0;
    double average_surface_distance = 0.0;
};

/// Exact Euclidean distance from every grid cell to the nearest point of a
/// source contour. Values at source points are 0.
struct DistanceField {
    int width = 0;
    int height = 0;
    std::vector<double> values; // row-major

    double at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
};

/// Exact Euclidean distance transform (two-pass lower-envelope algorithm,
/// integer arithmetic throughout, OpenMP across columns/rows). The grid is
/// the point set's source dimensions. Throws EmptyContour.
DistanceField build_distance_field(const ContourPointSet& points);

/// max over p in a of the distance from p to the nearest point of b.
/// Throws EmptyContour naming the empty side.
double directed_max_distance(const ContourPointSet& a, const ContourPointSet& b);

/// mean over p in a of the distance from p to the nearest point of b,
/// summed in point order. Throws EmptyContour naming the empty side.
double directed_mean_distance(const ContourPointSet& a, const ContourPointSet& b);

/// Symmetric Hausdorff, Modified Hausdorff (Dubuisson-Jain) and Average
/// Surface Distance over two contours, computed through distance fields.
SurfaceDistances surface_distances(const ContourPointSet& a, const ContourPointSet& b);

} // namespace storyeval
