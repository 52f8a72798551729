#pragma once

// Pareto frontier and convex-hull helpers for 2-D rate regions in the
// nonnegative quadrant.

#include <cstddef>
#include <span>
#include <vector>

namespace keyrate {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline constexpr double kDominanceTolerance = 1e-12;

// q is dominated by p when p >= q - tol componentwise and p exceeds q by more
// than tol in at least one coordinate.
bool dominates(Point2 p, Point2 q, double tol = kDominanceTolerance) noexcept;

// Sorted by (x, y) with points closer than `tol` in both coordinates merged.
std::vector<Point2> deduplicate(std::span<const Point2> pts, double tol = kDominanceTolerance);

// Pareto-maximal subset of `pts`, deduplicated, sorted by increasing x.
std::vector<Point2> pareto_frontier(std::span<const Point2> pts,
                                    double tol = kDominanceTolerance);

// Convex hull (monotone chain), counterclockwise, starting from the
// lowest-leftmost vertex; collinear points dropped.
std::vector<Point2> convex_hull(std::span<const Point2> pts);

// Hull of `pts` together with (0,0), (max x, 0) and (0, max y): the region
// reachable by time sharing between the points and discarding rate.
std::vector<Point2> achievable_hull(std::span<const Point2> pts);

// True when q lies inside or within `slack` of the convex polygon `hull`
// (counterclockwise vertices).
bool point_in_hull(std::span<const Point2> hull, Point2 q, double slack = 1e-9);

// Distance from the origin to the hull boundary along direction angle
// `theta` (radians). The hull must contain the origin.
double radial_extent(std::span<const Point2> hull, double theta);

// `directions` ray angles evenly spaced over [0, pi/2].
std::vector<double> quadrant_directions(std::size_t directions);

/// Whether `outer` contains `inner`, compared as radial extents along the
/// given ray angles: radial_extent(outer) >= radial_extent(inner) - slack.
bool hull_contains(std::span<const Point2> outer, std::span<const Point2> inner,
                   std::span<const double> directions, double slack = 1e-9);

}  // namespace keyrate
