#include "keyrate/region_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "keyrate/errors.hpp"

namespace keyrate {

namespace {

double cross(Point2 o, Point2 a, Point2 b) noexcept {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(Point2 a, Point2 b) noexcept { return a.x != b.x ? a.x < b.x : a.y < b.y; }

}  // namespace

bool dominates(Point2 p, Point2 q, double tol) noexcept {
  const bool weakly = p.x >= q.x - tol && p.y >= q.y - tol;
  const bool strictly = p.x > q.x + tol || p.y > q.y + tol;
  return weakly && strictly;
}

std::vector<Point2> deduplicate(std::span<const Point2> pts, double tol) {
  std::vector<Point2> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  std::vector<Point2> out;
  out.reserve(sorted.size());
  for (const auto& p : sorted) {
    if (!out.empty() && std::abs(p.x - out.back().x) <= tol &&
        std::abs(p.y - out.back().y) <= tol) {
      continue;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<Point2> pareto_frontier(std::span<const Point2> pts, double tol) {
  std::vector<Point2> unique = deduplicate(pts, tol);

  // Sweep from the largest x down, keeping points that beat every y seen so
  // far. Survivors are then checked pairwise, which settles the near-ties
  // the sweep cannot see.
  std::vector<Point2> candidates;
  double best_y = -std::numeric_limits<double>::infinity();
  for (auto it = unique.rbegin(); it != unique.rend(); ++it) {
    if (it->y > best_y + tol || candidates.empty()) {
      candidates.push_back(*it);
    }
    best_y = std::max(best_y, it->y);
  }
  std::vector<Point2> frontier;
  for (const auto& q : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Point2& p) { return dominates(p, q, tol); });
    if (!dominated) frontier.push_back(q);
  }
  std::sort(frontier.begin(), frontier.end(), lex_less);
  return frontier;
}

std::vector<Point2> convex_hull(std::span<const Point2> pts) {
  std::vector<Point2> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3) return sorted;

  std::vector<Point2> hull(2 * sorted.size());
  std::size_t k = 0;
  for (const auto& p : sorted) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], sorted[i]) <= 0.0) --k;
    hull[k++] = sorted[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

std::vector<Point2> achievable_hull(std::span<const Point2> pts) {
  double max_x = 0.0;
  double max_y = 0.0;
  for (const auto& p : pts) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  std::vector<Point2> augmented(pts.begin(), pts.end());
  augmented.push_back({0.0, 0.0});
  augmented.push_back({max_x, 0.0});
  augmented.push_back({0.0, max_y});
  return convex_hull(augmented);
}

bool point_in_hull(std::span<const Point2> hull, Point2 q, double slack) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::hypot(q.x - hull[0].x, q.y - hull[0].y) <= slack;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2 a = hull[i];
    const Point2 b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    // Signed distance of q to the left of edge a->b.
    if (cross(a, b, q) / len < -slack) return false;
  }
  return true;
}

double radial_extent(std::span<const Point2> hull, double theta) {
  const double dx = std::cos(theta);
  const double dy = std::sin(theta);
  double best = 0.0;
  // Intersect the ray t*(dx,dy), t >= 0, with every edge and keep the
  // farthest hit; for a convex polygon containing the origin that is the
  // exit point.
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2 a = hull[i];
    const Point2 b = hull[(i + 1) % hull.size()];
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double denom = dx * ey - dy * ex;
    if (std::abs(denom) < 1e-300) {
      // Parallel: the edge lies on the ray only if a is collinear with it.
      if (std::abs(a.x * dy - a.y * dx) <= 1e-15) {
        best = std::max({best, a.x * dx + a.y * dy, b.x * dx + b.y * dy});
      }
      continue;
    }
    const double t = (a.x * ey - a.y * ex) / denom;
    const double s = (a.x * dy - a.y * dx) / denom;
    if (t >= 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::max(best, t);
  }
  return best;
}

std::vector<double> quadrant_directions(std::size_t directions) {
  if (directions < 2) throw DomainError("quadrant_directions: need at least 2 directions");
  std::vector<double> out(directions);
  for (std::size_t i = 0; i < directions; ++i) {
    out[i] = (std::numbers::pi / 2.0) * static_cast<double>(i) /
             static_cast<double>(directions - 1);
  }
  return out;
}

bool hull_contains(std::span<const Point2> outer, std::span<const Point2> inner,
                   std::span<const double> directions, double slack) {
  return std::all_of(directions.begin(), directions.end(), [&](double theta) {
    return radial_extent(outer, theta) >= radial_extent(inner, theta) - slack;
  });
}

}  // namespace keyrate
