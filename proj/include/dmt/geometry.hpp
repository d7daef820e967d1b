#pragma once

// Exact minimization of continuous piecewise-affine functions over small
// convex polytopes.
//
// A continuous piecewise-affine function is affine on every cell of the
// arrangement cut out by its breakpoint hyperplanes. Restricted to a compact
// polytope, each cell is itself a polytope, so the minimum is attained at a
// point where `Dim` linearly independent hyperplanes (faces or breakpoints)
// meet. Enumerating those intersection points and keeping the feasible ones
// gives the exact minimizer candidates.

#include <Eigen/Core>
#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace dmt {

template <typename Scalar, int Dim>
using Point = Eigen::Matrix<Scalar, Dim, 1>;

/// {x : normal . x = offset}; as a polytope face it means normal . x <= offset.
template <typename Scalar, int Dim>
struct Hyperplane {
  Point<Scalar, Dim> normal;
  Scalar offset;
};

/// f(x) = coef . x + constant.
template <typename Scalar, int Dim>
struct Affine {
  Point<Scalar, Dim> coef = Point<Scalar, Dim>::Zero();
  Scalar constant = Scalar(0);

  Scalar operator()(const Point<Scalar, Dim>& x) const { return coef.dot(x) + constant; }

  /// Hyperplane where this function equals `other`. Returns false when the
  /// two functions differ by a constant (no crossing).
  bool crossing(const Affine& other, Hyperplane<Scalar, Dim>& out) const {
    Point<Scalar, Dim> n = coef - other.coef;
    if (n.cwiseAbs().maxCoeff() <= Scalar(1e-15)) return false;
    out = {n, other.constant - constant};
    return true;
  }
};

/// Convex polytope given as an intersection of half-spaces.
template <typename Scalar, int Dim>
class Polytope {
 public:
  using Vec = Point<Scalar, Dim>;

  Polytope& add_face(const Vec& normal, Scalar offset) {
    faces_.push_back({normal, offset});
    return *this;
  }

  /// Adds lower <= x[axis] <= upper.
  Polytope& bound(int axis, Scalar lower, Scalar upper) {
    add_face(-Vec::Unit(axis), -lower);
    add_face(Vec::Unit(axis), upper);
    return *this;
  }

  bool contains(const Vec& x, Scalar tol) const {
    return std::all_of(faces_.begin(), faces_.end(), [&](const auto& f) {
      return f.normal.dot(x) <= f.offset + tol;
    });
  }

  const std::vector<Hyperplane<Scalar, Dim>>& faces() const { return faces_; }

 private:
  std::vector<Hyperplane<Scalar, Dim>> faces_;
};

/// Product of two 2-D polytopes, as a 4-D polytope over (x0, x1, y0, y1).
template <typename Scalar>
Polytope<Scalar, 4> product(const Polytope<Scalar, 2>& a, const Polytope<Scalar, 2>& b) {
  Polytope<Scalar, 4> out;
  for (const auto& f : a.faces()) {
    Point<Scalar, 4> n = Point<Scalar, 4>::Zero();
    n.template head<2>() = f.normal;
    out.add_face(n, f.offset);
  }
  for (const auto& f : b.faces()) {
    Point<Scalar, 4> n = Point<Scalar, 4>::Zero();
    n.template tail<2>() = f.normal;
    out.add_face(n, f.offset);
  }
  return out;
}

namespace detail {

template <typename Scalar, int Dim>
bool intersect(const std::array<const Hyperplane<Scalar, Dim>*, Dim>& planes,
               Point<Scalar, Dim>& x) {
  if constexpr (Dim == 2) {
    const auto& p = *planes[0];
    const auto& q = *planes[1];
    const Scalar det = p.normal(0) * q.normal(1) - p.normal(1) * q.normal(0);
    if (std::abs(det) <= Scalar(1e-13)) return false;
    x(0) = (p.offset * q.normal(1) - q.offset * p.normal(1)) / det;
    x(1) = (p.normal(0) * q.offset - q.normal(0) * p.offset) / det;
    return true;
  } else {
    Eigen::Matrix<Scalar, Dim, Dim> a;
    Point<Scalar, Dim> b;
    for (int i = 0; i < Dim; ++i) {
      a.row(i) = planes[i]->normal.transpose();
      b(i) = planes[i]->offset;
    }
    if (std::abs(a.determinant()) <= Scalar(1e-12)) return false;
    x = a.partialPivLu().solve(b);
    return true;
  }
}

}  // namespace detail

/// Every feasible point of `region` where Dim independent planes drawn from
/// the region's faces and `cuts` meet. Duplicates are not removed.
template <typename Scalar, int Dim>
std::vector<Point<Scalar, Dim>> arrangement_vertices(
    const Polytope<Scalar, Dim>& region, std::span<const Hyperplane<Scalar, Dim>> cuts,
    Scalar tol = Scalar(1e-11)) {
  std::vector<const Hyperplane<Scalar, Dim>*> planes;
  planes.reserve(region.faces().size() + cuts.size());
  for (const auto& f : region.faces()) planes.push_back(&f);
  for (const auto& c : cuts) planes.push_back(&c);

  std::vector<Point<Scalar, Dim>> out;
  const int n = static_cast<int>(planes.size());
  if (n < Dim) return out;

  std::array<int, Dim> idx;
  for (int i = 0; i < Dim; ++i) idx[i] = i;
  std::array<const Hyperplane<Scalar, Dim>*, Dim> chosen;
  Point<Scalar, Dim> x;
  while (true) {
    for (int i = 0; i < Dim; ++i) chosen[i] = planes[idx[i]];
    if (detail::intersect<Scalar, Dim>(chosen, x) && region.contains(x, tol)) out.push_back(x);

    int k = Dim - 1;
    while (k >= 0 && idx[k] == n - Dim + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < Dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Minimum of `f` over candidate points; +infinity when there are none.
template <typename Scalar, int Dim, typename F>
Scalar minimize_over(std::span<const Point<Scalar, Dim>> candidates, F&& f) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& x : candidates) best = std::min(best, static_cast<Scalar>(f(x)));
  return best;
}

/// Appends the pairwise crossings of `pieces` to `cuts`.
template <typename Scalar, int Dim>
void add_crossings(std::span<const Affine<Scalar, Dim>> pieces,
                   std::vector<Hyperplane<Scalar, Dim>>& cuts) {
  Hyperplane<Scalar, Dim> h;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (pieces[i].crossing(pieces[j], h)) cuts.push_back(h);
}

}  // namespace dmt
