#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "dispersion/graph.hpp"
#include "dispersion/rational.hpp"

namespace dispersion {

/// A location in the continuum P(G): either a vertex, or a point strictly
/// inside an edge at `offset` from the edge's stored first endpoint.
///
/// Points are always held in normalized form, so two Points denote the
/// same location iff they compare equal. Build them through `make_point`,
/// which folds offsets 0 and 1 onto the corresponding vertex.
class Point {
 public:
  static Point at_vertex(VertexId v);
  static Point midpoint(EdgeIndex e);
  /// Interior point of `e`; throws unless 0 < offset < 1.
  static Point interior(EdgeIndex e, const Rational& offset);

  bool is_vertex() const { return edge_ == kNoEdge; }
  VertexId vertex() const { return vertex_; }
  EdgeIndex edge() const { return edge_; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  friend Point make_point(const Graph& g, EdgeIndex e, const Rational& offset);

  VertexId vertex_ = 0;
  EdgeIndex edge_ = kNoEdge;
  Rational offset_;
};

/// p(u, v, offset) for the stored orientation (u, v) of edge `e`.
/// Throws InvalidArgument for a bad edge index or an offset outside [0, 1].
Point make_point(const Graph& g, EdgeIndex e, const Rational& offset);

/// The point on `e` at distance `offset` from endpoint `from`.
Point point_from(const Graph& g, EdgeIndex e, VertexId from, const Rational& offset);

void validate_point(const Graph& g, const Point& p);

std::ostream& operator<<(std::ostream& os, const Point& p);

/// A finite point set claimed to be `delta`-dispersed.
struct WitnessSet {
  std::vector<Point> points;
  Rational delta;

  std::size_t size() const { return points.size(); }
};

/// One point per line: "e u v num/den", with (u, v) the stored orientation
/// of edge e. Vertex points use their lowest-indexed incident edge with
/// offset 0/1 or 1/1; the lone vertex of an edgeless graph is "-1 v v 0/1".
void write_witness(std::ostream& out, const Graph& g, const std::vector<Point>& points);
std::vector<Point> read_witness(std::istream& in, const Graph& g);

}  // namespace dispersion
