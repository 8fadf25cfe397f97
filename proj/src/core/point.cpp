#include "dispersion/point.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace dispersion {

Point Point::at_vertex(VertexId v) {
  Point p;
  p.vertex_ = v;
  return p;
}

Point Point::midpoint(EdgeIndex e) {
  Point p;
  p.edge_ = e;
  p.offset_ = Rational(1, 2);
  return p;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  // Vertices sort before interior points.
  if (a.is_vertex() != b.is_vertex()) {
    return a.is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_vertex()) return a.vertex_ <=> b.vertex_;
  if (auto c = a.edge_ <=> b.edge_; c != 0) return c;
  return a.offset_ <=> b.offset_;
}

Point Point::interior(EdgeIndex e, const Rational& offset) {
  if (offset <= Rational(0) || offset >= Rational(1)) {
    throw InvalidArgument("interior offset " + offset.to_string() + " not in (0,1)");
  }
  Point p;
  p.edge_ = e;
  p.offset_ = offset;
  return p;
}

Point make_point(const Graph& g, EdgeIndex e, const Rational& offset) {
  if (e >= g.edge_count()) throw InvalidArgument("edge index " + std::to_string(e) + " out of range");
  if (offset < Rational(0) || offset > Rational(1)) {
    throw InvalidArgument("offset " + offset.to_string() + " outside [0,1]");
  }
  const Edge& ed = g.edge(e);
  if (offset == Rational(0)) return Point::at_vertex(ed.u);
  if (offset == Rational(1)) return Point::at_vertex(ed.v);
  return Point::interior(e, offset);
}

Point point_from(const Graph& g, EdgeIndex e, VertexId from, const Rational& offset) {
  const Edge& ed = g.edge(e);
  if (ed.u == from) return make_point(g, e, offset);
  if (ed.v == from) return make_point(g, e, Rational(1) - offset);
  throw InvalidArgument("vertex " + std::to_string(from) + " is not on edge " + std::to_string(e));
}

void validate_point(const Graph& g, const Point& p) {
  if (p.is_vertex()) {
    if (p.vertex() >= g.vertex_count()) throw InvalidArgument("vertex point out of range");
    return;
  }
  if (p.edge() >= g.edge_count()) throw InvalidArgument("invalid edge index " + std::to_string(p.edge()));
  if (p.offset() <= Rational(0) || p.offset() >= Rational(1)) {
    throw InvalidArgument("interior offset not in (0,1)");
  }
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  if (p.is_vertex()) return os << 'v' << p.vertex();
  return os << 'e' << p.edge() << '@' << p.offset();
}

void write_witness(std::ostream& out, const Graph& g, const std::vector<Point>& points) {
  for (const Point& p : points) {
    if (p.is_vertex()) {
      const VertexId v = p.vertex();
      if (g.degree(v) == 0) {
        out << "-1 " << v << ' ' << v << " 0/1\n";
        continue;
      }
      const EdgeIndex e = g.incident(v).front().edge;
      const Edge& ed = g.edge(e);
      out << e << ' ' << ed.u << ' ' << ed.v << ' ' << (ed.u == v ? "0/1" : "1/1") << '\n';
      continue;
    }
    const Edge& ed = g.edge(p.edge());
    out << p.edge() << ' ' << ed.u << ' ' << ed.v << ' ' << p.offset().num() << '/'
        << p.offset().den() << '\n';
  }
}

std::vector<Point> read_witness(std::istream& in, const Graph& g) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    long long e = 0;
    long long u = 0;
    long long v = 0;
    std::string off_text;
    std::string extra;
    auto bad = [&](const std::string& why) {
      return InvalidArgument("witness line " + std::to_string(line_no) + ": " + why);
    };
    if (!(ss >> e >> u >> v >> off_text) || (ss >> extra)) throw bad("expected 'e u v num/den'");
    auto offset = Rational::parse(off_text);
    if (!offset) throw bad("bad offset '" + off_text + "'");
    if (e == -1) {
      if (g.edge_count() != 0 || u != v || u < 0 || static_cast<std::size_t>(u) >= g.vertex_count() ||
          *offset != Rational(0)) {
        throw bad("edge -1 is only valid for the vertex of an edgeless graph");
      }
      points.push_back(Point::at_vertex(static_cast<VertexId>(u)));
      continue;
    }
    if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) throw bad("edge index out of range");
    const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
    if (*offset < Rational(0) || *offset > Rational(1)) throw bad("offset outside [0,1]");
    if (ed.u == u && ed.v == v) {
      points.push_back(make_point(g, static_cast<EdgeIndex>(e), *offset));
    } else if (ed.u == v && ed.v == u) {
      points.push_back(make_point(g, static_cast<EdgeIndex>(e), Rational(1) - *offset));
    } else {
      throw bad("endpoints do not match edge " + std::to_string(e));
    }
  }
  return points;
}

}  // namespace dispersion
