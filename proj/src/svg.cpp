#include "tropical/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tropical/error.hpp"

namespace tropical {

namespace {

constexpr const char* kPalette[] = {"navy", "darkred", "darkgreen", "purple"};

// Two decimals, rounded half away from zero.
std::string decimal(const Rational& q) {
  Rational scaled = q * 100;
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer mag = (abs(num) * 2 + den) / (den * 2);
  std::string sign = (num < 0 && mag != 0) ? "-" : "";
  Integer whole = mag / 100, frac = mag % 100;
  std::string f = frac.get_str();
  if (f.size() < 2) f = "0" + f;
  return sign + whole.get_str() + "." + f;
}

struct Canvas {
  const Window& w;
  std::string x(const RationalVector& p) const { return decimal(100 * (p[0] - w.x0)); }
  std::string y(const RationalVector& p) const { return decimal(100 * (w.y1 - p[1])); }
};

Polyhedron box(const Window& w) {
  HPolyhedron h;
  h.ambient_dim = 2;
  h.inequalities = {{make_integer_vector({1, 0}), w.x1},
                    {make_integer_vector({-1, 0}), -w.x0},
                    {make_integer_vector({0, 1}), w.y1},
                    {make_integer_vector({0, -1}), -w.y0}};
  return Polyhedron::from_h(h);
}

int half(const RationalVector& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; }

// Counter-clockwise order of the vertices of a convex polygon.
std::vector<RationalVector> around(std::vector<RationalVector> pts) {
  RationalVector c{0, 0};
  for (const auto& p : pts) c = c + p;
  c = Rational(1, static_cast<long>(pts.size())) * c;
  std::sort(pts.begin(), pts.end(), [&](const RationalVector& a, const RationalVector& b) {
    const RationalVector da = a - c, db = b - c;
    if (half(da) != half(db)) return half(da) < half(db);
    return da[0] * db[1] - da[1] * db[0] > 0;
  });
  return pts;
}

RationalVector midpoint(const std::vector<RationalVector>& pts) {
  RationalVector c{0, 0};
  for (const auto& p : pts) c = c + p;
  return Rational(1, static_cast<long>(pts.size())) * c;
}

}  // namespace

Window parse_window(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw std::invalid_argument("window needs four values x0,x1,y0,y1");
  Window w{v[0], v[1], v[2], v[3]};
  if (w.x0 >= w.x1 || w.y0 >= w.y1) throw std::invalid_argument("window is degenerate");
  return w;
}

std::string render_svg(const std::vector<WeightedComplex>& layers, const Window& window) {
  for (const auto& c : layers)
    if (c.ambient_dim() != 2)
      throw TropicalError(ErrorKind::UnsupportedDimension, "only planar complexes can be rendered");
  if (window.x0 >= window.x1 || window.y0 >= window.y1) throw TropicalError(ErrorKind::InvalidArgument, "degenerate window");

  const Canvas cv{window};
  const Polyhedron frame = box(window);
  std::ostringstream out;
  const std::string width = decimal(100 * (window.x1 - window.x0)), height = decimal(100 * (window.y1 - window.y0));
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t li = 0; li < layers.size(); ++li) {
    const WeightedComplex& c = layers[li];
    const char* colour = kPalette[li % 4];
    out << "<g id=\"layer" << li << "\" stroke=\"" << colour << "\" fill=\"" << colour << "\">\n";
    std::vector<std::string> labels;
    const auto& cells = c.cells();
    for (std::size_t id = 0; id < cells.cells().size(); ++id) {
      const Polyhedron& cell = cells.cell(id);
      const bool facet = cell.dim() == c.dim();
      const Polyhedron clipped = intersect(cell, frame);
      if (clipped.is_empty() || clipped.dim() != cell.dim()) continue;
      const auto& vs = clipped.vertices();
      const Integer m = facet ? c.multiplicity(id) : Integer(1);
      const std::string stroke = std::to_string(m > 1 ? 2 * m.get_si() : 2);
      if (cell.dim() == 0) {
        out << "<circle cx=\"" << cv.x(vs[0]) << "\" cy=\"" << cv.y(vs[0]) << "\" r=\"4\" stroke=\"none\"/>\n";
      } else if (cell.dim() == 1) {
        out << "<line x1=\"" << cv.x(vs[0]) << "\" y1=\"" << cv.y(vs[0]) << "\" x2=\"" << cv.x(vs[1]) << "\" y2=\""
            << cv.y(vs[1]) << "\" stroke-width=\"" << stroke << "\"/>\n";
      } else if (facet) {
        out << "<polygon points=\"";
        const auto ring = around(vs);
        for (std::size_t i = 0; i < ring.size(); ++i) out << (i ? " " : "") << cv.x(ring[i]) << "," << cv.y(ring[i]);
        out << "\" fill-opacity=\"0.25\" stroke-width=\"" << stroke << "\"/>\n";
      }
      if (facet && m > 1) {
        const RationalVector at = midpoint(vs);
        labels.push_back("<text x=\"" + cv.x(at) + "\" y=\"" + cv.y(at) + "\" font-size=\"14\" stroke=\"none\">" + m.get_str() +
                         "</text>\n");
      }
    }
    for (const auto& l : labels) out << l;
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropical
