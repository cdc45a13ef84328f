#include "tropconic/render.hpp"

#include <algorithm>
#include <sstream>

namespace tropconic {

namespace {

Rational q_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational q_min(const Rational& a, const Rational& b) { return a < b ? a : b; }

/* Fixed-point decimal with the given digits, rounding half away from zero.
 * Pure integer arithmetic keeps the output platform-independent. */
std::string fixed_decimal(const Rational& q, int digits) {
  mpz_class num = q.get_num(), den = q.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  for (int i = 0; i < digits; ++i) num *= 10;
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quo += 1;
  std::string s = quo.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (neg && quo != 0) s.insert(0, "-");
  return s;
}

long floor_q(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den(), r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!r.fits_slong_p()) throw internal_error("render: coordinate overflow");
  return r.get_si();
}

struct Frame {
  Rational minx, miny, maxx, maxy;  // padded bounds
  Rational scale;                   // pixels per unit
  Rational margin;

  Rational px_w() const { return (maxx - minx) * scale + 2 * margin; }
  Rational px_h() const { return (maxy - miny) * scale + 2 * margin; }
  std::pair<Rational, Rational> map(const AffinePoint& p) const {
    return {(p.x - minx) * scale + margin, (maxy - p.y) * scale + margin};
  }
};

Frame make_frame(const Sketch& sk) {
  Frame f;
  f.minx = f.maxx = sk.vertices.empty() ? Rational(0) : sk.vertices[0].p.x;
  f.miny = f.maxy = sk.vertices.empty() ? Rational(0) : sk.vertices[0].p.y;
  for (const VertexInfo& v : sk.vertices) {
    f.minx = q_min(f.minx, v.p.x);
    f.maxx = q_max(f.maxx, v.p.x);
    f.miny = q_min(f.miny, v.p.y);
    f.maxy = q_max(f.maxy, v.p.y);
  }
  Rational diam = q_max(f.maxx - f.minx, f.maxy - f.miny);
  Rational pad = q_max(Rational(2), diam / 2);
  f.minx -= pad;
  f.maxx += pad;
  f.miny -= pad;
  f.maxy += pad;
  Rational span = q_max(f.maxx - f.minx, f.maxy - f.miny);
  f.scale = 600 / span;
  f.margin = 20;
  return f;
}

/* Largest t with base + t*dir inside the frame bounds. */
Rational clip_ray(const Frame& f, const AffinePoint& base,
                  std::pair<int, int> dir) {
  bool have = false;
  Rational t;
  auto bound = [&](const Rational& lo, const Rational& hi, const Rational& b,
                   int d) {
    if (d == 0) return;
    Rational cand = d > 0 ? Rational((hi - b) / d) : Rational((lo - b) / d);
    if (!have || cand < t) {
      t = cand;
      have = true;
    }
  };
  bound(f.minx, f.maxx, base.x, dir.first);
  bound(f.miny, f.maxy, base.y, dir.second);
  if (!have) throw internal_error("render: ray with zero direction");
  return q_max(t, Rational(0));
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> anchor_labels(const QuadPoly& p, const Sketch& sk) {
  QuadPoly q = permute(p, chart_perm(sk.chart));
  SymMatrix3 a = matrix_of(q);
  SymMatrix3 sp = nonneg_shape(shape(a));
  const Rational tx = (a.a33 - a.a11) / 2, ty = (a.a33 - a.a22) / 2;

  std::vector<std::string> labels(sk.vertices.size());
  for (const auto& [name, proj] : anchor_points(sp)) {
    AffinePoint q0 = chart_project(proj, Chart::Z);
    AffinePoint at{q0.x + tx, q0.y + ty};
    for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
      if (sk.vertices[i].p == at) {
        if (!labels[i].empty()) labels[i] += "=";
        labels[i] += name;
      }
    }
  }
  return labels;
}

std::string render_svg(const Sketch& sk, const std::vector<std::string>& labels) {
  const Frame f = make_frame(sk);
  std::ostringstream out;
  auto dec = [](const Rational& q) { return fixed_decimal(q, 3); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << dec(f.px_w())
      << "\" height=\"" << dec(f.px_h()) << "\" viewBox=\"0 0 " << dec(f.px_w())
      << " " << dec(f.px_h()) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  auto stroke = [&](const AffinePoint& a, const AffinePoint& b, int weight) {
    auto [x1, y1] = f.map(a);
    auto [x2, y2] = f.map(b);
    out << "  <line x1=\"" << dec(x1) << "\" y1=\"" << dec(y1) << "\" x2=\""
        << dec(x2) << "\" y2=\"" << dec(y2) << "\" stroke=\"#1f2937\""
        << " stroke-width=\"" << (weight >= 2 ? 5 : 2)
        << "\" stroke-linecap=\"round\"/>\n";
  };

  for (const SketchEdge& e : sk.edges)
    stroke(sk.vertices[e.u].p, sk.vertices[e.v].p, e.weight);
  for (const SketchRay& r : sk.rays) {
    const AffinePoint& base = sk.vertices[r.v].p;
    Rational t = clip_ray(f, base, r.dir);
    AffinePoint tip{base.x + t * r.dir.first, base.y + t * r.dir.second};
    stroke(base, tip, r.weight);
  }
  for (const VertexInfo& v : sk.vertices) {
    auto [cx, cy] = f.map(v.p);
    out << "  <circle cx=\"" << dec(cx) << "\" cy=\"" << dec(cy)
        << "\" r=\"4\" fill=\"#b91c1c\"/>\n";
  }
  for (std::size_t i = 0; i < sk.vertices.size() && i < labels.size(); ++i) {
    if (labels[i].empty()) continue;
    auto [cx, cy] = f.map(sk.vertices[i].p);
    out << "  <text x=\"" << dec(cx + 7) << "\" y=\"" << dec(cy - 7)
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#111111\">"
        << xml_escape(labels[i]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const Sketch& sk, const std::vector<std::string>& labels) {
  const Frame f = make_frame(sk);
  constexpr int kCols = 61, kRows = 25, kSamples = 512;
  std::vector<std::string> grid(kRows, std::string(kCols, ' '));

  auto rank = [](char c) {
    return c == 'o' ? 3 : c == '#' ? 2 : c == '*' ? 1 : 0;
  };
  auto plot = [&](const AffinePoint& p, char c) {
    Rational fx = (p.x - f.minx) * kCols / (f.maxx - f.minx);
    Rational fy = (f.maxy - p.y) * kRows / (f.maxy - f.miny);
    long col = std::clamp(floor_q(fx), 0L, static_cast<long>(kCols - 1));
    long row = std::clamp(floor_q(fy), 0L, static_cast<long>(kRows - 1));
    char& cell = grid[row][col];
    if (rank(c) > rank(cell)) cell = c;
  };
  auto draw = [&](const AffinePoint& a, const AffinePoint& b, int weight) {
    const char c = weight >= 2 ? '#' : '*';
    for (int k = 0; k <= kSamples; ++k) {
      Rational t(k, kSamples);
      plot(AffinePoint{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, c);
    }
  };

  for (const SketchEdge& e : sk.edges)
    draw(sk.vertices[e.u].p, sk.vertices[e.v].p, e.weight);
  for (const SketchRay& r : sk.rays) {
    const AffinePoint& base = sk.vertices[r.v].p;
    Rational t = clip_ray(f, base, r.dir);
    draw(base, AffinePoint{base.x + t * r.dir.first, base.y + t * r.dir.second},
         r.weight);
  }
  for (const VertexInfo& v : sk.vertices) plot(v.p, 'o');

  std::string out;
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  out += "legend: o vertex, # weight 2, * weight 1\n";
  for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
    out += "o (" + format_rational(sk.vertices[i].p.x) + ", " +
           format_rational(sk.vertices[i].p.y) + ")";
    if (i < labels.size() && !labels[i].empty()) out += " " + labels[i];
    out += '\n';
  }
  return out;
}

}  // namespace tropconic
