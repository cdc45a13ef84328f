#include "tropconic/conic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace tropconic {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/* Primitive integer vector parallel to the rational displacement (dx, dy),
 * same orientation. */
std::pair<long, long> primitive(const Rational& dx, const Rational& dy) {
  if (dx == 0 && dy == 0) throw internal_error("primitive: zero displacement");
  mpz_class l = lcm(dx.get_den(), dy.get_den());
  mpz_class a = dx.get_num() * (l / dx.get_den());
  mpz_class b = dy.get_num() * (l / dy.get_den());
  mpz_class g = gcd(a, b);
  if (g < 0) g = -g;
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p())
    throw internal_error("primitive: direction does not fit a machine word");
  return {a.get_si(), b.get_si()};
}

TropScalar t_shift(const TropScalar& a, const Rational& c) {
  return a.is_bottom() ? TropScalar::bottom() : TropScalar(Rational(a.value() + c));
}

}  // namespace

ProjPoint ProjPoint::canonical() const {
  TropScalar m = t_add(t_add(x, y), z);
  if (m.is_bottom()) throw internal_error("ProjPoint: all coordinates are -inf");
  Rational c = -m.value();
  return ProjPoint{t_shift(x, c), t_shift(y, c), t_shift(z, c)};
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  ProjPoint ca = a.canonical(), cb = b.canonical();
  return ca.x == cb.x && ca.y == cb.y && ca.z == cb.z;
}

ProjPoint chart_embed(const AffinePoint& q, Chart chart) {
  switch (chart) {
    case Chart::Z: return ProjPoint{TropScalar(q.x), TropScalar(q.y), TropScalar(0L)};
    case Chart::Y: return ProjPoint{TropScalar(q.x), TropScalar(0L), TropScalar(q.y)};
    case Chart::X: return ProjPoint{TropScalar(0L), TropScalar(q.x), TropScalar(q.y)};
  }
  throw internal_error("chart_embed: bad chart");
}

AffinePoint chart_project(const ProjPoint& p, Chart chart) {
  const TropScalar* pin = nullptr;
  const TropScalar *u = nullptr, *v = nullptr;
  switch (chart) {
    case Chart::Z: pin = &p.z; u = &p.x; v = &p.y; break;
    case Chart::Y: pin = &p.y; u = &p.x; v = &p.z; break;
    case Chart::X: pin = &p.x; u = &p.y; v = &p.z; break;
  }
  if (pin->is_bottom())
    throw input_error("chart_project: the chart coordinate is -inf");
  if (u->is_bottom() || v->is_bottom())
    throw input_error("chart_project: point lies outside the affine chart");
  return AffinePoint{u->value() - pin->value(), v->value() - pin->value()};
}

const Rational& Invariants::s_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return s21;
  if (i == 2 && j == 3) return s32;
  if (i == 1 && j == 3) return s31;
  throw internal_error("Invariants::s_pair: bad index pair");
}

const Rational& Invariants::d(int j) const {
  switch (j) {
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
  }
  throw internal_error("Invariants::d: bad index");
}

Invariants invariants_of(const SymMatrix3& a) {
  SymMatrix3 sp = nonneg_shape(shape(a));
  Invariants inv;
  inv.s21 = sp.a21.value();
  inv.s32 = sp.a32.value();
  inv.s31 = sp.a31.value();
  inv.d1 = inv.s21 - inv.s32 + inv.s31;
  inv.d2 = inv.s21 + inv.s32 - inv.s31;
  inv.d3 = -inv.s21 + inv.s32 + inv.s31;
  return inv;
}

SymMatrix3 shape_matrix(const Invariants& inv) {
  return SymMatrix3{0, 0, 0, TropScalar(inv.s21), TropScalar(inv.s32),
                    TropScalar(inv.s31)};
}

const char* class_name(ConicClassTag tag) {
  switch (tag) {
    case ConicClassTag::OnePointCentral: return "OnePointCentral";
    case ConicClassTag::TwoPointCentral: return "TwoPointCentral";
    case ConicClassTag::Degenerate1: return "Degenerate1";
    case ConicClassTag::Degenerate2: return "Degenerate2";
    case ConicClassTag::PairOfLinesOneZero: return "PairOfLinesOneZero";
    case ConicClassTag::PairOfLinesTwoZeros: return "PairOfLinesTwoZeros";
    case ConicClassTag::DoubleLine: return "DoubleLine";
  }
  throw internal_error("class_name: bad enum");
}

ConicClass classify(const Invariants& inv) {
  int negative = 0, negatives = 0;
  std::vector<int> zeros, positives;
  for (int j = 1; j <= 3; ++j) {
    const Rational& dj = inv.d(j);
    if (dj < 0) {
      negative = j;
      ++negatives;
    } else if (dj == 0) {
      zeros.push_back(j);
    } else {
      positives.push_back(j);
    }
  }
  if (negatives > 1)
    throw internal_error("classify: more than one negative d");

  if (negatives == 1) {
    int j = negative;
    std::array<int, 2> rest{};
    int n = 0;
    for (int k = 1; k <= 3; ++k)
      if (k != j) rest[n++] = k;
    bool z0 = inv.s_pair(j, rest[0]) == 0;
    bool z1 = inv.s_pair(j, rest[1]) == 0;
    if (!z0 && !z1)
      return ConicClass{ConicClassTag::TwoPointCentral, {rest[0], rest[1], j}};
    if (z0 != z1) {
      // Canonical slot 1 holds the index forming the zero pair with j.
      int zk = z0 ? rest[0] : rest[1];
      int pk = z0 ? rest[1] : rest[0];
      return ConicClass{ConicClassTag::Degenerate1, {zk, pk, j}};
    }
    return ConicClass{ConicClassTag::Degenerate2, {rest[0], rest[1], j}};
  }

  switch (zeros.size()) {
    case 0:
      return ConicClass{ConicClassTag::OnePointCentral, kIdentityPerm};
    case 1:
      return ConicClass{ConicClassTag::PairOfLinesOneZero,
                        {positives[0], positives[1], zeros[0]}};
    case 2:
      return ConicClass{ConicClassTag::PairOfLinesTwoZeros,
                        {positives[0], zeros[0], zeros[1]}};
    default:
      return ConicClass{ConicClassTag::DoubleLine, kIdentityPerm};
  }
}

std::vector<std::pair<std::string, ProjPoint>> anchor_points(const SymMatrix3& splus) {
  if (splus.a11 != 0 || splus.a22 != 0 || splus.a33 != 0)
    throw internal_error("anchor_points: diagonal is not zero");
  if (splus.a21.is_bottom() || splus.a32.is_bottom() || splus.a31.is_bottom())
    throw internal_error("anchor_points: matrix is not clamped");
  const Rational s21 = splus.a21.value(), s32 = splus.a32.value(),
                 s31 = splus.a31.value();
  if (s21 < 0 || s32 < 0 || s31 < 0)
    throw internal_error("anchor_points: matrix is not clamped");

  auto pt = [](Rational a, Rational b, Rational c) {
    return ProjPoint{TropScalar(std::move(a)), TropScalar(std::move(b)),
                     TropScalar(std::move(c))};
  };
  ProjPoint v0 = pt(s32, s31, s21);
  ProjPoint v1 = pt(0, -s21, -s31);
  ProjPoint v2 = pt(-s21, 0, -s32);
  ProjPoint v3 = pt(-s31, -s32, 0);

  // w(i,j) = v_i with -2 s_ij added to coordinate i, for i = j +- 1 mod 3.
  auto bump = [](ProjPoint p, int coord, const Rational& s) {
    Rational delta = -2 * s;
    TropScalar* c = coord == 1 ? &p.x : coord == 2 ? &p.y : &p.z;
    *c = TropScalar(Rational(c->value() + delta));
    return p;
  };

  return {
      {"v0", v0},
      {"v1", v1},
      {"v2", v2},
      {"v3", v3},
      {"w12", bump(v1, 1, s21)},
      {"w13", bump(v1, 1, s31)},
      {"w21", bump(v2, 2, s21)},
      {"w23", bump(v2, 2, s32)},
      {"w31", bump(v3, 3, s31)},
      {"w32", bump(v3, 3, s32)},
  };
}

IndexPerm chart_perm(Chart chart) {
  switch (chart) {
    case Chart::Z: return kIdentityPerm;
    case Chart::Y: return {1, 3, 2};
    case Chart::X: return {2, 3, 1};
  }
  throw internal_error("chart_perm: bad chart");
}

std::vector<VertexInfo> vertices(const QuadPoly& p, Chart chart) {
  if (chart == Chart::Z) return vertices(p);
  // Positions transfer through the chart permutation unchanged, but the
  // maximizer sets name monomials of the permuted polynomial, so they are
  // recomputed against the original one.
  std::vector<VertexInfo> out = vertices(permute(p, chart_perm(chart)));
  for (VertexInfo& v : out) v.maximizers = eval(p, v.p, chart).maximizers;
  return out;
}

std::vector<VertexInfo> vertices(const QuadPoly& p) {
  const SymMatrix3 a = matrix_of(p);
  const SymMatrix3 sp = nonneg_shape(shape(a));
  const QuadPoly spoly = poly_of(sp);
  const Rational tx = (a.a33 - a.a11) / 2, ty = (a.a33 - a.a22) / 2;

  std::vector<AffinePoint> kept;
  for (const auto& [name, proj] : anchor_points(sp)) {
    AffinePoint q = chart_project(proj, Chart::Z);
    if (eval(spoly, q, Chart::Z).maximizers.size() < 3) continue;
    if (std::find(kept.begin(), kept.end(), q) == kept.end()) kept.push_back(q);
  }

  std::vector<VertexInfo> out;
  for (const AffinePoint& q : kept) {
    AffinePoint t{q.x + tx, q.y + ty};
    out.push_back(VertexInfo{t, eval(p, t, Chart::Z).maximizers});
  }
  std::sort(out.begin(), out.end(),
            [](const VertexInfo& l, const VertexInfo& r) { return l.p < r.p; });
  return out;
}

namespace {

struct ActiveMonomial {
  Monomial m;
  Rational c;
  long e1, e2;
};

struct CellGeometry {
  bool lo_unbounded, hi_unbounded;
  Rational lo, hi;
  AffinePoint q0;
  std::pair<long, long> u;  // primitive line direction

  AffinePoint at(const Rational& t) const {
    return AffinePoint{q0.x + t * u.first, q0.y + t * u.second};
  }
};

int lattice_length(const std::vector<std::pair<long, long>>& exps,
                   std::pair<long, long> dir) {
  // Exponents are collinear; span measured along dir.
  auto key = [&](const std::pair<long, long>& e) {
    return e.first * dir.first + e.second * dir.second;
  };
  auto [mn, mx] = std::minmax_element(
      exps.begin(), exps.end(),
      [&](const auto& l, const auto& r) { return key(l) < key(r); });
  long dx = mx->first - mn->first, dy = mx->second - mn->second;
  long g = std::gcd(std::abs(dx), std::abs(dy));
  if (g == 0) throw internal_error("lattice_length: degenerate exponent span");
  return static_cast<int>(g);
}

}  // namespace

Sketch corner_locus(const QuadPoly& p, Chart chart) {
  std::vector<ActiveMonomial> act;
  for (Monomial m : kMonomials) {
    TropScalar c = p.coefficient(m);
    if (c.is_bottom()) continue;
    auto [e1, e2] = exponent(m, chart);
    act.push_back(ActiveMonomial{m, c.value(), e1, e2});
  }

  // 0-cells: tie points of non-collinear monomial triples that reach the
  // global maximum.
  std::map<AffinePoint, MonomialSet> verts;
  const int n = static_cast<int>(act.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        long m11 = act[i].e1 - act[j].e1, m12 = act[i].e2 - act[j].e2;
        long m21 = act[i].e1 - act[k].e1, m22 = act[i].e2 - act[k].e2;
        long det = m11 * m22 - m12 * m21;
        if (det == 0) continue;
        Rational r1 = act[j].c - act[i].c;
        Rational r2 = act[k].c - act[i].c;
        AffinePoint q{(r1 * m22 - m12 * r2) / det, (m11 * r2 - r1 * m21) / det};
        Evaluation ev = eval(p, q, chart);
        Rational tied = act[i].c + act[i].e1 * q.x + act[i].e2 * q.y;
        if (tied == ev.value) verts[q] = ev.maximizers;
      }

  Sketch sk;
  sk.chart = chart;
  for (const auto& [q, maxset] : verts) sk.vertices.push_back(VertexInfo{q, maxset});
  auto vertex_index = [&](const AffinePoint& q) {
    auto it = verts.find(q);
    if (it == verts.end())
      throw internal_error("corner_locus: cell endpoint is not a vertex");
    return static_cast<int>(std::distance(verts.begin(), it));
  };

  // 1-cells: for each monomial pair, the segment of its tie line where the
  // pair dominates. Distinct pairs sharing a maximizer set share the cell.
  std::map<std::uint8_t, bool> seen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long d1 = act[i].e1 - act[j].e1, d2 = act[i].e2 - act[j].e2;
      Rational rhs = act[j].c - act[i].c;
      CellGeometry geom;
      geom.q0 = d1 != 0 ? AffinePoint{rhs / d1, 0} : AffinePoint{0, rhs / d2};
      long g = std::gcd(std::abs(d1), std::abs(d2));
      geom.u = {-d2 / g, d1 / g};
      geom.lo_unbounded = geom.hi_unbounded = true;

      bool feasible = true;
      for (int l = 0; l < n && feasible; ++l) {
        if (l == i || l == j) continue;
        long f1 = act[i].e1 - act[l].e1, f2 = act[i].e2 - act[l].e2;
        long alpha = f1 * geom.u.first + f2 * geom.u.second;
        Rational beta = f1 * geom.q0.x + f2 * geom.q0.y + act[i].c - act[l].c;
        if (alpha == 0) {
          if (beta < 0) feasible = false;
        } else {
          Rational bound = -beta / alpha;
          if (alpha > 0) {
            if (geom.lo_unbounded || bound > geom.lo) {
              geom.lo = bound;
              geom.lo_unbounded = false;
            }
          } else if (geom.hi_unbounded || bound < geom.hi) {
            geom.hi = bound;
            geom.hi_unbounded = false;
          }
        }
      }
      if (!feasible) continue;
      if (!geom.lo_unbounded && !geom.hi_unbounded && geom.lo >= geom.hi) continue;
      if (geom.lo_unbounded && geom.hi_unbounded)
        throw internal_error("corner_locus: unbounded tie line");

      Rational sample = geom.lo_unbounded   ? Rational(geom.hi - 1)
                        : geom.hi_unbounded ? Rational(geom.lo + 1)
                                            : Rational((geom.lo + geom.hi) / 2);
      MonomialSet cell_set = eval(p, geom.at(sample), chart).maximizers;
      if (seen[cell_set.bits()]) continue;
      seen[cell_set.bits()] = true;

      std::vector<std::pair<long, long>> exps;
      for (const ActiveMonomial& am : act)
        if (cell_set.contains(am.m)) exps.emplace_back(am.e1, am.e2);
      int weight = lattice_length(exps, {d1, d2});

      if (!geom.lo_unbounded && !geom.hi_unbounded) {
        int a = vertex_index(geom.at(geom.lo));
        int b = vertex_index(geom.at(geom.hi));
        sk.edges.push_back(SketchEdge{std::min(a, b), std::max(a, b), weight});
      } else if (geom.hi_unbounded) {
        int a = vertex_index(geom.at(geom.lo));
        sk.rays.push_back(SketchRay{
            a, {static_cast<int>(geom.u.first), static_cast<int>(geom.u.second)},
            weight});
      } else {
        int a = vertex_index(geom.at(geom.hi));
        sk.rays.push_back(SketchRay{
            a, {static_cast<int>(-geom.u.first), static_cast<int>(-geom.u.second)},
            weight});
      }
    }

  std::sort(sk.edges.begin(), sk.edges.end(),
            [](const SketchEdge& a, const SketchEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  std::sort(sk.rays.begin(), sk.rays.end(),
            [](const SketchRay& a, const SketchRay& b) {
              return std::tie(a.v, a.dir) < std::tie(b.v, b.dir);
            });

  // The locus of a conic is a tree.
  const int nv = static_cast<int>(sk.vertices.size());
  if (nv == 0) throw internal_error("corner_locus: no vertices");
  if (static_cast<int>(sk.edges.size()) != nv - 1)
    throw internal_error("corner_locus: cell count is not that of a tree");
  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const SketchEdge& e : sk.edges) root[find(e.u)] = find(e.v);
  for (int v = 1; v < nv; ++v)
    if (find(v) != find(0)) throw internal_error("corner_locus: disconnected locus");

  return sk;
}

std::vector<BalanceViolation> check_balance(const Sketch& sk) {
  std::vector<std::pair<Rational, Rational>> sums(sk.vertices.size(), {0, 0});
  for (const SketchEdge& e : sk.edges) {
    const AffinePoint& pu = sk.vertices[e.u].p;
    const AffinePoint& pv = sk.vertices[e.v].p;
    auto dir = primitive(pv.x - pu.x, pv.y - pu.y);
    sums[e.u].first += e.weight * dir.first;
    sums[e.u].second += e.weight * dir.second;
    sums[e.v].first -= e.weight * dir.first;
    sums[e.v].second -= e.weight * dir.second;
  }
  for (const SketchRay& r : sk.rays) {
    sums[r.v].first += r.weight * r.dir.first;
    sums[r.v].second += r.weight * r.dir.second;
  }
  std::vector<BalanceViolation> out;
  for (std::size_t v = 0; v < sums.size(); ++v)
    if (sums[v].first != 0 || sums[v].second != 0)
      out.push_back(BalanceViolation{static_cast<int>(v), sums[v]});
  return out;
}

RayCensus ray_census(const Sketch& sk) {
  RayCensus c;
  for (const SketchRay& r : sk.rays) {
    if (r.dir == std::pair<int, int>{-1, 0})
      c.west += r.weight;
    else if (r.dir == std::pair<int, int>{0, -1})
      c.south += r.weight;
    else if (r.dir == std::pair<int, int>{1, 1})
      c.northeast += r.weight;
    else
      c.only_standard_directions = false;
  }
  return c;
}

PendantSeparations pendant_separations(const Sketch& sk) {
  if (!ray_census(sk).is_conic_census())
    throw input_error("pendant_separations: ray census is not that of a conic");

  auto bases = [&](std::pair<int, int> dir) {
    std::vector<AffinePoint> out;
    for (const SketchRay& r : sk.rays)
      if (r.dir == dir)
        for (int k = 0; k < r.weight; ++k) out.push_back(sk.vertices[r.v].p);
    std::sort(out.begin(), out.end());
    return out;  // exactly two entries, possibly equal
  };

  PendantSeparations sep;
  auto ne = bases({1, 1});
  sep.ne_dx = ne[1].x - ne[0].x;
  sep.ne_dy = ne[1].y - ne[0].y;
  auto west = bases({-1, 0});
  sep.west = abs_q(west[1].y - west[0].y);
  auto south = bases({0, -1});
  sep.south = abs_q(south[1].x - south[0].x);
  return sep;
}

bool is_pair_of_lines(const Invariants& inv) {
  bool some_zero = false;
  for (int j = 1; j <= 3; ++j) {
    if (inv.d(j) < 0) return false;
    if (inv.d(j) == 0) some_zero = true;
  }
  return some_zero;
}

bool is_shape_singular_class(ConicClassTag tag) {
  switch (tag) {
    case ConicClassTag::OnePointCentral:
    case ConicClassTag::PairOfLinesOneZero:
    case ConicClassTag::PairOfLinesTwoZeros:
    case ConicClassTag::DoubleLine:
      return true;
    case ConicClassTag::TwoPointCentral:
    case ConicClassTag::Degenerate1:
    case ConicClassTag::Degenerate2:
      return false;
  }
  throw internal_error("is_shape_singular_class: bad enum");
}

}  // namespace tropconic
