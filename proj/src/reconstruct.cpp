#include "tropconic/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

namespace tropconic {

namespace {

constexpr std::pair<int, int> kWest{-1, 0};
constexpr std::pair<int, int> kSouth{0, -1};
constexpr std::pair<int, int> kNortheast{1, 1};

std::string dir_str(std::pair<int, int> d) {
  return "(" + std::to_string(d.first) + ", " + std::to_string(d.second) + ")";
}

}  // namespace

void validate_tree(const TreeSpec& t) {
  const std::size_t nv = t.vertices.size();
  if (nv == 0) throw input_error("tree rejected: no vertices");
  if (nv > 4)
    throw input_error("tree rejected: a conic locus has at most four vertices");

  std::map<int, int> index;  // id -> position
  for (std::size_t i = 0; i < nv; ++i) {
    if (!index.emplace(t.vertices[i].id, static_cast<int>(i)).second)
      throw input_error("tree rejected: duplicate vertex id " +
                        std::to_string(t.vertices[i].id));
  }
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      if (t.vertices[i].p == t.vertices[j].p)
        throw input_error("tree rejected: vertices " +
                          std::to_string(t.vertices[i].id) + " and " +
                          std::to_string(t.vertices[j].id) +
                          " share their coordinates");

  std::set<std::pair<int, int>> edge_keys;
  for (const TreeEdge& e : t.edges) {
    if (!index.count(e.u) || !index.count(e.v))
      throw input_error("tree rejected: edge references an unknown vertex id");
    if (e.u == e.v)
      throw input_error("tree rejected: self-loop at vertex id " +
                        std::to_string(e.u));
    if (e.weight < 1)
      throw input_error("tree rejected: edge weight must be at least 1");
    auto key = std::minmax(e.u, e.v);
    if (!edge_keys.insert({key.first, key.second}).second)
      throw input_error("tree rejected: duplicate edge between ids " +
                        std::to_string(key.first) + " and " +
                        std::to_string(key.second));
  }

  for (const TreeRay& r : t.rays) {
    if (!index.count(r.v))
      throw input_error("tree rejected: ray references an unknown vertex id");
    if (r.weight < 1)
      throw input_error("tree rejected: ray weight must be at least 1");
    if (r.dir != kWest && r.dir != kSouth && r.dir != kNortheast)
      throw input_error("tree rejected: ray direction " + dir_str(r.dir) +
                        " is not west, south or north-east");
  }

  int w = 0, s = 0, ne = 0;
  for (const TreeRay& r : t.rays) {
    if (r.dir == kWest) w += r.weight;
    if (r.dir == kSouth) s += r.weight;
    if (r.dir == kNortheast) ne += r.weight;
  }
  if (w != 2 || s != 2 || ne != 2)
    throw input_error("tree rejected: per-direction ray weights (west " +
                      std::to_string(w) + ", south " + std::to_string(s) +
                      ", north-east " + std::to_string(ne) +
                      ") are not (2, 2, 2)");

  if (t.edges.size() != nv - 1)
    throw input_error("tree rejected: " + std::to_string(t.edges.size()) +
                      " edges on " + std::to_string(nv) +
                      " vertices is not a tree");
  std::vector<int> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const TreeEdge& e : t.edges) root[find(index[e.u])] = find(index[e.v]);
  for (std::size_t i = 1; i < nv; ++i)
    if (find(static_cast<int>(i)) != find(0))
      throw input_error("tree rejected: the graph is disconnected");

  // Balance, on a verbatim sketch of the input.
  Sketch raw;
  for (const TreeVertex& v : t.vertices)
    raw.vertices.push_back(VertexInfo{v.p, MonomialSet{}});
  for (const TreeEdge& e : t.edges) {
    int u = index[e.u], v = index[e.v];
    raw.edges.push_back(SketchEdge{std::min(u, v), std::max(u, v), e.weight});
  }
  for (const TreeRay& r : t.rays)
    raw.rays.push_back(SketchRay{index[r.v], r.dir, r.weight});
  auto violations = check_balance(raw);
  if (!violations.empty()) {
    const BalanceViolation& bad = violations.front();
    throw input_error("tree rejected: unbalanced at vertex id " +
                      std::to_string(t.vertices[bad.vertex].id) + ", excess (" +
                      format_rational(bad.excess.first) + ", " +
                      format_rational(bad.excess.second) + ")");
  }
}

Sketch sketch_of(const TreeSpec& t) {
  validate_tree(t);

  std::vector<int> order(t.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return t.vertices[a].p < t.vertices[b].p;
  });
  std::map<int, int> pos;  // id -> sketch index
  Sketch sk;
  sk.chart = t.chart;
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[t.vertices[order[k]].id] = static_cast<int>(k);
    sk.vertices.push_back(VertexInfo{t.vertices[order[k]].p, MonomialSet{}});
  }
  for (const TreeEdge& e : t.edges) {
    int u = pos[e.u], v = pos[e.v];
    sk.edges.push_back(SketchEdge{std::min(u, v), std::max(u, v), e.weight});
  }
  std::map<std::pair<int, std::pair<int, int>>, int> merged;
  for (const TreeRay& r : t.rays) merged[{pos[r.v], r.dir}] += r.weight;
  for (const auto& [key, weight] : merged)
    sk.rays.push_back(SketchRay{key.first, key.second, weight});

  std::sort(sk.edges.begin(), sk.edges.end(),
            [](const SketchEdge& a, const SketchEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  std::sort(sk.rays.begin(), sk.rays.end(),
            [](const SketchRay& a, const SketchRay& b) {
              return std::tie(a.v, a.dir) < std::tie(b.v, b.dir);
            });
  return sk;
}

TreeSpec tree_of(const Sketch& sk) {
  TreeSpec t;
  t.chart = sk.chart;
  for (std::size_t i = 0; i < sk.vertices.size(); ++i)
    t.vertices.push_back(TreeVertex{static_cast<int>(i), sk.vertices[i].p});
  for (const SketchEdge& e : sk.edges)
    t.edges.push_back(TreeEdge{e.u, e.v, e.weight});
  for (const SketchRay& r : sk.rays)
    t.rays.push_back(TreeRay{r.v, r.dir, r.weight});
  return t;
}

bool same_cells(const Sketch& a, const Sketch& b) {
  if (a.chart != b.chart) return false;
  if (a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    if (a.vertices[i].p != b.vertices[i].p) return false;
  if (a.edges != b.edges) return false;
  if (a.rays != b.rays) return false;
  return true;
}

namespace {

/* Coordinate shuffle of the ambient projective plane, back in the chart. */
AffinePoint transform_point(const AffinePoint& q, const IndexPerm& pi) {
  const std::array<Rational, 3> h{q.x, q.y, 0};
  std::array<Rational, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = h[pi[i] - 1];
  return AffinePoint{r[0] - r[2], r[1] - r[2]};
}

std::pair<int, int> transform_dir(std::pair<int, int> d, const IndexPerm& pi) {
  const std::array<int, 3> h{d.first, d.second, 0};
  std::array<int, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = h[pi[i] - 1];
  return {r[0] - r[2], r[1] - r[2]};
}

Sketch transform_sketch(const Sketch& sk, const IndexPerm& pi) {
  const int n = static_cast<int>(sk.vertices.size());
  std::vector<AffinePoint> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = transform_point(sk.vertices[i].p, pi);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pts[a] < pts[b]; });
  std::vector<int> at(n);
  for (int k = 0; k < n; ++k) at[order[k]] = k;

  Sketch out;
  out.chart = sk.chart;
  for (int k = 0; k < n; ++k)
    out.vertices.push_back(VertexInfo{pts[order[k]], MonomialSet{}});
  for (const SketchEdge& e : sk.edges) {
    int u = at[e.u], v = at[e.v];
    out.edges.push_back(SketchEdge{std::min(u, v), std::max(u, v), e.weight});
  }
  for (const SketchRay& r : sk.rays)
    out.rays.push_back(SketchRay{at[r.v], transform_dir(r.dir, pi), r.weight});

  std::sort(out.edges.begin(), out.edges.end(),
            [](const SketchEdge& a, const SketchEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  std::sort(out.rays.begin(), out.rays.end(),
            [](const SketchRay& a, const SketchRay& b) {
              return std::tie(a.v, a.dir) < std::tie(b.v, b.dir);
            });
  return out;
}

/* Ray weight toward each pendant direction, per vertex. */
struct RaySig {
  int w = 0, s = 0, ne = 0;

  friend bool operator==(const RaySig& a, const RaySig& b) {
    return a.w == b.w && a.s == b.s && a.ne == b.ne;
  }
};

std::optional<std::vector<RaySig>> ray_signatures(const Sketch& sk) {
  std::vector<RaySig> sig(sk.vertices.size());
  for (const SketchRay& r : sk.rays) {
    if (r.dir == kWest)
      sig[r.v].w += r.weight;
    else if (r.dir == kSouth)
      sig[r.v].s += r.weight;
    else if (r.dir == kNortheast)
      sig[r.v].ne += r.weight;
    else
      return std::nullopt;
  }
  return sig;
}

/* Read the canonical clamped shape (s21, s32, s31) off a sketch whose
 * distinguished index is 3, or nullopt when the geometry does not match
 * any canonical pattern. Vertices are lex-sorted, rays merged. */
std::optional<std::array<Rational, 3>> read_canonical(const Sketch& sk) {
  for (const SketchEdge& e : sk.edges)
    if (e.weight != 1) return std::nullopt;
  auto sigs = ray_signatures(sk);
  if (!sigs) return std::nullopt;
  const std::vector<RaySig>& sig = *sigs;

  int heavy = 0;  // weight-2 pendant rays
  for (const SketchRay& r : sk.rays)
    if (r.weight == 2) ++heavy;

  const int n = static_cast<int>(sk.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const SketchEdge& e : sk.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto delta = [&](int a, int b) {
    return AffinePoint{sk.vertices[a].p.x - sk.vertices[b].p.x,
                       sk.vertices[a].p.y - sk.vertices[b].p.y};
  };

  switch (n) {
    case 1: {
      // Double line: three weight-2 pendants at the single vertex.
      if (sig[0] == RaySig{2, 2, 2}) return std::array<Rational, 3>{0, 0, 0};
      return std::nullopt;
    }

    case 2: {
      AffinePoint d = delta(1, 0);
      if (heavy == 2) {
        // s31 = s32 = 0, s21 > 0: west pair collapsed on the lex-earlier
        // vertex, south pair on the other, displacement (s21, -s21).
        if (!(sig[0] == RaySig{2, 0, 1} && sig[1] == RaySig{0, 2, 1}))
          return std::nullopt;
        if (!(d.x > 0 && d.y == -d.x)) return std::nullopt;
        return std::array<Rational, 3>{d.x, 0, 0};
      }
      if (heavy == 1) {
        // Pair of lines with d2 = d3 = 0: horizontal edge of length d1,
        // the west pair collapsed at its left end.
        if (!(sig[0] == RaySig{2, 1, 1} && sig[1] == RaySig{0, 1, 1}))
          return std::nullopt;
        if (!(d.x > 0 && d.y == 0)) return std::nullopt;
        return std::array<Rational, 3>{d.x / 2, 0, d.x / 2};
      }
      return std::nullopt;
    }

    case 3: {
      int mid = -1;
      for (int v = 0; v < n; ++v)
        if (adj[v].size() == 2) mid = v;
      if (mid < 0) return std::nullopt;

      if (heavy == 1) {
        // s31 = 0: the east arm of the two-point pattern collapsed into a
        // vertex carrying the south pair.
        int u = -1, e = -1;
        for (int v = 0; v < n; ++v) {
          if (v == mid) continue;
          if (sig[v] == RaySig{0, 2, 1}) u = v;
          if (sig[v] == RaySig{1, 0, 1}) e = v;
        }
        if (u < 0 || e < 0 || !(sig[mid] == RaySig{1, 0, 0}))
          return std::nullopt;
        AffinePoint du = delta(u, mid), de = delta(e, mid);
        if (!(du.x > 0 && du.y == -du.x)) return std::nullopt;
        if (!(de.x == 0 && de.y > 0)) return std::nullopt;
        Rational s32 = de.y / 2;
        return std::array<Rational, 3>{s32 + du.x, s32, 0};
      }
      if (heavy == 0) {
        // Pair of lines with d3 = 0: four-valent center, arms east and
        // north of lengths 2*s31 and 2*s32.
        if (!(sig[mid] == RaySig{1, 1, 0})) return std::nullopt;
        int e = -1, nn = -1;
        for (int v : adj[mid]) {
          AffinePoint d = delta(v, mid);
          if (d.x > 0 && d.y == 0 && sig[v] == RaySig{0, 1, 1}) e = v;
          if (d.x == 0 && d.y > 0 && sig[v] == RaySig{1, 0, 1}) nn = v;
        }
        if (e < 0 || nn < 0) return std::nullopt;
        Rational s31 = delta(e, mid).x / 2;
        Rational s32 = delta(nn, mid).y / 2;
        return std::array<Rational, 3>{s31 + s32, s32, s31};
      }
      return std::nullopt;
    }

    case 4: {
      if (heavy != 0) return std::nullopt;
      int center = -1;
      for (int v = 0; v < n; ++v)
        if (adj[v].size() == 3) center = v;

      if (center >= 0) {
        // One-point central: arms (d1, 0), (0, d2), (-d3, -d3).
        if (!(sig[center] == RaySig{0, 0, 0})) return std::nullopt;
        Rational d1, d2, d3;
        bool e = false, nn = false, sw = false;
        for (int v : adj[center]) {
          AffinePoint d = delta(v, center);
          if (d.x > 0 && d.y == 0 && sig[v] == RaySig{0, 1, 1}) {
            d1 = d.x;
            e = true;
          } else if (d.x == 0 && d.y > 0 && sig[v] == RaySig{1, 0, 1}) {
            d2 = d.y;
            nn = true;
          } else if (d.x < 0 && d.y == d.x && sig[v] == RaySig{1, 1, 0}) {
            d3 = -d.x;
            sw = true;
          } else {
            return std::nullopt;
          }
        }
        if (!(e && nn && sw)) return std::nullopt;
        return std::array<Rational, 3>{(d1 + d2) / 2, (d2 + d3) / 2,
                                       (d1 + d3) / 2};
      }

      // Two-point central: path e1 - m1 - m2 - e2 with e1 - m1 = (2*s31, 0),
      // e2 - m2 = (0, 2*s32) and m1 - m2 = (-d3, d3).
      int e1 = -1, e2 = -1;
      for (int v = 0; v < n; ++v) {
        if (adj[v].size() != 1) continue;
        if (sig[v] == RaySig{0, 1, 1}) e1 = v;
        if (sig[v] == RaySig{1, 0, 1}) e2 = v;
      }
      if (e1 < 0 || e2 < 0 || e1 == e2) return std::nullopt;
      int m1 = adj[e1][0], m2 = adj[e2][0];
      if (m1 == m2) return std::nullopt;
      if (!(sig[m1] == RaySig{0, 1, 0} && sig[m2] == RaySig{1, 0, 0}))
        return std::nullopt;
      AffinePoint a1 = delta(e1, m1), a2 = delta(e2, m2), h = delta(m1, m2);
      if (!(a1.x > 0 && a1.y == 0)) return std::nullopt;
      if (!(a2.x == 0 && a2.y > 0)) return std::nullopt;
      if (!(h.x > 0 && h.y == -h.x)) return std::nullopt;
      Rational s31 = a1.x / 2, s32 = a2.y / 2;
      return std::array<Rational, 3>{s31 + s32 + h.x, s32, s31};
    }

    default:
      return std::nullopt;
  }
}

/* Canonical matrix whose chart-Z locus is the given sketch geometry. */
SymMatrix3 recover_z_frame(const Sketch& sk) {
  for (const IndexPerm& pi : all_perms()) {
    Sketch tr = transform_sketch(sk, pi);
    auto canon = read_canonical(tr);
    if (!canon) continue;

    SymMatrix3 splus{0, 0, 0, TropScalar::bottom(), TropScalar::bottom(),
                     TropScalar::bottom()};
    auto set_pair = [&](int i, int j, const Rational& val) {
      if (i > j) std::swap(i, j);
      TropScalar v{val};
      if (i == 1 && j == 2)
        splus.a21 = v;
      else if (i == 2 && j == 3)
        splus.a32 = v;
      else
        splus.a31 = v;
    };
    set_pair(pi[0], pi[1], (*canon)[0]);
    set_pair(pi[1], pi[2], (*canon)[1]);
    set_pair(pi[0], pi[2], (*canon)[2]);

    std::vector<VertexInfo> model = vertices(poly_of(splus));
    if (model.size() != sk.vertices.size()) continue;
    Rational tx = sk.vertices[0].p.x - model[0].p.x;
    Rational ty = sk.vertices[0].p.y - model[0].p.y;
    bool match = true;
    for (std::size_t i = 0; i < model.size() && match; ++i)
      match = sk.vertices[i].p ==
              AffinePoint{model[i].p.x + tx, model[i].p.y + ty};
    if (!match) continue;

    SymMatrix3 r;
    r.a33 = 0;
    r.a11 = -2 * tx;
    r.a22 = -2 * ty;
    r.a21 = TropScalar(Rational(splus.a21.value() + (r.a11 + r.a22) / 2));
    r.a32 = TropScalar(Rational(splus.a32.value() + (r.a22 + r.a33) / 2));
    r.a31 = TropScalar(Rational(splus.a31.value() + (r.a11 + r.a33) / 2));
    return r;
  }
  throw input_error(
      "tree rejected: displacement pattern matches no conic class");
}

}  // namespace

std::pair<Invariants, ConicClass> recover_invariants(const TreeSpec& t) {
  Sketch sk = sketch_of(t);
  SymMatrix3 rz = recover_z_frame(sk);
  SymMatrix3 r = permute(rz, inverse(chart_perm(t.chart)));
  Invariants inv = invariants_of(r);
  return {inv, classify(inv)};
}

SymMatrix3 recover_polynomial(const TreeSpec& t) {
  Sketch want = sketch_of(t);
  SymMatrix3 rz = recover_z_frame(want);
  SymMatrix3 r = permute(rz, inverse(chart_perm(t.chart)));
  Sketch got = corner_locus(poly_of(r), t.chart);
  if (!same_cells(got, want))
    throw input_error("tree rejected: not the corner locus of a conic");
  return r;
}

}  // namespace tropconic
