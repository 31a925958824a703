#pragma once
// Planar grid diagrams, the planar Floer complex with its bigrading and
// sliced homology, and the nilCoxeter grid model with its isomorphism check.
#include <json.hpp>

#include "cornered/gradings.hpp"

namespace cornered {

// --------------------------------------------------------------- diagrams
// Size-n grid: lattice points (1..n, 1..n); cell-rows 1..n-1 indexed bottom
// to top; each cell-row r carries one X marking in column xCells[r-1] and
// one O marking in column oCells[r-1], and each column is used once.
struct GridDiagram {
  int n = 1;
  std::vector<int> xCells, oCells;  // 1-based cell columns, one per cell-row

  bool valid() const {
    auto is_perm = [&](const std::vector<int>& v) {
      if ((int)v.size() != n - 1) return false;
      std::vector<int> seen(n, 0);
      for (int c : v) {
        if (c < 1 || c > n - 1 || seen[c]) return false;
        seen[c] = 1;
      }
      return true;
    };
    return n >= 1 && is_perm(xCells) && is_perm(oCells);
  }
};

inline GridDiagram grid_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GridDiagram h;
  h.n = j.at("n").get<int>();
  h.xCells = j.at("x").get<std::vector<int>>();
  h.oCells = j.at("o").get<std::vector<int>>();
  if (!h.valid()) throw std::invalid_argument("grid: markings are not permutations");
  return h;
}
inline std::string to_json(const GridDiagram& h) {
  nlohmann::json j;
  j["n"] = h.n;
  j["x"] = h.xCells;
  j["o"] = h.oCells;
  return j.dump();
}

// A generator is labeled by a permutation w: its point on the horizontal
// line at height n - i sits in column w[i] + 1 (so w lists columns from the
// top row down, and the identity has no inversions of the label).
struct PlanarGenerator {
  Perm w;
  auto operator<=>(const PlanarGenerator&) const = default;
  int n() const { return (int)w.size(); }
  // column of the point at height h in 1..n
  int col(int h) const { return w[n() - h] + 1; }
  std::string str() const { return NilCoxGen{w}.str(); }
};
using GridElt = Lin<PlanarGenerator>;

inline std::vector<PlanarGenerator> grid_generators(int n) {
  std::vector<PlanarGenerator> out;
  for (auto& w : all_perms(n)) out.push_back({w});
  return out;
}

// ------------------------------------------------------------- rectangles
struct GridRect {
  int c1 = 0, c2 = 0, h1 = 0, h2 = 0;  // columns c1 < c2, heights h1 < h2
};

// The at-most-one empty rectangle from x to y: x and y differ in exactly two
// heights, the lower-left and upper-right vertices lie on x, and no point of
// x shared with y sits in the open interior.
inline std::vector<GridRect> empty_rectangles(const PlanarGenerator& x,
                                              const PlanarGenerator& y) {
  if (x.n() != y.n()) throw std::invalid_argument("grid size mismatch");
  std::vector<int> diff;
  for (int h = 1; h <= x.n(); ++h)
    if (x.col(h) != y.col(h)) diff.push_back(h);
  if (diff.size() != 2) return {};
  int h1 = diff[0], h2 = diff[1];
  if (x.col(h1) != y.col(h2) || x.col(h2) != y.col(h1)) return {};
  if (x.col(h1) >= x.col(h2)) return {};  // lower-left vertex must be on x
  GridRect r{x.col(h1), x.col(h2), h1, h2};
  for (int h = h1 + 1; h < h2; ++h)
    if (r.c1 < x.col(h) && x.col(h) < r.c2) return {};
  return {r};
}

// Number of X markings inside and the U-monomial of the O markings inside;
// markings live at cell centers, variables are indexed by the O's cell-row.
inline std::pair<int, Poly> rect_weight(const GridDiagram& h, const GridRect& r) {
  int xs = 0;
  Monomial u = Monomial::one();
  for (int row = r.h1; row < r.h2; ++row) {
    if (r.c1 <= h.xCells[row - 1] && h.xCells[row - 1] < r.c2) ++xs;
    if (r.c1 <= h.oCells[row - 1] && h.oCells[row - 1] < r.c2) u = u * Monomial::U(row);
  }
  return {xs, Poly::from(u)};
}

inline GridElt cp_diff(const GridDiagram& h, const PlanarGenerator& x) {
  GridElt out;
  for (auto& y : grid_generators(x.n()))
    for (auto& r : empty_rectangles(x, y)) {
      auto [xs, u] = rect_weight(h, r);
      if (xs == 0) out.add(y, u);
    }
  return out;
}
inline GridElt cp_diff(const GridDiagram& h, const GridElt& v) {
  GridElt out;
  for (auto& [g, c] : v.terms) out += cp_diff(h, g).scaled(c);
  return out;
}

// marking-free model: every empty rectangle counts with coefficient one
inline GridElt nilcox_grid_diff(const PlanarGenerator& x) {
  GridElt out;
  for (auto& y : grid_generators(x.n()))
    for ([[maybe_unused]] auto& r : empty_rectangles(x, y)) out.add(y, Poly::one());
  return out;
}

// ---------------------------------------------------------------- bigrades
// Count of pairs (a, b) with a strictly below-left of b; coordinates are
// doubled so cell centers stay integral.
inline int southwest_pairs(const std::vector<std::pair<int, int>>& A,
                           const std::vector<std::pair<int, int>>& B) {
  int c = 0;
  for (auto& a : A)
    for (auto& b : B) c += (a.first < b.first && a.second < b.second);
  return c;
}
inline std::vector<std::pair<int, int>> doubled_points(const PlanarGenerator& x) {
  std::vector<std::pair<int, int>> p;
  for (int h = 1; h <= x.n(); ++h) p.push_back({2 * x.col(h), 2 * h});
  return p;
}
inline std::vector<std::pair<int, int>> doubled_markings(const std::vector<int>& cells) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t r = 0; r < cells.size(); ++r)
    p.push_back({2 * cells[r] + 1, 2 * (int)(r + 1) + 1});
  return p;
}

inline Bigrade bigrade_generator(const GridDiagram& h, const PlanarGenerator& x) {
  auto p = doubled_points(x);
  auto xm = doubled_markings(h.xCells), om = doubled_markings(h.oCells);
  return {southwest_pairs(xm, p) - southwest_pairs(om, p),
          southwest_pairs(p, p) - 2 * southwest_pairs(om, p)};
}
inline Bigrade bigrade_U() { return {-1, -2}; }

// ------------------------------------------------------- sliced homology
// Basis of the bidegree slice: pairs (generator, U-monomial) whose combined
// bigrade hits the target; each variable drops the bigrade by (1, 2).
inline std::vector<Monomial> monomials_of_degree(int vars, int deg) {
  std::vector<Monomial> out;
  std::function<void(int, int, Monomial)> rec = [&](int v, int left, Monomial m) {
    if (v > vars) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) rec(v + 1, left - e, e ? m * Monomial::U(v, e) : m);
  };
  rec(1, deg, Monomial::one());
  return out;
}

inline std::vector<std::pair<PlanarGenerator, Monomial>> slice_basis(const GridDiagram& h,
                                                                     Bigrade target) {
  std::vector<std::pair<PlanarGenerator, Monomial>> out;
  for (auto& x : grid_generators(h.n)) {
    Bigrade b = bigrade_generator(h, x);
    int d = b.alexander - target.alexander;
    if (d < 0 || b.maslov - 2 * d != target.maslov) continue;
    for (auto& u : monomials_of_degree(h.n - 1, d)) out.push_back({x, u});
  }
  return out;
}

// matrix of the differential from the slice at `from` into the slice one
// Maslov grading below
inline F2Matrix slice_matrix(const GridDiagram& h, Bigrade from) {
  auto src = slice_basis(h, from);
  auto dst = slice_basis(h, {from.alexander, from.maslov - 1});
  std::map<std::pair<PlanarGenerator, Monomial>, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  F2Matrix mat(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (auto& [y, c] : cp_diff(h, src[j].first).terms)
      for (auto& mono : c.monomials) {
        auto it = index.find({y, src[j].second * mono});
        if (it == index.end()) throw std::runtime_error("differential leaves the slice");
        mat.set(it->second, j);
      }
  return mat;
}

inline std::map<Bigrade, std::size_t> cp_homology(const GridDiagram& h,
                                                  const std::vector<Bigrade>& window) {
  std::map<Bigrade, std::size_t> out;
  for (auto& b : window) {
    F2Matrix at = slice_matrix(h, b);
    F2Matrix above = slice_matrix(h, {b.alexander, b.maslov + 1});
    std::size_t dim = at.cols;
    out[b] = dim - f2_rank(at) - f2_rank(above);
  }
  return out;
}

// ----------------------------------------------- nilCoxeter model check
inline Report nilcoxeter_grid_iso(int m) {
  Report rep;
  for (auto& w : all_perms(m)) {
    PlanarGenerator x{w};
    NilCoxGen s{w};
    // grading: southwest pairs of the generator equal the crossing number
    auto p = doubled_points(x);
    rep.expect(southwest_pairs(p, p) == s.cr(), "grid Maslov != crossing number");
    // differential: rectangle moves match the single-drop resolutions
    Lin<NilCoxGen> transported;
    for (auto& [y, c] : nilcox_grid_diff(x).terms) transported.add(NilCoxGen{y.w}, c);
    rep.expect(transported == nc_diff(s), "rectangle differential != strand differential");
    // at most one rectangle per ordered pair
    for (auto& v : all_perms(m))
      rep.expect(empty_rectangles(x, PlanarGenerator{v}).size() <= 1,
                 "more than one empty rectangle");
  }
  return rep;
}

// ----------------------------------------------------------------- render
inline std::string render_grid(const GridDiagram& h, const PlanarGenerator* gen = nullptr) {
  // lattice rows from the top; generator dots at lattice points, markings in
  // cells
  std::ostringstream os;
  for (int hgt = h.n; hgt >= 1; --hgt) {
    for (int c = 1; c <= h.n; ++c) {
      bool dot = gen && gen->col(hgt) == c;
      os << (dot ? '*' : '+');
      if (c < h.n) os << "--";
    }
    os << '\n';
    if (hgt > 1) {
      for (int c = 1; c <= h.n; ++c) {
        os << '|';
        if (c < h.n) {
          char mark = ' ';
          if (h.xCells[hgt - 2] == c) mark = 'X';
          if (h.oCells[hgt - 2] == c) mark = mark == 'X' ? '#' : 'O';
          os << mark << ' ';
        }
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace cornered
