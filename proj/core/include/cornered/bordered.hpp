#pragma once
// Vertical slicing of a planar grid: the right module CPA and left module
// CPD over the strands algebra of the cut, and the pairing check that glues
// them back into the planar complex.
#include "cornered/grid.hpp"
#include "cornered/strands.hpp"

namespace cornered {

// Generators of the two halves: one point per column of the half, in the
// row given by an injection into [N].
struct GenA {
  int N = 0, k = 0;
  std::vector<int> iota;  // iota[j-1] = height of the point on column j
  auto operator<=>(const GenA&) const = default;
  std::vector<int> image() const {
    auto s = iota;
    std::sort(s.begin(), s.end());
    return s;
  }
  std::vector<std::pair<int, int>> points() const {
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j <= k; ++j) p.push_back({j, iota[j - 1]});
    return p;
  }
};
struct GenD {
  int N = 0, k = 0;
  std::vector<int> iota;  // iota[j-k-1] = height of the point on column j
  auto operator<=>(const GenD&) const = default;
  std::vector<int> image() const {
    auto s = iota;
    std::sort(s.begin(), s.end());
    return s;
  }
  std::vector<int> complement() const {
    std::vector<int> c, im = image();
    for (int h = 1; h <= N; ++h)
      if (!std::binary_search(im.begin(), im.end(), h)) c.push_back(h);
    return c;
  }
  std::vector<std::pair<int, int>> points() const {
    std::vector<std::pair<int, int>> p;
    for (int j = k + 1; j <= N; ++j) p.push_back({j, iota[j - k - 1]});
    return p;
  }
};
using CPAElt = Lin<GenA>;

inline std::vector<std::vector<int>> injections(int slots, int N) {
  std::vector<std::vector<int>> out{{}};
  for (int s = 0; s < slots; ++s) {
    std::vector<std::vector<int>> next;
    for (auto& v : out)
      for (int h = 1; h <= N; ++h)
        if (std::find(v.begin(), v.end(), h) == v.end()) {
          auto c = v;
          c.push_back(h);
          next.push_back(std::move(c));
        }
    out = std::move(next);
  }
  return out;
}
inline std::vector<GenA> gen_a_basis(int N, int k) {
  std::vector<GenA> out;
  for (auto& v : injections(k, N)) out.push_back({N, k, v});
  return out;
}
inline std::vector<GenD> gen_d_basis(int N, int k) {
  std::vector<GenD> out;
  for (auto& v : injections(N - k, N)) out.push_back({N, k, v});
  return out;
}

// ------------------------------------------------------ generic rectangles
// The at-most-one empty rectangle between two equal-size point sets
// (col, height): they differ in exactly two points, the lower-left and
// upper-right corners lie on x, and no shared point is in the open interior.
inline std::vector<GridRect> empty_rect_between(std::vector<std::pair<int, int>> px,
                                                std::vector<std::pair<int, int>> py) {
  std::sort(px.begin(), px.end());
  std::sort(py.begin(), py.end());
  std::vector<std::pair<int, int>> ox, oy, common;
  std::set_difference(px.begin(), px.end(), py.begin(), py.end(), std::back_inserter(ox));
  std::set_difference(py.begin(), py.end(), px.begin(), px.end(), std::back_inserter(oy));
  std::set_intersection(px.begin(), px.end(), py.begin(), py.end(),
                        std::back_inserter(common));
  if (ox.size() != 2 || oy.size() != 2) return {};
  auto [c1, h1] = ox[0];
  auto [c2, h2] = ox[1];
  if (c1 >= c2 || h1 >= h2) return {};  // lower-left and upper-right on x
  if (!(oy[0] == std::pair{c1, h2} && oy[1] == std::pair{c2, h1})) return {};
  for (auto& [c, h] : common)
    if (c1 < c && c < c2 && h1 < h && h < h2) return {};
  return {GridRect{c1, c2, h1, h2}};
}

// ------------------------------------------------------------- half-strips
// CPA half-strip: the point on column c moves up from height i to j; the
// strip spans columns c..cut and rows i..j-1 and must avoid other points
// and X markings. Returns the U-weight if the strip exists.
inline std::optional<Poly> half_strip_A(const GridDiagram& hd, int k, const GenA& x,
                                        const GenA& y, int i, int j) {
  if (i >= j) throw std::invalid_argument("half-strip: need i < j");
  int mover = 0;
  for (int c = 1; c <= k; ++c) {
    if (x.iota[c - 1] == y.iota[c - 1]) continue;
    if (mover || x.iota[c - 1] != i || y.iota[c - 1] != j) return std::nullopt;
    mover = c;
  }
  if (!mover) return std::nullopt;
  for (int c = 1; c <= k; ++c)
    if (c != mover && i < x.iota[c - 1] && x.iota[c - 1] < j && c > mover)
      return std::nullopt;
  Monomial u = Monomial::one();
  for (int r = i; r < j; ++r) {
    if (mover <= hd.xCells[r - 1] && hd.xCells[r - 1] <= k) return std::nullopt;
    if (mover <= hd.oCells[r - 1] && hd.oCells[r - 1] <= k) u = u * Monomial::U(r);
  }
  return Poly::from(u);
}

// CPD half-strip: the point on column c moves down from height j to i; the
// strip spans columns cut+1..c-1 (cells cut+1..c-1) and rows i..j-1.
inline std::optional<Poly> half_strip_D(const GridDiagram& hd, int k, const GenD& x,
                                        const GenD& y, int i, int j) {
  if (i >= j) throw std::invalid_argument("half-strip: need i < j");
  int mover = 0;
  for (int c = k + 1; c <= x.N; ++c) {
    if (x.iota[c - k - 1] == y.iota[c - k - 1]) continue;
    if (mover || x.iota[c - k - 1] != j || y.iota[c - k - 1] != i) return std::nullopt;
    mover = c;
  }
  if (!mover) return std::nullopt;
  for (int c = k + 1; c <= x.N; ++c)
    if (c != mover && i < x.iota[c - k - 1] && x.iota[c - k - 1] < j && c < mover)
      return std::nullopt;
  Monomial u = Monomial::one();
  for (int r = i; r < j; ++r) {
    if (k + 1 <= hd.xCells[r - 1] && hd.xCells[r - 1] < mover) return std::nullopt;
    if (k + 1 <= hd.oCells[r - 1] && hd.oCells[r - 1] < mover) u = u * Monomial::U(r);
  }
  return Poly::from(u);
}

// ------------------------------------------------------------- CPA module
inline CPAElt cpa_diff(const GridDiagram& hd, const GenA& x) {
  CPAElt out;
  for (auto& y : gen_a_basis(x.N, x.k))
    for (auto& r : empty_rect_between(x.points(), y.points())) {
      auto [xs, u] = rect_weight(hd, r);
      if (xs == 0) out.add(y, u);
    }
  return out;
}
inline CPAElt cpa_diff(const GridDiagram& hd, const CPAElt& v) {
  CPAElt out;
  for (auto& [g, c] : v.terms) out += cpa_diff(hd, g).scaled(c);
  return out;
}

// action by the elementary generators: idempotents project on the image,
// chords act by half-strips (at most one term)
inline CPAElt cpa_act_idempotent(const GenA& x, const std::vector<int>& S) {
  return x.image() == S ? CPAElt(x) : CPAElt{};
}
inline CPAElt cpa_act_chord(const GridDiagram& hd, int k, const GenA& x, int i, int j) {
  CPAElt out;
  for (int c = 1; c <= k; ++c) {
    if (x.iota[c - 1] != i) continue;
    if (std::find(x.iota.begin(), x.iota.end(), j) != x.iota.end()) break;
    GenA y = x;
    y.iota[c - 1] = j;
    if (auto u = half_strip_A(hd, k, x, y, i, j)) out.add(y, *u);
    break;
  }
  return out;
}

// The full right action of the strands algebra, built as the multiplicative
// closure of the elementary actions. Building it doubles as a proof that the
// action is well defined: whenever a product of generators lands in the span
// of earlier elements, the two candidate actions are compared.
struct CPAModule {
  GridDiagram hd;
  int k = 0;
  std::vector<GenA> basis;
  struct Row {
    AElt elt;
    std::vector<CPAElt> act;  // image of each basis generator
  };
  std::map<StrandsTriple, Row> rows;  // echelon over leading basis triples
  Report buildReport;

  CPAModule(const GridDiagram& h, int cut) : hd(h), k(cut), basis(gen_a_basis(h.n, cut)) {
    build();
  }

  std::size_t index(const GenA& g) const {
    return std::lower_bound(basis.begin(), basis.end(), g) - basis.begin();
  }
  // reduce v against the echelon rows, accumulating the tracked action
  std::pair<AElt, std::vector<CPAElt>> reduce(AElt v, std::vector<CPAElt> act) const {
    for (;;) {
      bool hit = false;
      for (auto& [g, c] : v.terms) {
        auto it = rows.find(g);
        if (it == rows.end()) continue;
        if (!c.is_one()) throw std::runtime_error("CPA action: non-scalar coefficient");
        v += it->second.elt;
        for (std::size_t i = 0; i < act.size(); ++i) act[i] += it->second.act[i];
        hit = true;
        break;
      }
      if (!hit) return {v, act};
    }
  }
  bool insert(AElt v, std::vector<CPAElt> act) {
    auto [r, ra] = reduce(std::move(v), std::move(act));
    if (r.is_zero()) {
      bool zero = std::all_of(ra.begin(), ra.end(), [](auto& e) { return e.is_zero(); });
      buildReport.expect(zero, "action is not well defined on the relation ideal");
      return false;
    }
    StrandsTriple lead = r.terms.begin()->first;
    rows[std::move(lead)] = Row{std::move(r), std::move(ra)};
    return true;
  }
  void build() {
    int N = hd.n;
    std::vector<Row> gens;
    for (auto& S : all_subsets(N, k)) {
      std::vector<CPAElt> act;
      for (auto& g : basis) act.push_back(cpa_act_idempotent(g, S));
      gens.push_back({AElt(idempotent_gen(N, S)), std::move(act)});
    }
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        AElt c = chord_k(N, k, i, j);
        if (c.is_zero()) continue;
        std::vector<CPAElt> act;
        for (auto& g : basis) act.push_back(cpa_act_chord(hd, k, g, i, j));
        gens.push_back({std::move(c), std::move(act)});
      }
    for (auto& g : gens) insert(g.elt, g.act);
    // closure: left-associated words reduce to (row) * (generator) products
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Row> snap;
      for (auto& [lead, r] : rows) snap.push_back(r);
      for (auto& a : snap)
        for (auto& b : gens) {
          AElt prod = strands_mul(a.elt, b.elt);
          std::vector<CPAElt> act;
          for (auto& g : basis) {
            CPAElt outv;
            for (auto& [h, c] : a.act[index(g)].terms) outv += b.act[index(h)].scaled(c);
            act.push_back(std::move(outv));
          }
          grew |= insert(std::move(prod), std::move(act));
        }
    }
    buildReport.expect(rows.size() == strands_basis(hd.n, k).size(),
                       "generators fail to span the strands algebra");
  }
  CPAElt act(const CPAElt& x, const AElt& a) const {
    std::vector<CPAElt> zero(basis.size());
    auto [r, ra] = reduce(a, zero);
    if (!r.is_zero()) throw std::runtime_error("CPA action: element outside the span");
    CPAElt out;
    for (auto& [g, c] : x.terms) out += ra[index(g)].scaled(c);
    return out;
  }
};

// ------------------------------------------------------------- CPD module
// Basis pairs: a strands triple whose targets are exactly the heights not
// used by the generator.
struct CPDGen {
  StrandsTriple a;
  GenD x;
  auto operator<=>(const CPDGen&) const = default;
};
using CPDElt = Lin<CPDGen>;

inline CPDElt cpd_pair(const AElt& a, const GenD& x) {
  CPDElt out;
  for (auto& [g, c] : a.terms)
    if (g.T() == x.complement()) out.add(CPDGen{g, x}, c);
  return out;
}

// differential of the generator part: rectangles plus half-strips that emit
// a chord on the cut line
inline CPDElt cpd_diff_gen(const GridDiagram& hd, int k, const GenD& x) {
  CPDElt out;
  AElt idem(idempotent_gen(hd.n, x.complement()));
  for (auto& y : gen_d_basis(x.N, x.k)) {
    for (auto& r : empty_rect_between(x.points(), y.points())) {
      auto [xs, u] = rect_weight(hd, r);
      if (xs == 0) out += cpd_pair(idem, y).scaled(u);
    }
    for (int i = 1; i <= x.N; ++i)
      for (int j = i + 1; j <= x.N; ++j)
        if (auto u = half_strip_D(hd, k, x, y, i, j)) {
          StrandsTriple c;
          c.N = x.N;
          c.ph.push_back({i, j});
          for (int h : x.complement())
            if (h != i) c.ph.push_back({h, h});
          std::sort(c.ph.begin(), c.ph.end());
          out += cpd_pair(AElt(c), y).scaled(*u);
        }
  }
  return out;
}

inline CPDElt cpd_diff(const GridDiagram& hd, int k, const CPDGen& g) {
  CPDElt out;
  for (auto& [da, c] : strands_diff(AElt(g.a)).terms) out.add(CPDGen{da, g.x}, c);
  for (auto& [t, c] : cpd_diff_gen(hd, k, g.x).terms) {
    for (auto& [p, c2] : strands_mul(AElt(g.a), AElt(t.a)).terms)
      out.add(CPDGen{p, t.x}, c * c2);
  }
  return out;
}
inline CPDElt cpd_diff(const GridDiagram& hd, int k, const CPDElt& v) {
  CPDElt out;
  for (auto& [g, c] : v.terms) out += cpd_diff(hd, k, g).scaled(c);
  return out;
}
inline CPDElt cpd_act(const AElt& b, const CPDElt& v) {
  CPDElt out;
  for (auto& [g, c] : v.terms)
    for (auto& [p, c2] : strands_mul(b, AElt(g.a)).terms) out.add(CPDGen{p, g.x}, c * c2);
  return out;
}

// ---------------------------------------------------------------- bigrades
inline std::vector<std::pair<int, int>> doubled_gen_points(
    const std::vector<std::pair<int, int>>& pts) {
  std::vector<std::pair<int, int>> p;
  for (auto& [c, h] : pts) p.push_back({2 * c, 2 * h});
  return p;
}
// markings of the half-diagram on the requested side of the cut
inline std::vector<std::pair<int, int>> doubled_side_markings(const std::vector<int>& cells,
                                                              int k, bool left) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t r = 0; r < cells.size(); ++r)
    if (left == (cells[r] <= k)) p.push_back({2 * cells[r] + 1, 2 * (int)(r + 1) + 1});
  return p;
}

inline Bigrade bigrade_gen_a(const GridDiagram& hd, int k, const GenA& x) {
  auto p = doubled_gen_points(x.points());
  auto xm = doubled_side_markings(hd.xCells, k, true);
  auto om = doubled_side_markings(hd.oCells, k, true);
  return {southwest_pairs(xm, p) - southwest_pairs(om, p),
          southwest_pairs(p, p) - 2 * southwest_pairs(om, p)};
}
// marking rows on the left half, as lines y = r + 1/2
inline std::vector<int> side_marking_rows(const std::vector<int>& cells, int k) {
  std::vector<int> rows;
  for (std::size_t r = 0; r < cells.size(); ++r)
    if (cells[r] <= k) rows.push_back((int)r + 1);
  return rows;
}
inline Bigrade bigrade_algebra_cut(const GridDiagram& hd, int k, const StrandsTriple& a) {
  int lx = line_transits(a, side_marking_rows(hd.xCells, k));
  int lo = line_transits(a, side_marking_rows(hd.oCells, k));
  return {lx - lo, a.cr() - 2 * lo};
}
inline Bigrade bigrade_gen_d(const GridDiagram& hd, int k, const GenD& x) {
  // any extension works; fill the left columns with the unused heights in
  // increasing order
  auto ext = x.points();
  auto comp = x.complement();
  for (int j = 1; j <= k; ++j) ext.push_back({j, comp[j - 1]});
  auto p = doubled_gen_points(x.points());
  auto full = doubled_gen_points(ext);
  auto xm = doubled_markings(hd.xCells), om = doubled_markings(hd.oCells);
  return {southwest_pairs(xm, p) - southwest_pairs(om, p),
          southwest_pairs(full, p) - 2 * southwest_pairs(om, p)};
}
inline Bigrade bigrade_cpd(const GridDiagram& hd, int k, const CPDGen& g) {
  return bigrade_algebra_cut(hd, k, g.a) + bigrade_gen_d(hd, k, g.x);
}

// ------------------------------------------------------------ the pairing
// full generator from two halves with disjoint images
inline PlanarGenerator join_generators(const GenA& a, const GenD& d) {
  int N = a.N;
  std::vector<int> colOfHeight(N + 1, 0);
  for (auto& [c, h] : a.points()) colOfHeight[h] = c;
  for (auto& [c, h] : d.points()) colOfHeight[h] = c;
  Perm w(N);
  for (int h = 1; h <= N; ++h) w[N - h] = colOfHeight[h] - 1;
  return {w};
}
inline std::pair<GenA, GenD> split_generator(const PlanarGenerator& x, int k) {
  int N = x.n();
  GenA a{N, k, std::vector<int>(k)};
  GenD d{N, k, std::vector<int>(N - k)};
  for (int h = 1; h <= N; ++h) {
    int c = x.col(h);
    if (c <= k)
      a.iota[c - 1] = h;
    else
      d.iota[c - k - 1] = h;
  }
  return {a, d};
}

// reduce a pure tensor of a CPA element with a CPD element to the planar
// complex: slide the algebra part left through the CPA action
inline GridElt tensor_reduce(const CPAModule& mod, const CPAElt& left, const CPDElt& right) {
  GridElt out;
  for (auto& [g, c] : right.terms) {
    CPAElt acted = mod.act(left, AElt(g.a));
    for (auto& [ga, ca] : acted.terms) {
      if (ga.image() != g.x.complement()) continue;  // idempotent mismatch
      out.add(join_generators(ga, g.x), ca * c);
    }
  }
  return out;
}

inline Report pairing_lot2(const GridDiagram& hd, int k) {
  Report rep;
  int N = hd.n;
  CPAModule mod(hd, k);
  rep.absorb(mod.buildReport, "module build: ");
  std::size_t pairs = 0;
  for (auto& x : grid_generators(N)) {
    auto [xa, xd] = split_generator(x, k);
    rep.expect(join_generators(xa, xd) == x, "split/join fails to invert");
    ++pairs;
    // bigrading splits additively
    Bigrade whole = bigrade_generator(hd, x);
    Bigrade glued = bigrade_gen_a(hd, k, xa) + bigrade_gen_d(hd, k, xd);
    rep.expect(whole == glued, "bigrade fails to split across the cut");
    // differential: planar rectangles match the glued differential
    GridElt lhs = cp_diff(hd, x);
    CPDElt xdElt = cpd_pair(AElt(idempotent_gen(N, xd.complement())), xd);
    GridElt rhs = tensor_reduce(mod, cpa_diff(hd, xa), xdElt) +
                  tensor_reduce(mod, CPAElt(xa), cpd_diff(hd, k, xdElt));
    rep.expect((lhs + rhs).is_zero(), "differential fails to match across the cut");
  }
  rep.expect(pairs > 0, "no generators");
  return rep;
}

}  // namespace cornered
