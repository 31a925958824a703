#pragma once
// The unified boxed strand-diagram engine: boundary-slot configurations,
// interleaving crossing counts, gluing products with double-crossings-set-
// to-zero, crossing-resolution differentials; instantiates the nilCoxeter
// sequential 2-algebra.
#include <array>
#include <cassert>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "cornered/coeffs.hpp"

namespace cornered {

enum class Edge : int { Bottom = 0, Right = 1, Top = 2, Left = 3 };

// A slot label: zone tag (the dotted-line side for the corner algebras)
// plus a key (height / slot number). Only occupied slots are stored.
struct SlotLabel {
  int zone = 0;
  int key = 0;
  auto operator<=>(const SlotLabel&) const = default;
};

struct EndRef {
  int edge = 0;  // Edge as int
  int idx = 0;   // index into that edge's slot list
  auto operator<=>(const EndRef&) const = default;
};

// A box diagram: ordered occupied slots per edge (Bottom/Top stored
// left-to-right, Left/Right stored bottom-to-top) and a perfect matching
// of the occupied slots. Crossing number is the number of strand pairs
// whose endpoints interleave in the counterclockwise boundary cycle
// (Bottom left->right, Right bottom->top, Top right->left, Left
// top->bottom).
struct BoxDiagram {
  std::array<std::vector<SlotLabel>, 4> slots;
  std::vector<std::pair<EndRef, EndRef>> strands;

  const std::vector<SlotLabel>& edge(Edge e) const { return slots[(int)e]; }
  std::vector<SlotLabel>& edge(Edge e) { return slots[(int)e]; }
  const SlotLabel& at(EndRef r) const { return slots[r.edge][r.idx]; }

  // position in the counterclockwise boundary cycle
  int cyc(EndRef r) const {
    int nb = slots[0].size(), nr = slots[1].size(), nt = slots[2].size(), nl = slots[3].size();
    switch ((Edge)r.edge) {
      case Edge::Bottom: return r.idx;
      case Edge::Right: return nb + r.idx;
      case Edge::Top: return nb + nr + (nt - 1 - r.idx);
      case Edge::Left: return nb + nr + nt + (nl - 1 - r.idx);
    }
    return 0;
  }

  void normalize() {
    for (auto& s : strands)
      if (cyc(s.first) > cyc(s.second)) std::swap(s.first, s.second);
    std::sort(strands.begin(), strands.end(),
              [&](auto& a, auto& b) { return cyc(a.first) < cyc(b.first); });
  }

  auto operator<=>(const BoxDiagram&) const = default;

  bool interleaved(const std::pair<EndRef, EndRef>& a,
                   const std::pair<EndRef, EndRef>& b) const {
    int a1 = cyc(a.first), a2 = cyc(a.second);
    if (a1 > a2) std::swap(a1, a2);
    int b1 = cyc(b.first), b2 = cyc(b.second);
    bool in1 = (b1 > a1 && b1 < a2), in2 = (b2 > a1 && b2 < a2);
    return in1 != in2;
  }

  int crossing_count() const {
    int c = 0;
    for (std::size_t i = 0; i < strands.size(); ++i)
      for (std::size_t j = i + 1; j < strands.size(); ++j)
        if (interleaved(strands[i], strands[j])) ++c;
    return c;
  }

  std::string str() const {
    static const char* en[4] = {"B", "R", "T", "L"};
    std::ostringstream os;
    bool first = true;
    for (auto& s : strands) {
      if (!first) os << " ";
      first = false;
      auto pr = [&](EndRef r) {
        os << en[r.edge] << at(r).key;
        if (at(r).zone) os << "'" << at(r).zone;
      };
      pr(s.first);
      os << "-";
      pr(s.second);
    }
    return first ? "(empty)" : os.str();
  }
};

inline int crossing_count(const BoxDiagram& d) { return d.crossing_count(); }

enum class GlueDir { Horizontal, Vertical };

// Glue two box diagrams along an interface edge (Right of a / Left of b for
// horizontal, Top of a / Bottom of b for vertical). Returns nullopt when the
// occupied interface slots disagree, when a closed loop would be created, or
// when the crossing counts fail to add exactly (double crossings -> zero).
inline std::optional<BoxDiagram> glue(const BoxDiagram& a, const BoxDiagram& b,
                                      GlueDir dir) {
  Edge ia = dir == GlueDir::Horizontal ? Edge::Right : Edge::Top;
  Edge ib = dir == GlueDir::Horizontal ? Edge::Left : Edge::Bottom;
  if (a.edge(ia) != b.edge(ib)) return std::nullopt;
  std::size_t nif = a.edge(ia).size();

  BoxDiagram r;
  // composite slot lists and endpoint remapping
  // remap[side][edge][idx] -> optional composite EndRef (nullopt = interface)
  auto place = [&](Edge e, const std::vector<SlotLabel>& v) {
    int base = r.edge(e).size();
    for (auto& s : v) r.edge(e).push_back(s);
    return base;
  };
  std::array<std::array<int, 4>, 2> base{};  // offsets; -1 marks interface
  for (auto& row : base) row.fill(-1);
  if (dir == GlueDir::Horizontal) {
    base[0][(int)Edge::Bottom] = place(Edge::Bottom, a.edge(Edge::Bottom));
    base[1][(int)Edge::Bottom] = place(Edge::Bottom, b.edge(Edge::Bottom));
    base[0][(int)Edge::Top] = place(Edge::Top, a.edge(Edge::Top));
    base[1][(int)Edge::Top] = place(Edge::Top, b.edge(Edge::Top));
    base[0][(int)Edge::Left] = place(Edge::Left, a.edge(Edge::Left));
    base[1][(int)Edge::Right] = place(Edge::Right, b.edge(Edge::Right));
  } else {
    base[0][(int)Edge::Left] = place(Edge::Left, a.edge(Edge::Left));
    base[1][(int)Edge::Left] = place(Edge::Left, b.edge(Edge::Left));
    base[0][(int)Edge::Right] = place(Edge::Right, a.edge(Edge::Right));
    base[1][(int)Edge::Right] = place(Edge::Right, b.edge(Edge::Right));
    base[0][(int)Edge::Bottom] = place(Edge::Bottom, a.edge(Edge::Bottom));
    base[1][(int)Edge::Top] = place(Edge::Top, b.edge(Edge::Top));
  }
  auto is_interface = [&](int side, EndRef e) {
    return (side == 0 && (Edge)e.edge == ia) || (side == 1 && (Edge)e.edge == ib);
  };
  auto remap = [&](int side, EndRef e) -> EndRef {
    int off = base[side][e.edge];
    assert(off >= 0);
    return EndRef{e.edge, e.idx + off};
  };
  // chain strands through the interface
  const BoxDiagram* dia[2] = {&a, &b};
  // for each side, map slot -> strand index
  std::array<std::map<EndRef, std::pair<int, int>>, 2> ends;  // end -> (strand, which)
  for (int s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < dia[s]->strands.size(); ++i) {
      ends[s][dia[s]->strands[i].first] = {(int)i, 0};
      ends[s][dia[s]->strands[i].second] = {(int)i, 1};
    }
  std::array<std::vector<bool>, 2> used{std::vector<bool>(a.strands.size(), false),
                                        std::vector<bool>(b.strands.size(), false)};
  std::size_t consumed = 0;
  for (int s0 = 0; s0 < 2; ++s0)
    for (std::size_t i0 = 0; i0 < dia[s0]->strands.size(); ++i0) {
      if (used[s0][i0]) continue;
      // try to start a walk from a non-interface end of this strand
      auto st = dia[s0]->strands[i0];
      int start_which = -1;
      if (!is_interface(s0, st.first)) start_which = 0;
      else if (!is_interface(s0, st.second)) start_which = 1;
      if (start_which < 0) continue;  // interior segment, picked up by a walk
      // walk
      int side = s0;
      int strand = (int)i0;
      EndRef from = start_which == 0 ? st.first : st.second;
      EndRef cur = start_which == 0 ? st.second : st.first;
      used[side][strand] = true;
      ++consumed;
      while (is_interface(side, cur)) {
        int other = 1 - side;
        EndRef partner{(int)(other == 0 ? ia : ib), cur.idx};
        auto it = ends[other].find(partner);
        if (it == ends[other].end()) return std::nullopt;  // dangling
        side = other;
        strand = it->second.first;
        if (used[side][strand]) return std::nullopt;
        used[side][strand] = true;
        ++consumed;
        auto& ss = dia[side]->strands[strand];
        cur = it->second.second == 0 ? ss.second : ss.first;
      }
      r.strands.push_back({remap(s0, from), remap(side, cur)});
    }
  if (consumed != a.strands.size() + b.strands.size()) return std::nullopt;  // loop
  (void)nif;
  r.normalize();
  if (r.crossing_count() != a.crossing_count() + b.crossing_count())
    return std::nullopt;
  return r;
}

// All single-crossing resolutions of d that drop the crossing count by
// exactly one and satisfy the flavor admissibility predicate.
inline std::vector<BoxDiagram> resolutions(
    const BoxDiagram& d,
    const std::function<bool(const BoxDiagram&)>& admissible =
        [](const BoxDiagram&) { return true; }) {
  std::vector<BoxDiagram> out;
  int cr = d.crossing_count();
  for (std::size_t i = 0; i < d.strands.size(); ++i)
    for (std::size_t j = i + 1; j < d.strands.size(); ++j) {
      if (!d.interleaved(d.strands[i], d.strands[j])) continue;
      std::array<EndRef, 4> e = {d.strands[i].first, d.strands[i].second,
                                 d.strands[j].first, d.strands[j].second};
      // two regroupings of the four endpoints
      for (int variant = 0; variant < 2; ++variant) {
        BoxDiagram c = d;
        if (variant == 0) {
          c.strands[i] = {e[0], e[2]};
          c.strands[j] = {e[1], e[3]};
        } else {
          c.strands[i] = {e[0], e[3]};
          c.strands[j] = {e[1], e[2]};
        }
        c.normalize();
        if (c.crossing_count() == cr - 1 && admissible(c)) out.push_back(c);
      }
    }
  return out;
}

// ------------------------------------------------------------- permutations
using Perm = std::vector<int>;  // 0-based images

inline Perm id_perm(int m) {
  Perm w(m);
  std::iota(w.begin(), w.end(), 0);
  return w;
}
inline int inv_count(const Perm& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}
inline Perm compose(const Perm& after, const Perm& before) {
  Perm r(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) r[i] = after[before[i]];
  return r;
}
inline Perm transposition(int m, int i) {  // adjacent: swaps i, i+1 (0-based)
  Perm w = id_perm(m);
  std::swap(w[i], w[i + 1]);
  return w;
}
inline std::vector<Perm> all_perms(int m) {
  Perm w = id_perm(m);
  std::vector<Perm> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------- nilCoxeter
// Generator sigma_w of the nilCoxeter sequential 2-algebra piece N_m.
struct NilCoxGen {
  Perm w;
  auto operator<=>(const NilCoxGen&) const = default;

  int m() const { return (int)w.size(); }
  int cr() const { return inv_count(w); }

  BoxDiagram diagram() const {
    BoxDiagram d;
    for (int i = 0; i < m(); ++i) {
      d.edge(Edge::Bottom).push_back({0, i + 1});
      d.edge(Edge::Top).push_back({0, i + 1});
    }
    for (int i = 0; i < m(); ++i)
      d.strands.push_back({EndRef{(int)Edge::Bottom, i}, EndRef{(int)Edge::Top, w[i]}});
    d.normalize();
    return d;
  }
  static NilCoxGen from_diagram(const BoxDiagram& d) {
    Perm w(d.edge(Edge::Bottom).size());
    for (auto& s : d.strands) {
      EndRef b = s.first, t = s.second;
      if ((Edge)b.edge != Edge::Bottom) std::swap(b, t);
      w[b.idx] = t.idx;
    }
    return NilCoxGen{w};
  }
  std::string str() const {
    std::ostringstream os;
    os << "s(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
    os << ")";
    return os.str();
  }
};

using NilCox = Lin<NilCoxGen>;

// Vertical stacking product (a below b): sigma_w . sigma_w' = sigma_{w' o w}
// when lengths add, else zero.
inline NilCox nc_mul(const NilCoxGen& a, const NilCoxGen& b) {
  if (a.m() != b.m()) return NilCox::zero();
  Perm c = compose(b.w, a.w);
  if (inv_count(c) != a.cr() + b.cr()) return NilCox::zero();
  return NilCox(NilCoxGen{c});
}
inline NilCox nc_mul(const NilCox& a, const NilCox& b) {
  return bilinear(a, b, [](const NilCoxGen& x, const NilCoxGen& y) { return nc_mul(x, y); });
}

// Horizontal 2-algebra concatenation N_m (x) N_n -> N_{m+n}:
// sigma_i (x) sigma_j -> sigma_i sigma_{m+j} (first factor on the low slots).
inline NilCoxGen concat_2algebra(const NilCoxGen& a, const NilCoxGen& b) {
  Perm w = a.w;
  for (int v : b.w) w.push_back(v + a.m());
  return NilCoxGen{w};
}
inline NilCox nc_star(const NilCox& a, const NilCox& b) {
  return bilinear(a, b, [](const NilCoxGen& x, const NilCoxGen& y) {
    return NilCox(concat_2algebra(x, y));
  });
}

inline bool nc_admissible(const BoxDiagram& d) {
  for (auto& s : d.strands) {
    Edge e1 = (Edge)s.first.edge, e2 = (Edge)s.second.edge;
    if (!((e1 == Edge::Bottom && e2 == Edge::Top) || (e1 == Edge::Top && e2 == Edge::Bottom)))
      return false;  // no caps or cups in this flavor
  }
  return true;
}

inline NilCox nc_diff(const NilCoxGen& g) {
  NilCox out;
  for (auto& d : resolutions(g.diagram(), nc_admissible))
    out.add(NilCoxGen::from_diagram(d), Poly::one());
  return out;
}
inline NilCox nc_diff(const NilCox& x) {
  return x.mapped([](const NilCoxGen& g) { return nc_diff(g); });
}

inline std::vector<NilCoxGen> nc_basis(int m) {
  std::vector<NilCoxGen> out;
  for (auto& w : all_perms(m)) out.push_back(NilCoxGen{w});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<int, std::size_t> nc_homology(int m) {
  auto basis = nc_basis(m);
  return graded_homology<NilCoxGen>(
      basis, [](const NilCoxGen& g) { return g.cr(); },
      [](const NilCoxGen& g) { return nc_diff(g); });
}

}  // namespace cornered
