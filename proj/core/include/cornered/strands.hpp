#pragma once
// The strands algebra A(N,k)/A(N), the top/bottom algebra-modules T(N)/B(N),
// their generators and relation suites, the tensor over the nilCoxeter
// 2-algebra, and the top-bottom split/merge reconstruction isomorphism.
#include "cornered/diagrams.hpp"
#include "cornered/report.hpp"

namespace cornered {

// ------------------------------------------------------------ subsets helper
inline std::vector<std::vector<int>> all_subsets(int N, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= N; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}
inline std::vector<std::vector<int>> all_subsets(int N) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= N; ++k)
    for (auto& s : all_subsets(N, k)) out.push_back(s);
  return out;
}

// ------------------------------------------------------------- StrandsTriple
// A basis element (S, T, phi) of A(N): phi a bijection S -> T with
// i <= phi(i), stored as the sorted pair list {(i, phi(i))}.
struct StrandsTriple {
  int N = 0;
  std::vector<std::pair<int, int>> ph;  // sorted by source
  auto operator<=>(const StrandsTriple&) const = default;

  int k() const { return (int)ph.size(); }
  std::vector<int> S() const {
    std::vector<int> s;
    for (auto& p : ph) s.push_back(p.first);
    return s;
  }
  std::vector<int> T() const {
    std::vector<int> t;
    for (auto& p : ph) t.push_back(p.second);
    std::sort(t.begin(), t.end());
    return t;
  }
  bool valid() const {
    std::set<int> src, dst;
    for (auto& p : ph) {
      if (p.first < 1 || p.second > N || p.first > p.second) return false;
      src.insert(p.first);
      dst.insert(p.second);
    }
    return (int)src.size() == k() && (int)dst.size() == k();
  }

  BoxDiagram diagram() const {
    BoxDiagram d;
    auto s = S(), t = T();
    for (int v : s) d.edge(Edge::Left).push_back({0, v});
    for (int v : t) d.edge(Edge::Right).push_back({0, v});
    auto idxL = [&](int v) { return (int)(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
    auto idxR = [&](int v) { return (int)(std::lower_bound(t.begin(), t.end(), v) - t.begin()); };
    for (auto& p : ph)
      d.strands.push_back({EndRef{(int)Edge::Left, idxL(p.first)},
                           EndRef{(int)Edge::Right, idxR(p.second)}});
    d.normalize();
    return d;
  }
  static StrandsTriple from_diagram(int N, const BoxDiagram& d) {
    StrandsTriple a;
    a.N = N;
    for (auto& s : d.strands) {
      EndRef l = s.first, r = s.second;
      if ((Edge)l.edge != Edge::Left) std::swap(l, r);
      a.ph.push_back({d.edge(Edge::Left)[l.idx].key, d.edge(Edge::Right)[r.idx].key});
    }
    std::sort(a.ph.begin(), a.ph.end());
    return a;
  }
  int cr() const { return diagram().crossing_count(); }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    auto s = S(), t = T();
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}->{";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "}: ";
    for (std::size_t i = 0; i < ph.size(); ++i)
      os << (i ? ", " : "") << ph[i].first << "->" << ph[i].second;
    return os.str();
  }
};

using AElt = Lin<StrandsTriple>;

inline bool strands_admissible(int N, const BoxDiagram& d) {
  for (auto& s : d.strands) {
    EndRef a = s.first, b = s.second;
    if ((Edge)a.edge == (Edge)b.edge) return false;
    if ((Edge)a.edge != Edge::Left) std::swap(a, b);
    if ((Edge)a.edge != Edge::Left || (Edge)b.edge != Edge::Right) return false;
    if (d.at(a).key > d.at(b).key) return false;
  }
  (void)N;
  return true;
}

inline AElt strands_mul(const StrandsTriple& a, const StrandsTriple& b) {
  if (a.N != b.N) return AElt::zero();
  auto g = glue(a.diagram(), b.diagram(), GlueDir::Horizontal);
  if (!g) return AElt::zero();
  return AElt(StrandsTriple::from_diagram(a.N, *g));
}
inline AElt strands_mul(const AElt& a, const AElt& b) {
  return bilinear(a, b, [](auto& x, auto& y) { return strands_mul(x, y); });
}

inline AElt strands_diff(const StrandsTriple& a) {
  AElt out;
  for (auto& d : resolutions(a.diagram(),
                             [&](const BoxDiagram& c) { return strands_admissible(a.N, c); }))
    out.add(StrandsTriple::from_diagram(a.N, d), Poly::one());
  return out;
}
inline AElt strands_diff(const AElt& a) {
  return a.mapped([](auto& g) { return strands_diff(g); });
}

inline std::vector<StrandsTriple> strands_basis(int N, int k) {
  std::vector<StrandsTriple> out;
  for (auto& S : all_subsets(N, k))
    for (auto& T : all_subsets(N, k)) {
      // all bijections S->T with i <= phi(i)
      Perm p = id_perm(k);
      do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = S[i] <= T[p[i]];
        if (!ok) continue;
        StrandsTriple a;
        a.N = N;
        for (int i = 0; i < k; ++i) a.ph.push_back({S[i], T[p[i]]});
        std::sort(a.ph.begin(), a.ph.end());
        out.push_back(a);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  std::sort(out.begin(), out.end());
  return out;
}
inline std::vector<StrandsTriple> strands_basis(int N) {
  std::vector<StrandsTriple> out;
  for (int k = 0; k <= N; ++k)
    for (auto& a : strands_basis(N, k)) out.push_back(a);
  return out;
}

inline StrandsTriple idempotent_gen(int N, const std::vector<int>& S) {
  StrandsTriple a;
  a.N = N;
  for (int v : S) a.ph.push_back({v, v});
  return a;
}
inline AElt idempotent(int N, const std::vector<int>& S) {
  return AElt(idempotent_gen(N, S));
}

// rho_{i,j}: the sum of all triples with phi(i)=j and phi(r)=r elsewhere.
inline AElt chord(int N, int i, int j) {
  if (!(1 <= i && i < j && j <= N)) throw std::invalid_argument("chord: need 1<=i<j<=N");
  AElt out;
  for (auto& R : all_subsets(N)) {  // R = fixed strands; i notin R, j notin R
    if (std::binary_search(R.begin(), R.end(), i)) continue;
    if (std::binary_search(R.begin(), R.end(), j)) continue;
    StrandsTriple a;
    a.N = N;
    a.ph.push_back({i, j});
    for (int v : R) a.ph.push_back({v, v});
    std::sort(a.ph.begin(), a.ph.end());
    out.add(a, Poly::one());
  }
  return out;
}
// projection of rho_{i,j} to A(N,k)
inline AElt chord_k(int N, int k, int i, int j) {
  AElt out;
  for (auto& [g, c] : chord(N, i, j).terms)
    if (g.k() == k) out.add(g, c);
  return out;
}
inline AElt unit_A(int N) {
  AElt out;
  for (auto& S : all_subsets(N)) out.add(idempotent_gen(N, S), Poly::one());
  return out;
}

// rho of a consistent set of chords: phi moves every i_r to j_r.
inline AElt consistent_chord_element(int N, std::vector<std::pair<int, int>> chords) {
  std::set<int> starts, ends;
  for (auto& [i, j] : chords) {
    if (!(1 <= i && i < j && j <= N)) throw std::invalid_argument("bad chord");
    if (!starts.insert(i).second || !ends.insert(j).second)
      throw std::invalid_argument("inconsistent chord set");
  }
  AElt out;
  std::vector<int> touched;
  for (auto& [i, j] : chords) {
    touched.push_back(i);
    touched.push_back(j);
  }
  for (auto& R : all_subsets(N)) {
    bool clash = false;
    for (int v : touched)
      if (std::binary_search(R.begin(), R.end(), v)) clash = true;
    if (clash) continue;
    StrandsTriple a;
    a.N = N;
    for (auto& p : chords) a.ph.push_back(p);
    for (int v : R) a.ph.push_back({v, v});
    std::sort(a.ph.begin(), a.ph.end());
    out.add(a, Poly::one());
  }
  return out;
}

// ------------------------------------------------------------------- TopGen
// Basis element (S,T,psi).sigma_w of T(N)_m: strands psi(t) -> t with
// psi(t) <= t, free strands (S minus Im psi) exiting at the Top edge, w the
// nilCoxeter decoration. Geometric normal form: the free strand with k-th
// smallest start occupies the Top slot m-1-w(k) (slot order reversed
// relative to the abstract nilCoxeter slot numbering; this is the unique
// convention under which crossing counts are inversion-additive, and it is
// conformance-tested by the relation suites).
struct TopGen {
  int N = 0;
  std::vector<std::pair<int, int>> psi;  // (psi(t), t) sorted by second
  std::vector<int> freeS;                // sorted free starts
  Perm w;                                // size m = |freeS|
  auto operator<=>(const TopGen&) const = default;

  int m() const { return (int)freeS.size(); }
  int k() const { return (int)psi.size() + m(); }
  std::vector<int> S() const {
    std::vector<int> s = freeS;
    for (auto& p : psi) s.push_back(p.first);
    std::sort(s.begin(), s.end());
    return s;
  }
  std::vector<int> T() const {
    std::vector<int> t;
    for (auto& p : psi) t.push_back(p.second);
    std::sort(t.begin(), t.end());
    return t;
  }

  BoxDiagram diagram() const {
    BoxDiagram d;
    auto s = S(), t = T();
    for (int v : s) d.edge(Edge::Left).push_back({0, v});
    for (int v : t) d.edge(Edge::Right).push_back({0, v});
    for (int j = 1; j <= m(); ++j) d.edge(Edge::Top).push_back({0, j});
    auto idxL = [&](int v) { return (int)(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
    auto idxR = [&](int v) { return (int)(std::lower_bound(t.begin(), t.end(), v) - t.begin()); };
    for (auto& p : psi)
      d.strands.push_back({EndRef{(int)Edge::Left, idxL(p.first)},
                           EndRef{(int)Edge::Right, idxR(p.second)}});
    for (int r = 0; r < m(); ++r)
      d.strands.push_back({EndRef{(int)Edge::Left, idxL(freeS[r])},
                           EndRef{(int)Edge::Top, m() - 1 - w[r]}});
    d.normalize();
    return d;
  }
  static TopGen from_diagram(int N, const BoxDiagram& d) {
    TopGen g;
    g.N = N;
    int m = (int)d.edge(Edge::Top).size();
    std::vector<std::pair<int, int>> frees;  // (start key, top idx)
    for (auto& s : d.strands) {
      EndRef a = s.first, b = s.second;
      if ((Edge)a.edge != Edge::Left) std::swap(a, b);
      if ((Edge)b.edge == Edge::Right)
        g.psi.push_back({d.edge(Edge::Left)[a.idx].key, d.edge(Edge::Right)[b.idx].key});
      else
        frees.push_back({d.edge(Edge::Left)[a.idx].key, b.idx});
    }
    std::sort(g.psi.begin(), g.psi.end(),
              [](auto& x, auto& y) { return x.second < y.second; });
    std::sort(frees.begin(), frees.end());
    g.w.resize(m);
    for (int r = 0; r < m; ++r) {
      g.freeS.push_back(frees[r].first);
      g.w[r] = m - 1 - frees[r].second;
    }
    return g;
  }
  int cr() const { return diagram().crossing_count(); }

  std::string str() const {
    std::ostringstream os;
    auto s = S(), t = T();
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}->{";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "}: ";
    for (std::size_t i = 0; i < psi.size(); ++i)
      os << (i ? ", " : "") << psi[i].first << "->" << psi[i].second;
    os << " | sigma=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
    os << ")";
    return os.str();
  }
};

using TElt = Lin<TopGen>;

inline bool top_admissible(const BoxDiagram& d) {
  for (auto& s : d.strands) {
    EndRef a = s.first, b = s.second;
    if ((Edge)a.edge == (Edge)b.edge) return false;
    if ((Edge)a.edge != Edge::Left) std::swap(a, b);
    if ((Edge)a.edge != Edge::Left) return false;
    if ((Edge)b.edge == Edge::Right && d.at(a).key > d.at(b).key) return false;
    if ((Edge)b.edge != Edge::Right && (Edge)b.edge != Edge::Top) return false;
  }
  return true;
}

// Horizontal module-algebra product T(N,k)_m (x) T(N,k-m)_n -> T(N,k)_{m+n}.
inline TElt top_mul(const TopGen& a, const TopGen& b) {
  if (a.N != b.N) return TElt::zero();
  auto g = glue(a.diagram(), b.diagram(), GlueDir::Horizontal);
  if (!g) return TElt::zero();
  return TElt(TopGen::from_diagram(a.N, *g));
}
inline TElt top_mul(const TElt& a, const TElt& b) {
  return bilinear(a, b, [](auto& x, auto& y) { return top_mul(x, y); });
}

// Right nilCoxeter action t . sigma_u (free right-module structure).
inline TElt top_act(const TopGen& t, const NilCoxGen& u) {
  if ((int)u.w.size() != t.m()) return TElt::zero();
  Perm c = compose(u.w, t.w);
  if (inv_count(c) != inv_count(t.w) + u.cr()) return TElt::zero();
  TopGen r = t;
  r.w = c;
  return TElt(r);
}
inline TElt top_act(const TElt& t, const NilCox& u) {
  return bilinear(t, u, [](auto& x, auto& y) { return top_act(x, y); });
}

inline TElt top_diff(const TopGen& a) {
  TElt out;
  for (auto& d : resolutions(a.diagram(), top_admissible))
    out.add(TopGen::from_diagram(a.N, d), Poly::one());
  return out;
}
inline TElt top_diff(const TElt& a) {
  return a.mapped([](auto& g) { return top_diff(g); });
}

inline std::vector<TopGen> top_basis(int N, int k, int m) {
  std::vector<TopGen> out;
  if (m < 0 || m > k) return out;
  for (auto& S : all_subsets(N, k))
    for (auto& T : all_subsets(N, k - m)) {
      // injections psi: T -> S with psi(t) <= t, image determines frees
      std::vector<int> idx(T.size());
      std::function<void(std::size_t, std::vector<std::pair<int, int>>&, std::set<int>&)> rec =
          [&](std::size_t pos, std::vector<std::pair<int, int>>& acc, std::set<int>& used) {
            if (pos == T.size()) {
              TopGen g;
              g.N = N;
              g.psi = acc;
              for (int v : S)
                if (!used.count(v)) g.freeS.push_back(v);
              for (auto& p : all_perms(m)) {
                g.w = p;
                out.push_back(g);
              }
              return;
            }
            for (int s : S)
              if (s <= T[pos] && !used.count(s)) {
                acc.push_back({s, T[pos]});
                used.insert(s);
                rec(pos + 1, acc, used);
                used.erase(s);
                acc.pop_back();
              }
          };
      std::vector<std::pair<int, int>> acc;
      std::set<int> used;
      rec(0, acc, used);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline TopGen top_idempotent_gen(int N, const std::vector<int>& S) {
  TopGen g;
  g.N = N;
  for (int v : S) g.psi.push_back({v, v});
  return g;
}
// half-chord mu_i: free strand at i, all else horizontal.
inline TElt half_chord_top(int N, int i) {
  TElt out;
  for (auto& T : all_subsets(N)) {
    if (std::binary_search(T.begin(), T.end(), i)) continue;
    TopGen g;
    g.N = N;
    for (int v : T) g.psi.push_back({v, v});
    g.freeS = {i};
    g.w = {0};
    out.add(g, Poly::one());
  }
  return out;
}
// top chord rho_{i,j} inside T(N)_0
inline TElt top_chord(int N, int i, int j) {
  TElt out;
  for (auto& [g, c] : chord(N, i, j).terms) {
    TopGen t;
    t.N = N;
    for (auto& p : g.ph) t.psi.push_back({p.first, p.second});
    std::sort(t.psi.begin(), t.psi.end(), [](auto& x, auto& y) { return x.second < y.second; });
    out.add(t, c);
  }
  return out;
}
inline TElt top_of_triple(const StrandsTriple& a) {
  TopGen t;
  t.N = a.N;
  for (auto& p : a.ph) t.psi.push_back({p.first, p.second});
  std::sort(t.psi.begin(), t.psi.end(), [](auto& x, auto& y) { return x.second < y.second; });
  return TElt(t);
}

// ---------------------------------------------------------------- BottomGen
// Basis element sigma_w.(S,T,phi) of B(N)_m: strands s -> phi(s) with
// s <= phi(s), m strands entering from the Bottom edge and ending at the
// targets T minus Im phi; Bottom slot q connects to the w(m-1-q)-th entering
// target (the mirror of the TopGen convention).
struct BottomGen {
  int N = 0;
  std::vector<std::pair<int, int>> phi;  // (s, phi(s)) sorted by first
  std::vector<int> enterT;               // sorted entering targets
  Perm w;
  auto operator<=>(const BottomGen&) const = default;

  int m() const { return (int)enterT.size(); }
  std::vector<int> S() const {
    std::vector<int> s;
    for (auto& p : phi) s.push_back(p.first);
    return s;
  }
  std::vector<int> T() const {
    std::vector<int> t = enterT;
    for (auto& p : phi) t.push_back(p.second);
    std::sort(t.begin(), t.end());
    return t;
  }

  BoxDiagram diagram() const {
    BoxDiagram d;
    auto s = S(), t = T();
    for (int v : s) d.edge(Edge::Left).push_back({0, v});
    for (int v : t) d.edge(Edge::Right).push_back({0, v});
    for (int j = 1; j <= m(); ++j) d.edge(Edge::Bottom).push_back({0, j});
    auto idxL = [&](int v) { return (int)(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
    auto idxR = [&](int v) { return (int)(std::lower_bound(t.begin(), t.end(), v) - t.begin()); };
    for (auto& p : phi)
      d.strands.push_back({EndRef{(int)Edge::Left, idxL(p.first)},
                           EndRef{(int)Edge::Right, idxR(p.second)}});
    for (int q = 0; q < m(); ++q)
      d.strands.push_back({EndRef{(int)Edge::Bottom, q},
                           EndRef{(int)Edge::Right, idxR(enterT[w[m() - 1 - q]])}});
    d.normalize();
    return d;
  }
  static BottomGen from_diagram(int N, const BoxDiagram& d) {
    BottomGen g;
    g.N = N;
    int m = (int)d.edge(Edge::Bottom).size();
    std::vector<std::pair<int, int>> ent;  // (bottom idx, target key)
    for (auto& s : d.strands) {
      EndRef a = s.first, b = s.second;
      if ((Edge)b.edge != Edge::Right) std::swap(a, b);
      if ((Edge)a.edge == Edge::Left)
        g.phi.push_back({d.edge(Edge::Left)[a.idx].key, d.edge(Edge::Right)[b.idx].key});
      else
        ent.push_back({a.idx, d.edge(Edge::Right)[b.idx].key});
    }
    std::sort(g.phi.begin(), g.phi.end());
    for (auto& e : ent) g.enterT.push_back(e.second);
    std::sort(g.enterT.begin(), g.enterT.end());
    g.w.resize(m);
    for (auto& [q, key] : ent) {
      int rank = (int)(std::lower_bound(g.enterT.begin(), g.enterT.end(), key) -
                       g.enterT.begin());
      g.w[m - 1 - q] = rank;
    }
    return g;
  }
  int cr() const { return diagram().crossing_count(); }

  std::string str() const {
    std::ostringstream os;
    os << "sigma=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
    os << ") | ";
    auto s = S(), t = T();
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}->{";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "}: ";
    for (std::size_t i = 0; i < phi.size(); ++i)
      os << (i ? ", " : "") << phi[i].first << "->" << phi[i].second;
    return os.str();
  }
};

using BElt = Lin<BottomGen>;

inline bool bottom_admissible(const BoxDiagram& d) {
  for (auto& s : d.strands) {
    EndRef a = s.first, b = s.second;
    if ((Edge)a.edge == (Edge)b.edge) return false;
    if ((Edge)b.edge != Edge::Right) std::swap(a, b);
    if ((Edge)b.edge != Edge::Right) return false;
    if ((Edge)a.edge == Edge::Left && d.at(a).key > d.at(b).key) return false;
    if ((Edge)a.edge != Edge::Left && (Edge)a.edge != Edge::Bottom) return false;
  }
  return true;
}

inline BElt bottom_mul(const BottomGen& a, const BottomGen& b) {
  if (a.N != b.N) return BElt::zero();
  auto g = glue(a.diagram(), b.diagram(), GlueDir::Horizontal);
  if (!g) return BElt::zero();
  return BElt(BottomGen::from_diagram(a.N, *g));
}
inline BElt bottom_mul(const BElt& a, const BElt& b) {
  return bilinear(a, b, [](auto& x, auto& y) { return bottom_mul(x, y); });
}

// Left nilCoxeter action sigma_u . b.
inline BElt bottom_act(const NilCoxGen& u, const BottomGen& b) {
  if ((int)u.w.size() != b.m()) return BElt::zero();
  Perm c = compose(b.w, u.w);
  if (inv_count(c) != inv_count(b.w) + u.cr()) return BElt::zero();
  BottomGen r = b;
  r.w = c;
  return BElt(r);
}
inline BElt bottom_act(const NilCox& u, const BElt& b) {
  return bilinear(u, b, [](auto& x, auto& y) { return bottom_act(x, y); });
}

inline BElt bottom_diff(const BottomGen& a) {
  BElt out;
  for (auto& d : resolutions(a.diagram(), bottom_admissible))
    out.add(BottomGen::from_diagram(a.N, d), Poly::one());
  return out;
}
inline BElt bottom_diff(const BElt& a) {
  return a.mapped([](auto& g) { return bottom_diff(g); });
}

inline std::vector<BottomGen> bottom_basis(int N, int k, int m) {
  // k = |S|, entering count m, |T| = k+m
  std::vector<BottomGen> out;
  if (m < 0 || k + m > N) return out;
  for (auto& S : all_subsets(N, k))
    for (auto& T : all_subsets(N, k + m)) {
      std::function<void(std::size_t, std::vector<std::pair<int, int>>&, std::set<int>&)> rec =
          [&](std::size_t pos, std::vector<std::pair<int, int>>& acc, std::set<int>& used) {
            if (pos == S.size()) {
              BottomGen g;
              g.N = N;
              g.phi = acc;
              for (int v : T)
                if (!used.count(v)) g.enterT.push_back(v);
              for (auto& p : all_perms(m)) {
                g.w = p;
                out.push_back(g);
              }
              return;
            }
            for (int t : T)
              if (t >= S[pos] && !used.count(t)) {
                acc.push_back({S[pos], t});
                used.insert(t);
                rec(pos + 1, acc, used);
                used.erase(t);
                acc.pop_back();
              }
          };
      std::vector<std::pair<int, int>> acc;
      std::set<int> used;
      rec(0, acc, used);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline BottomGen bottom_idempotent_gen(int N, const std::vector<int>& S) {
  BottomGen g;
  g.N = N;
  for (int v : S) g.phi.push_back({v, v});
  return g;
}
// half-chord nu_j: strand entering from the bottom ending at height j.
inline BElt half_chord_bottom(int N, int j) {
  BElt out;
  for (auto& S : all_subsets(N)) {
    if (std::binary_search(S.begin(), S.end(), j)) continue;
    BottomGen g;
    g.N = N;
    for (int v : S) g.phi.push_back({v, v});
    g.enterT = {j};
    g.w = {0};
    out.add(g, Poly::one());
  }
  return out;
}
inline BElt bottom_chord(int N, int i, int j) {
  BElt out;
  for (auto& [g, c] : chord(N, i, j).terms) {
    BottomGen b;
    b.N = N;
    for (auto& p : g.ph) b.phi.push_back({p.first, p.second});
    out.add(b, c);
  }
  return out;
}

// ------------------------------------------------------------ TensorElement
// Class of t (x) b in T(N)_m (.) B(N')_m; canonical form carries the whole
// nilCoxeter decoration on the left (top) factor, b.w = id.
struct TensorGen {
  TopGen t;
  BottomGen b;
  auto operator<=>(const TensorGen&) const = default;
  std::string str() const { return t.str() + "  (.)  " + b.str(); }
};
using TBElt = Lin<TensorGen>;

inline TBElt tensor_canonical(const TopGen& t, const BottomGen& b) {
  if (t.m() != b.m()) return TBElt::zero();  // mismatched indices die
  // t (x) sigma_{b.w} b0  =  (t . sigma_{b.w}) (x) b0
  NilCoxGen s{b.w};
  TElt t2 = top_act(t, s);
  TBElt out;
  BottomGen b0 = b;
  b0.w = id_perm(b.m());
  for (auto& [g, c] : t2.terms) out.add(TensorGen{g, b0}, c);
  return out;
}
inline TBElt tensor_mul(const TensorGen& x, const TensorGen& y) {
  TBElt out;
  for (auto& [tt, ct] : top_mul(x.t, y.t).terms)
    for (auto& [bb, cb] : bottom_mul(x.b, y.b).terms)
      out += tensor_canonical(tt, bb).scaled(ct * cb);
  return out;
}
inline TBElt tensor_mul(const TBElt& x, const TBElt& y) {
  return bilinear(x, y, [](auto& a, auto& b) { return tensor_mul(a, b); });
}
inline TBElt tensor_diff(const TensorGen& x) {
  TBElt out;
  for (auto& [tt, c] : top_diff(x.t).terms) out += tensor_canonical(tt, x.b).scaled(c);
  for (auto& [bb, c] : bottom_diff(x.b).terms) out += tensor_canonical(x.t, bb).scaled(c);
  return out;
}
inline TBElt tensor_diff(const TBElt& x) {
  return x.mapped([](auto& g) { return tensor_diff(g); });
}

// --------------------------------------------------------------- merge/split
// merge: T(N)_m (.) B(N')_m -> A(N+N'), stacking the bottom factor above the
// top factor with heights shifted by N and chaining through the interface.
inline StrandsTriple merge(const TensorGen& x) {
  int N = x.t.N, N2 = x.b.N;
  BoxDiagram tb = x.t.diagram();
  BoxDiagram bb = x.b.diagram();
  for (auto& s : bb.edge(Edge::Left)) s.key += N;
  for (auto& s : bb.edge(Edge::Right)) s.key += N;
  auto g = glue(tb, bb, GlueDir::Vertical);
  if (!g) throw std::runtime_error("merge: crossing counts failed to add");
  return StrandsTriple::from_diagram(N + N2, *g);
}

inline TensorGen split(const StrandsTriple& a, int N) {
  int N2 = a.N - N;
  TensorGen x;
  x.t.N = N;
  x.b.N = N2;
  std::vector<std::pair<int, int>> crossing;  // (src<=N, dst>N)
  for (auto& p : a.ph) {
    if (p.second <= N)
      x.t.psi.push_back({p.first, p.second});
    else if (p.first > N)
      x.b.phi.push_back({p.first - N, p.second - N});
    else
      crossing.push_back(p);
  }
  std::sort(x.t.psi.begin(), x.t.psi.end(),
            [](auto& u, auto& v) { return u.second < v.second; });
  std::sort(x.b.phi.begin(), x.b.phi.end());
  std::sort(crossing.begin(), crossing.end());
  int m = (int)crossing.size();
  std::vector<int> dsts;
  for (auto& p : crossing) dsts.push_back(p.second - N);
  std::vector<int> sorted_d = dsts;
  std::sort(sorted_d.begin(), sorted_d.end());
  x.t.w.resize(m);
  for (int r = 0; r < m; ++r) {
    x.t.freeS.push_back(crossing[r].first);
    x.t.w[r] = (int)(std::lower_bound(sorted_d.begin(), sorted_d.end(), dsts[r]) -
                     sorted_d.begin());
  }
  x.b.enterT = sorted_d;
  x.b.w = id_perm(m);
  return x;
}

// ------------------------------------------------------------ relation suite
inline Report relation_suite_strands(int N) {
  Report rep;
  auto subsets = all_subsets(N);
  auto in = [](const std::vector<int>& S, int v) {
    return std::binary_search(S.begin(), S.end(), v);
  };
  auto with = [](std::vector<int> S, int v) {
    S.push_back(v);
    std::sort(S.begin(), S.end());
    return S;
  };
  auto eqA = [](const AElt& a, const AElt& b) { return (a + b).terms.empty(); };
  auto eqT = [](const TElt& a, const TElt& b) { return (a + b).terms.empty(); };
  auto eqB = [](const BElt& a, const BElt& b) { return (a + b).terms.empty(); };
  auto basis = strands_basis(N);
  AElt one = unit_A(N);

  // unit: sum of idempotents is a two-sided identity
  for (auto& a : basis) {
    rep.expect(eqA(strands_mul(one, AElt(a)), AElt(a)), "unit left fails on " + a.str());
    rep.expect(eqA(strands_mul(AElt(a), one), AElt(a)), "unit right fails on " + a.str());
  }
  // idempotent orthogonality
  for (auto& S : subsets)
    for (auto& T : subsets) {
      AElt p = strands_mul(idempotent(N, S), idempotent(N, T));
      if (S == T)
        rep.expect(eqA(p, idempotent(N, S)), "idempotent square fails");
      else
        rep.expect(p.terms.empty(), "distinct idempotents not orthogonal");
    }
  // chord absorption by idempotents
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      AElt r = chord(N, i, j);
      for (auto& S : subsets) {
        if (!in(S, i) || in(S, j))
          rep.expect(strands_mul(idempotent(N, S), r).terms.empty(),
                     "left idempotent kill fails");
        if (in(S, i) || !in(S, j))
          rep.expect(strands_mul(r, idempotent(N, S)).terms.empty(),
                     "right idempotent kill fails");
      }
      // slide past idempotents
      for (auto& S : subsets)
        if (!in(S, i) && !in(S, j))
          rep.expect(eqA(strands_mul(r, idempotent(N, with(S, j))),
                         strands_mul(idempotent(N, with(S, i)), r)),
                     "chord-idempotent slide fails");
    }
  // chord composition and commutation
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int l = j + 1; l <= N; ++l)
        for (auto& S : subsets)
          if (!in(S, j))
            rep.expect(
                eqA(strands_mul(strands_mul(idempotent(N, S), chord(N, i, j)), chord(N, j, l)),
                    strands_mul(idempotent(N, S), chord(N, i, l))),
                "chord composition fails");
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int l = 1; l <= N; ++l)
        for (int m2 = l + 1; m2 <= N; ++m2) {
          bool disjoint = (j < l) || (i < l && m2 < j);
          bool interleave = (i < l && l < j && j < m2);
          AElt x = strands_mul(chord(N, i, j), chord(N, l, m2));
          AElt y = strands_mul(chord(N, l, m2), chord(N, i, j));
          if (disjoint) rep.expect(eqA(x, y), "disjoint chords fail to commute");
          if (interleave) rep.expect(x.terms.empty(), "interleaved chords nonzero");
        }
  // differential: idempotents closed, chord boundary, d^2, Leibniz
  for (auto& S : subsets)
    rep.expect(strands_diff(idempotent(N, S)).terms.empty(), "d(idempotent) != 0");
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      AElt rhs;
      for (int l = i + 1; l < j; ++l)
        rhs += strands_mul(chord(N, l, j), chord(N, i, l));
      rep.expect(eqA(strands_diff(chord(N, i, j)), rhs), "chord boundary formula fails");
    }
  for (auto& a : basis)
    rep.expect(strands_diff(strands_diff(AElt(a))).terms.empty(), "d^2 != 0 on " + a.str());
  for (auto& a : basis)
    for (auto& b : basis) {
      AElt lhs = strands_diff(strands_mul(AElt(a), AElt(b)));
      AElt rhs = strands_mul(strands_diff(AElt(a)), AElt(b)) +
                 strands_mul(AElt(a), strands_diff(AElt(b)));
      rep.expect(eqA(lhs, rhs), "Leibniz fails on " + a.str() + " * " + b.str());
    }

  // ---- top module relations
  auto topI = [&](const std::vector<int>& S) { return TElt(top_idempotent_gen(N, S)); };
  for (int i = 1; i <= N; ++i) {
    TElt mu = half_chord_top(N, i);
    for (auto& S : subsets) {
      if (!in(S, i)) {
        rep.expect(top_mul(topI(S), mu).terms.empty(), "I*mu kill fails");
      } else {
        rep.expect(top_mul(mu, topI(S)).terms.empty(), "mu*I kill fails");
        std::vector<int> S2;
        for (int v : S)
          if (v != i) S2.push_back(v);
        rep.expect(eqT(top_mul(topI(S), mu), top_mul(mu, topI(S2))),
                   "mu-idempotent slide fails");
      }
    }
    // d(mu_i) = sum_{j>i} mu_j * rho_{i,j}
    TElt rhs;
    for (int j = i + 1; j <= N; ++j)
      rhs += top_mul(half_chord_top(N, j), top_chord(N, i, j));
    rep.expect(eqT(top_diff(mu), rhs), "mu boundary formula fails");
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      // I_S * rho_{i,j} * mu_j = I_S * mu_i   (j notin S)
      for (auto& S : subsets)
        if (!in(S, j))
          rep.expect(eqT(top_mul(top_mul(topI(S), top_chord(N, i, j)), half_chord_top(N, j)),
                         top_mul(topI(S), half_chord_top(N, i))),
                     "chord-into-mu absorption fails");
    }
  for (int i = 1; i <= N; ++i)
    for (int l = 1; l <= N; ++l)
      for (int m2 = l + 1; m2 <= N; ++m2) {
        if ((l < m2 && m2 < i) || (i < l)) {
          rep.expect(eqT(top_mul(half_chord_top(N, i), top_chord(N, l, m2)),
                         top_mul(top_chord(N, l, m2), half_chord_top(N, i))),
                     "mu-chord commutation fails");
        }
        if (l < i && i < m2)
          rep.expect(top_mul(top_chord(N, l, m2), half_chord_top(N, i)).terms.empty(),
                     "chord over mu not zero");
      }
  // mu_i * mu_j = (mu_j * mu_i) . sigma_1   (i < j)
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      NilCox s1 = NilCox(NilCoxGen{transposition(2, 0)});
      rep.expect(eqT(top_mul(half_chord_top(N, i), half_chord_top(N, j)),
                     top_act(top_mul(half_chord_top(N, j), half_chord_top(N, i)), s1)),
                 "mu twist relation fails");
    }
  // free right module structure, d^2, Leibniz over the top basis
  std::vector<TopGen> tbasis;
  for (int k = 0; k <= N; ++k)
    for (int m2 = 0; m2 <= k; ++m2)
      for (auto& g : top_basis(N, k, m2)) tbasis.push_back(g);
  for (auto& g : tbasis) {
    rep.expect(top_diff(top_diff(TElt(g))).terms.empty(), "top d^2 != 0 on " + g.str());
    // crossing count additivity: cr(basis) = cr(psi part) + inv(w)
    TopGen g0 = g;
    g0.w = id_perm(g.m());
    rep.expect(g.cr() == g0.cr() + inv_count(g.w), "crossing additivity fails on " + g.str());
    // free module: g = g0 . sigma_w
    rep.expect(eqT(TElt(g), top_act(g0, NilCoxGen{g.w})), "free-module form fails on " + g.str());
  }
  for (auto& g : tbasis)
    for (auto& u : all_perms(g.m())) {
      NilCoxGen sg{u};
      TElt lhs = top_diff(top_act(g, sg));
      TElt rhs = top_act(top_diff(TElt(g)), NilCox(sg)) + top_act(TElt(g), nc_diff(sg));
      rep.expect(eqT(lhs, rhs), "top action Leibniz fails");
    }

  // ---- bottom module mirrored relations
  auto botI = [&](const std::vector<int>& S) { return BElt(bottom_idempotent_gen(N, S)); };
  for (int j = 1; j <= N; ++j) {
    BElt nu = half_chord_bottom(N, j);
    for (auto& S : subsets) {
      if (!in(S, j)) {
        rep.expect(bottom_mul(nu, botI(S)).terms.empty(), "nu*I kill fails");
      } else {
        rep.expect(bottom_mul(botI(S), nu).terms.empty(), "I*nu kill fails");
        std::vector<int> S2;
        for (int v : S)
          if (v != j) S2.push_back(v);
        rep.expect(eqB(bottom_mul(nu, botI(S)), bottom_mul(botI(S2), nu)),
                   "nu-idempotent slide fails");
      }
    }
    // d(nu_j) = sum_{i<j} rho_{i,j} * nu_i
    BElt rhs;
    for (int i = 1; i < j; ++i)
      rhs += bottom_mul(bottom_chord(N, i, j), half_chord_bottom(N, i));
    rep.expect(eqB(bottom_diff(nu), rhs), "nu boundary formula fails");
  }
  // nu twist relation: nu_i * nu_j = sigma_1 . (nu_j * nu_i)   (i < j)
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      NilCox s1 = NilCox(NilCoxGen{transposition(2, 0)});
      rep.expect(eqB(bottom_mul(half_chord_bottom(N, i), half_chord_bottom(N, j)),
                     bottom_act(s1, bottom_mul(half_chord_bottom(N, j), half_chord_bottom(N, i)))),
                 "nu twist relation fails");
    }
  std::vector<BottomGen> bbasis;
  for (int k = 0; k <= N; ++k)
    for (int m2 = 0; m2 + k <= N; ++m2)
      for (auto& g : bottom_basis(N, k, m2)) bbasis.push_back(g);
  for (auto& g : bbasis) {
    rep.expect(bottom_diff(bottom_diff(BElt(g))).terms.empty(), "bottom d^2 != 0 on " + g.str());
    BottomGen g0 = g;
    g0.w = id_perm(g.m());
    rep.expect(g.cr() == g0.cr() + inv_count(g.w),
               "bottom crossing additivity fails on " + g.str());
    rep.expect(eqB(BElt(g), bottom_act(NilCoxGen{g.w}, g0)),
               "bottom free-module form fails on " + g.str());
  }
  for (auto& g : bbasis)
    for (auto& u : all_perms(g.m())) {
      NilCoxGen sg{u};
      BElt lhs = bottom_diff(bottom_act(sg, g));
      BElt rhs = bottom_act(NilCox(sg), bottom_diff(BElt(g))) + bottom_act(nc_diff(sg), BElt(g));
      rep.expect(eqB(lhs, rhs), "bottom action Leibniz fails");
    }
  return rep;
}

// linear extension of merge
inline AElt merge(const TBElt& x) {
  AElt out;
  for (auto& [g, c] : x.terms) out.add(merge(g), c);
  return out;
}

inline Report theorem_bnt_check(int N, int N2) {
  Report rep;
  auto eqA = [](const AElt& a, const AElt& b) { return (a + b).terms.empty(); };
  // canonical tensor basis: pairs (t, b) with matching m and b.w = id
  std::vector<TensorGen> tens;
  for (int k = 0; k <= N; ++k)
    for (int m = 0; m <= k; ++m)
      for (auto& t : top_basis(N, k, m))
        for (int k2 = 0; k2 + m <= N2; ++k2)
          for (auto& b : bottom_basis(N2, k2, m)) {
            if (b.w != id_perm(m)) continue;
            tens.push_back(TensorGen{t, b});
          }
  auto abasis = strands_basis(N + N2);
  rep.expect(tens.size() == abasis.size(),
             "tensor basis size " + std::to_string(tens.size()) + " != algebra basis size " +
                 std::to_string(abasis.size()));
  // merge is a bijection onto the algebra basis; split inverts it
  std::set<StrandsTriple> seen;
  for (auto& x : tens) {
    StrandsTriple a = merge(x);
    rep.expect(a.valid(), "merge produced invalid triple");
    rep.expect(seen.insert(a).second, "merge not injective at " + x.str());
    TensorGen back = split(a, N);
    rep.expect(back == x, "split(merge) != id at " + x.str());
    rep.expect(a.cr() == x.t.cr() + x.b.cr(), "merge crossing additivity fails");
  }
  for (auto& a : abasis) {
    TensorGen x = split(a, N);
    rep.expect(merge(x) == a, "merge(split) != id at " + a.str());
  }
  // differential intertwining on every tensor basis element
  for (auto& x : tens)
    rep.expect(eqA(merge(tensor_diff(x)), strands_diff(AElt(merge(x)))),
               "differential fails to intertwine at " + x.str());
  // product intertwining (all pairs if small, deterministic stride otherwise)
  std::size_t n = tens.size();
  std::size_t stride = std::max<std::size_t>(1, n * n / 4000);
  std::size_t counter = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (counter++ % stride) continue;
      AElt lhs = merge(tensor_mul(tens[i], tens[j]));
      AElt rhs = strands_mul(AElt(merge(tens[i])), AElt(merge(tens[j])));
      rep.expect(eqA(lhs, rhs),
                 "product fails to intertwine at " + tens[i].str() + " / " + tens[j].str());
    }
  return rep;
}

}  // namespace cornered
