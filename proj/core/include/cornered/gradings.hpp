#pragma once
// Noncommutative grading groups on interval multiplicity classes, the
// refined grading gr', boundary-multiplicity maps tau, amalgamated products,
// and Alexander/Maslov bigradings for marked-line contexts.
#include "cornered/strands.hpp"

namespace cornered {

// ------------------------------------------------------- MultiplicityClass
// An element of the relative homology of the interval with multiplicities on
// (i, i+1) for 1 <= i <= N-1, optionally extended by the half-open pieces
// [N, N+1/2) (top variant) and (1/2, 1] (bottom variant).
struct MultiplicityClass {
  int N = 0;
  std::vector<int> base;  // length N-1
  int topExtra = 0;       // multiplicity on (N, N+1/2); top variant only
  int bottomExtra = 0;    // multiplicity on (1/2, 1); bottom variant only
  auto operator<=>(const MultiplicityClass&) const = default;

  static MultiplicityClass zero(int N) {
    MultiplicityClass a;
    a.N = N;
    a.base.assign(std::max(0, N - 1), 0);
    return a;
  }
  static MultiplicityClass interval(int N, int i, int j) {  // [i, j], i <= j in [N]
    MultiplicityClass a = zero(N);
    for (int l = i; l < j; ++l) a.base[l - 1] += 1;
    return a;
  }
  bool is_zero() const {
    if (topExtra || bottomExtra) return false;
    for (int v : base)
      if (v) return false;
    return true;
  }
  friend MultiplicityClass operator+(const MultiplicityClass& a, const MultiplicityClass& b) {
    if (a.N != b.N) throw std::invalid_argument("multiplicity class size mismatch");
    MultiplicityClass r = a;
    for (std::size_t i = 0; i < r.base.size(); ++i) r.base[i] += b.base[i];
    r.topExtra += b.topExtra;
    r.bottomExtra += b.bottomExtra;
    return r;
  }
  friend MultiplicityClass operator-(const MultiplicityClass& a, const MultiplicityClass& b) {
    if (a.N != b.N) throw std::invalid_argument("multiplicity class size mismatch");
    MultiplicityClass r = a;
    for (std::size_t i = 0; i < r.base.size(); ++i) r.base[i] -= b.base[i];
    r.topExtra -= b.topExtra;
    r.bottomExtra -= b.bottomExtra;
    return r;
  }
  // local multiplicities just below / just above the point p in [N]
  int below(int p) const {
    if (p == 1) return bottomExtra;
    return base[p - 2];
  }
  int above(int p) const {
    if (p == N) return topExtra;
    return base[p - 1];
  }
  int total() const {
    int s = topExtra + bottomExtra;
    for (int v : base) s += v;
    return s;
  }
};

// Twice the average local multiplicity of alpha around the point p.
inline int mult_at_twice(const MultiplicityClass& a, int p) {
  if (p < 1 || p > a.N) throw std::invalid_argument("mult_at: point out of range");
  return a.below(p) + a.above(p);
}

// boundary coefficient of alpha at p: delta[i,j] = (pt j) - (pt i)
inline int delta_at(const MultiplicityClass& a, int p) { return a.below(p) - a.above(p); }

// Twice the bilinear pairing m(alpha, delta beta).
inline int m_pair_twice(const MultiplicityClass& alpha, const MultiplicityClass& beta) {
  int s = 0;
  for (int p = 1; p <= alpha.N; ++p) s += mult_at_twice(alpha, p) * delta_at(beta, p);
  return s;
}
// Twice m(alpha, S) for a point set S (each point with coefficient one).
inline int m_points_twice(const MultiplicityClass& alpha, const std::vector<int>& S) {
  int s = 0;
  for (int p : S) s += mult_at_twice(alpha, p);
  return s;
}

// ---------------------------------------------------------- GradingElement
// (k, alpha) with k in (1/2)Z stored doubled; group law
// (k1, a1)(k2, a2) = (k1 + k2 + m(a2, delta a1), a1 + a2).
struct GradingElement {
  int twiceK = 0;
  MultiplicityClass alpha;
  auto operator<=>(const GradingElement&) const = default;

  static GradingElement identity(int N) { return {0, MultiplicityClass::zero(N)}; }
  static GradingElement lambda(int N) { return {2, MultiplicityClass::zero(N)}; }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    if (twiceK % 2 == 0)
      os << twiceK / 2;
    else
      os << twiceK << "/2";
    os << ";";
    for (std::size_t i = 0; i < alpha.base.size(); ++i) os << (i ? "," : " ") << alpha.base[i];
    if (alpha.base.empty()) os << " ";
    if (alpha.topExtra) os << " |t:" << alpha.topExtra;
    if (alpha.bottomExtra) os << " |b:" << alpha.bottomExtra;
    os << ")";
    return os.str();
  }
};

inline GradingElement g_mul(const GradingElement& g1, const GradingElement& g2) {
  return {g1.twiceK + g2.twiceK + m_pair_twice(g2.alpha, g1.alpha), g1.alpha + g2.alpha};
}
inline GradingElement g_inv(const GradingElement& g) {
  MultiplicityClass neg = MultiplicityClass::zero(g.alpha.N) - g.alpha;
  // (k, a)(k', -a) = id  =>  k' = -k - m(-a, delta a) = -k + m(a, delta a)
  return {-g.twiceK + m_pair_twice(g.alpha, g.alpha), neg};
}
inline GradingElement g_pow(const GradingElement& g, int e) {
  GradingElement r = GradingElement::identity(g.alpha.N);
  GradingElement b = e >= 0 ? g : g_inv(g);
  for (int i = 0; i < std::abs(e); ++i) r = g_mul(r, b);
  return r;
}

// Membership in the index-two subgroup generated by lambda and the elements
// (-1/2, [i,i+1]) (and the half-interval generators in the extended
// variants). Products of those generators satisfy
//   2k = total(alpha) + sum of adjacent-interval products  (mod 2),
// a quadratic refinement verified against explicit generator words; lambda
// shifts 2k by an even amount, so the congruence characterizes membership.
// The boundary rays meet only one point each, so their self-pairings do not
// cancel; they enter through the binomial terms C(extra, 2).
inline bool g_dprime_member(const GradingElement& g) {
  std::vector<int> c;
  c.push_back(g.alpha.bottomExtra);
  for (int v : g.alpha.base) c.push_back(v);
  c.push_back(g.alpha.topExtra);
  int f = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    f += c[i];
    if (i + 1 < c.size()) f += c[i] * c[i + 1];
  }
  f += g.alpha.bottomExtra * (g.alpha.bottomExtra - 1) / 2;
  f += g.alpha.topExtra * (g.alpha.topExtra - 1) / 2;
  return ((g.twiceK - f) % 2) == 0;
}

// tau: boundary multiplicity near the open end.
inline int tau_top(const GradingElement& g) { return g.alpha.topExtra; }
inline int tau_bottom(const GradingElement& g) { return g.alpha.bottomExtra; }

// ------------------------------------------------------------------- gr'
// gr'(a) = (cr(a) - m([a], S), [a]) with S the starting set.
inline MultiplicityClass homology_class(const StrandsTriple& a) {
  MultiplicityClass h = MultiplicityClass::zero(a.N);
  for (auto& p : a.ph) h = h + MultiplicityClass::interval(a.N, p.first, p.second);
  return h;
}
inline MultiplicityClass homology_class(const TopGen& a) {
  MultiplicityClass h = MultiplicityClass::zero(a.N);
  for (auto& p : a.psi) h = h + MultiplicityClass::interval(a.N, p.first, p.second);
  for (int s : a.freeS) {  // [s, N+1/2)
    h = h + MultiplicityClass::interval(a.N, s, a.N);
    h.topExtra += 1;
  }
  return h;
}
inline MultiplicityClass homology_class(const BottomGen& a) {
  MultiplicityClass h = MultiplicityClass::zero(a.N);
  for (auto& p : a.phi) h = h + MultiplicityClass::interval(a.N, p.first, p.second);
  for (int t : a.enterT) {  // (1/2, t]
    h = h + MultiplicityClass::interval(a.N, 1, t);
    h.bottomExtra += 1;
  }
  return h;
}
template <class G>
GradingElement gr_prime(const G& a) {
  MultiplicityClass h = homology_class(a);
  return {2 * a.cr() - m_points_twice(h, a.S()), h};
}
// The bottom variant is the 180-degree mirror of the top one, so its base
// point set is the mirror image of the starting set: the target set T.
inline GradingElement gr_prime(const BottomGen& a) {
  MultiplicityClass h = homology_class(a);
  return {2 * a.cr() - m_points_twice(h, a.T()), h};
}

// ------------------------------------------------------------ amalgamation
// Canonical element of G1 x G2 / <lambda_1 lambda_2^{-1}>; only the total
// doubled exponent is well-defined.
struct AmalgamatedElement {
  int twiceK = 0;  // total
  MultiplicityClass alpha1, alpha2;
  auto operator<=>(const AmalgamatedElement&) const = default;
};
enum class AmalgamationMode { Pair, Triple };

inline AmalgamatedElement amalgamate(const GradingElement& g1, const GradingElement& g2,
                                     AmalgamationMode mode = AmalgamationMode::Pair) {
  if (mode == AmalgamationMode::Triple && tau_top(g1) != tau_bottom(g2))
    throw std::invalid_argument("amalgamate: tau values disagree");
  return {g1.twiceK + g2.twiceK, g1.alpha, g2.alpha};
}
inline AmalgamatedElement amalgam_mul(const AmalgamatedElement& x, const AmalgamatedElement& y) {
  return {x.twiceK + y.twiceK + m_pair_twice(y.alpha1, x.alpha1) +
              m_pair_twice(y.alpha2, x.alpha2),
          x.alpha1 + y.alpha1, x.alpha2 + y.alpha2};
}

// Identify a top/bottom amalgamated element with an element of the glued
// interval group by joining the classes over the interface point. Joining
// tau half-open rays into through-intervals shifts the exponent by tau^2/2
// (the pairwise interface interactions of the tau rays plus their self
// half-multiplicities), verified exhaustively on merged bases.
inline GradingElement amalgam_join(const AmalgamatedElement& x) {
  if (x.alpha1.topExtra != x.alpha2.bottomExtra)
    throw std::invalid_argument("amalgam_join: interface multiplicities disagree");
  int tau = x.alpha1.topExtra;
  int N1 = x.alpha1.N, N2 = x.alpha2.N;
  MultiplicityClass j = MultiplicityClass::zero(N1 + N2);
  for (int i = 0; i < N1 - 1; ++i) j.base[i] = x.alpha1.base[i];
  if (N1 >= 1 && N2 >= 1) j.base[N1 - 1] = tau;
  for (int i = 0; i < N2 - 1; ++i) j.base[N1 + i] = x.alpha2.base[i];
  return {x.twiceK + tau * tau, j};
}

// --------------------------------------------------------------- bigrades
struct Bigrade {
  int alexander = 0;
  int maslov = 0;
  auto operator<=>(const Bigrade&) const = default;
  friend Bigrade operator+(const Bigrade& a, const Bigrade& b) {
    return {a.alexander + b.alexander, a.maslov + b.maslov};
  }
  std::string str() const {
    return "(A=" + std::to_string(alexander) + ", M=" + std::to_string(maslov) + ")";
  }
};

// Number of transits of the strands of a past horizontal lines at heights
// l + 1/2 for l in the given set: strand i -> phi(i) meets the line iff
// i <= l < phi(i); a free top strand from s meets it iff l >= s (it runs to
// the top edge), and a bottom entering strand to t iff l < t.
inline int line_transits(const StrandsTriple& a, const std::vector<int>& lines) {
  int c = 0;
  for (int l : lines)
    for (auto& p : a.ph) c += (p.first <= l && l < p.second);
  return c;
}
inline int line_transits(const TopGen& a, const std::vector<int>& lines) {
  int c = 0;
  for (int l : lines) {
    for (auto& p : a.psi) c += (p.first <= l && l < p.second);
    for (int s : a.freeS) c += (s <= l);
  }
  return c;
}
inline int line_transits(const BottomGen& a, const std::vector<int>& lines) {
  int c = 0;
  for (int l : lines) {
    for (auto& p : a.phi) c += (p.first <= l && l < p.second);
    for (int t : a.enterT) c += (l < t);
  }
  return c;
}
// A(a) = L_X(a) - L_O(a);  mu(a) = cr(a) - 2 L_O(a).
template <class G>
Bigrade bigrade_algebra(const G& a, const std::vector<int>& LX, const std::vector<int>& LO) {
  int lx = line_transits(a, LX), lo = line_transits(a, LO);
  return {lx - lo, a.cr() - 2 * lo};
}

// ------------------------------------------------------------ check suites
inline Report grading_group_suite(int N) {
  Report rep;
  // a small pool of elements
  std::vector<GradingElement> pool;
  pool.push_back(GradingElement::identity(N));
  pool.push_back(GradingElement::lambda(N));
  for (int i = 1; i < N; ++i)
    pool.push_back({-1, MultiplicityClass::interval(N, i, i + 1)});
  for (int i = 1; i < N; ++i)
    for (int j = i + 1; j <= N; ++j) pool.push_back({1, MultiplicityClass::interval(N, i, j)});
  for (auto& g : pool)
    for (auto& h : pool) {
      // lambda central
      rep.expect(g_mul(GradingElement::lambda(N), g) == g_mul(g, GradingElement::lambda(N)),
                 "lambda not central");
      // commutation relation: ga gb = gb ga lambda^{2 m(beta, delta alpha)}
      GradingElement lhs = g_mul(g, h);
      GradingElement rhs = g_mul(g_mul(h, g),
                                 g_pow(GradingElement::lambda(N), m_pair_twice(h.alpha, g.alpha)));
      rep.expect(lhs == rhs, "commutation relation fails");
      for (auto& k : pool)
        rep.expect(g_mul(g_mul(g, h), k) == g_mul(g, g_mul(h, k)), "associativity fails");
    }
  for (auto& g : pool) {
    rep.expect(g_mul(g, GradingElement::identity(N)) == g, "right identity fails");
    rep.expect(g_mul(GradingElement::identity(N), g) == g, "left identity fails");
    rep.expect(g_mul(g, g_inv(g)) == GradingElement::identity(N), "right inverse fails");
    rep.expect(g_mul(g_inv(g), g) == GradingElement::identity(N), "left inverse fails");
    rep.expect(g_dprime_member(g), "pool element escapes the index-two subgroup");
  }
  rep.expect(tau_top(GradingElement::lambda(N)) == 0, "tau(lambda) != 0");
  return rep;
}

inline Report grading_strands_suite(int N) {
  Report rep;
  auto basis = strands_basis(N);
  // gr' lands in the index-two subgroup and is multiplicative
  for (auto& a : basis) {
    rep.expect(g_dprime_member(gr_prime(a)), "gr' escapes subgroup at " + a.str());
    for (auto& [b, c] : strands_diff(AElt(a)).terms)
      rep.expect(gr_prime(b) ==
                     g_mul(g_inv(GradingElement::lambda(N)), gr_prime(a)),
                 "differential grading law fails at " + a.str());
  }
  for (auto& a : basis)
    for (auto& b : basis) {
      AElt p = strands_mul(AElt(a), AElt(b));
      for (auto& [c, coef] : p.terms)
        rep.expect(gr_prime(c) == g_mul(gr_prime(a), gr_prime(b)),
                   "product grading law fails at " + a.str() + " * " + b.str());
    }
  // top module: tau, differential, action, product laws
  for (int k = 0; k <= N; ++k)
    for (int m = 0; m <= k; ++m)
      for (auto& t : top_basis(N, k, m)) {
        GradingElement g = gr_prime(t);
        rep.expect(tau_top(g) == m, "tau_top != m at " + t.str());
        rep.expect(g_dprime_member(g), "top gr' escapes subgroup at " + t.str());
        for (auto& [d, c] : top_diff(TElt(t)).terms)
          rep.expect(gr_prime(d) == g_mul(g_inv(GradingElement::lambda(N)), g),
                     "top differential grading law fails at " + t.str());
        for (auto& u : all_perms(m)) {
          NilCoxGen sg{u};
          for (auto& [d, c] : top_act(t, sg).terms)
            rep.expect(gr_prime(d) == g_mul(g_pow(GradingElement::lambda(N), sg.cr()), g),
                       "action grading law fails at " + t.str());
        }
      }
  for (int k = 0; k <= N; ++k)
    for (int m = 0; m + k <= N; ++m)
      for (auto& b : bottom_basis(N, k, m)) {
        GradingElement g = gr_prime(b);
        rep.expect(tau_bottom(g) == m, "tau_bottom != m at " + b.str());
        for (auto& [d, c] : bottom_diff(BElt(b)).terms)
          rep.expect(gr_prime(d) == g_mul(g_inv(GradingElement::lambda(N)), g),
                     "bottom differential grading law fails at " + b.str());
      }
  return rep;
}

// The reconstruction isomorphism respects the amalgamated gradings.
inline Report graded_bnt_check(int N, int N2) {
  Report rep = theorem_bnt_check(N, N2);
  for (int k = 0; k <= N; ++k)
    for (int m = 0; m <= k; ++m)
      for (auto& t : top_basis(N, k, m))
        for (int k2 = 0; k2 + m <= N2; ++k2)
          for (auto& b : bottom_basis(N2, k2, m)) {
            if (b.w != id_perm(m)) continue;
            GradingElement joined =
                amalgam_join(amalgamate(gr_prime(t), gr_prime(b), AmalgamationMode::Triple));
            rep.expect(joined == gr_prime(merge(TensorGen{t, b})),
                       "amalgamated grading fails at " + t.str() + " (.) " + b.str());
          }
  return rep;
}

}  // namespace cornered
