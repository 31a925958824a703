#pragma once
// Exact coefficient arithmetic over F2 and F2[U1..U_{N-1}], finite formal
// sums over ordered basis keys, and F2 linear algebra for homology.
#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cornered {

// ---------------------------------------------------------------- Monomial
// A monomial in U1..U_{N-1}. Exponents stored sparsely, index 1-based,
// no zero exponents stored.
struct Monomial {
  std::map<int, int> exponents;

  static Monomial one() { return {}; }
  static Monomial U(int i, int e = 1) {
    Monomial m;
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > 0) m.exponents[i] = e;
    return m;
  }
  int degree() const {
    int d = 0;
    for (auto& [i, e] : exponents) d += e;
    return d;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (auto& [i, e] : b.exponents) {
      r.exponents[i] += e;
      if (r.exponents[i] == 0) r.exponents.erase(i);
    }
    return r;
  }
  auto operator<=>(const Monomial&) const = default;

  std::string str() const {
    if (exponents.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, e] : exponents) {
      if (!first) os << "*";
      first = false;
      os << "U" << i;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }
};

// --------------------------------------------------------------- Polynomial
// An F2 polynomial: a finite set of monomials (presence = coefficient 1).
struct Poly {
  std::set<Monomial> monomials;

  static Poly zero() { return {}; }
  static Poly one() { return from(Monomial::one()); }
  static Poly from(const Monomial& m) {
    Poly p;
    p.monomials.insert(m);
    return p;
  }
  static Poly U(int i, int e = 1) { return from(Monomial::U(i, e)); }

  bool is_zero() const { return monomials.empty(); }
  bool is_one() const {
    return monomials.size() == 1 && *monomials.begin() == Monomial::one();
  }
  auto operator<=>(const Poly&) const = default;

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    std::set_symmetric_difference(a.monomials.begin(), a.monomials.end(),
                                  b.monomials.begin(), b.monomials.end(),
                                  std::inserter(r.monomials, r.monomials.end()));
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& m : a.monomials)
      for (auto& n : b.monomials) {
        Monomial p = m * n;
        auto it = r.monomials.find(p);
        if (it == r.monomials.end())
          r.monomials.insert(p);
        else
          r.monomials.erase(it);
      }
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }

  std::string str() const {
    if (monomials.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& m : monomials) {
      if (!first) os << " + ";
      first = false;
      os << m.str();
    }
    return os.str();
  }
};

inline Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

// -------------------------------------------------------- LinearCombination
// A finite formal sum of basis keys with Poly coefficients. Keys must be
// totally ordered (operator<) so iteration order is deterministic.
template <class K>
struct Lin {
  std::map<K, Poly> terms;

  Lin() = default;
  explicit Lin(const K& k, Poly c = Poly::one()) { add(k, c); }

  static Lin zero() { return {}; }
  bool is_zero() const { return terms.empty(); }

  void add(const K& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend Lin operator+(const Lin& a, const Lin& b) {
    Lin r = a;
    for (auto& [k, c] : b.terms) r.add(k, c);
    return r;
  }
  Lin& operator+=(const Lin& b) {
    for (auto& [k, c] : b.terms) add(k, c);
    return *this;
  }
  Lin scaled(const Poly& s) const {
    Lin r;
    for (auto& [k, c] : terms) r.add(k, c * s);
    return r;
  }
  bool operator==(const Lin& o) const { return terms == o.terms; }

  // Bilinear / linear extension helpers.
  template <class F>
  auto mapped(F&& f) const {  // f: K -> Lin<K2>
    using R = decltype(f(std::declval<const K&>()));
    R r;
    for (auto& [k, c] : terms) r += f(k).scaled(c);
    return r;
  }
};

template <class K>
Lin<K> lc_combine(const Lin<K>& a, const Lin<K>& b, const Poly& scale) {
  return a + b.scaled(scale);
}

template <class A, class B, class F>
auto bilinear(const Lin<A>& x, const Lin<B>& y, F&& f) {
  using R = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
  R r;
  for (auto& [a, ca] : x.terms)
    for (auto& [b, cb] : y.terms) r += f(a, b).scaled(ca * cb);
  return r;
}

// ------------------------------------------------------------------ F2Matrix
struct F2Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::uint64_t>> bits;  // row-major bit blocks

  F2Matrix() = default;
  F2Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), bits(r, std::vector<std::uint64_t>((c + 63) / 64, 0)) {}

  void set(std::size_t r, std::size_t c) { bits[r][c / 64] ^= (std::uint64_t{1} << (c % 64)); }
  bool get(std::size_t r, std::size_t c) const {
    return (bits[r][c / 64] >> (c % 64)) & 1;
  }

  std::size_t rank() const {
    auto work = bits;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
      std::size_t blk = c / 64, sh = c % 64;
      std::size_t pivot = rk;
      while (pivot < rows && !((work[pivot][blk] >> sh) & 1)) ++pivot;
      if (pivot == rows) continue;
      std::swap(work[rk], work[pivot]);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != rk && ((work[r][blk] >> sh) & 1))
          for (std::size_t b = 0; b < work[r].size(); ++b) work[r][b] ^= work[rk][b];
      ++rk;
    }
    return rk;
  }

  // Matrix product (this: a x b) * (o: b x c) over F2.
  F2Matrix mul(const F2Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("shape mismatch");
    F2Matrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        if (get(i, k))
          for (std::size_t b = 0; b < r.bits[i].size(); ++b) r.bits[i][b] ^= o.bits[k][b];
    return r;
  }
  bool is_zero() const {
    for (auto& row : bits)
      for (auto b : row)
        if (b) return false;
    return true;
  }
};

inline std::size_t f2_rank(const F2Matrix& m) { return m.rank(); }

// boundaries[d] maps degree-d chains to degree-(d-1) chains, with basis
// elements as COLUMNS of domain and ROWS of codomain: boundaries[d] has
// shape (dim C_{d-1}) x (dim C_d). Returns homology dimension per degree.
// Rejects chains whose consecutive boundary maps do not compose to zero.
inline std::vector<std::size_t> complex_homology_dims(
    const std::vector<F2Matrix>& boundaries) {
  // degrees 0..n where boundaries[0] is the (zero) map out of degree 0.
  std::size_t n = boundaries.size();
  std::vector<std::size_t> dims(n), ranks(n);
  for (std::size_t d = 0; d < n; ++d) {
    dims[d] = boundaries[d].cols;
    ranks[d] = boundaries[d].rows == 0 || boundaries[d].cols == 0 ? 0 : boundaries[d].rank();
  }
  for (std::size_t d = 0; d + 1 < n; ++d) {
    if (boundaries[d].cols != boundaries[d + 1].rows)
      throw std::invalid_argument("boundary shapes do not chain");
    if (boundaries[d].rows && boundaries[d + 1].cols &&
        !boundaries[d].mul(boundaries[d + 1]).is_zero())
      throw std::runtime_error("differential does not square to zero");
  }
  std::vector<std::size_t> h(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::size_t rank_in = (d + 1 < n) ? ranks[d + 1] : 0;
    h[d] = dims[d] - ranks[d] - rank_in;
  }
  return h;
}

// Convenience: homology of a complex given by a basis with integer degrees
// and a differential callback (degree -1), coefficients must be 0/1.
template <class G>
std::map<int, std::size_t> graded_homology(
    const std::vector<G>& basis, const std::function<int(const G&)>& degree,
    const std::function<Lin<G>(const G&)>& diff) {
  std::map<int, std::vector<G>> by_deg;
  for (auto& g : basis) by_deg[degree(g)].push_back(g);
  std::map<G, std::pair<int, std::size_t>> index;  // g -> (deg, col)
  for (auto& [d, v] : by_deg)
    for (std::size_t i = 0; i < v.size(); ++i) index[v[i]] = {d, i};
  if (by_deg.empty()) return {};
  int lo = by_deg.begin()->first, hi = by_deg.rbegin()->first;
  std::vector<F2Matrix> bnd;
  for (int d = lo; d <= hi; ++d) {
    std::size_t nd = by_deg.count(d) ? by_deg[d].size() : 0;
    std::size_t nprev = by_deg.count(d - 1) ? by_deg[d - 1].size() : 0;
    F2Matrix m(nprev, nd);
    if (by_deg.count(d))
      for (std::size_t c = 0; c < by_deg[d].size(); ++c) {
        Lin<G> dg = diff(by_deg[d][c]);
        for (auto& [k, coef] : dg.terms) {
          if (!coef.is_one()) throw std::runtime_error("graded_homology: non-scalar coefficient");
          auto [deg2, row] = index.at(k);
          if (deg2 != d - 1) throw std::runtime_error("differential not degree -1");
          m.set(row, c);
        }
      }
    bnd.push_back(std::move(m));
  }
  auto h = complex_homology_dims(bnd);
  std::map<int, std::size_t> out;
  for (int d = lo; d <= hi; ++d) out[d] = h[d - lo];
  return out;
}

}  // namespace cornered
