#pragma once

// Exterior powers of free modules over Z[t, t^-1]: index-set bases in
// lexicographic order, wedge signs, compound matrices, contraction along a
// vector, and the duality between Lambda^r and functionals on Lambda^{n-r}.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

using IndexSet = std::vector<std::size_t>;  // strictly increasing, entries < ambient rank

inline std::size_t binomial(std::size_t n, long r) {
  if (r < 0 || static_cast<std::size_t>(r) > n) return 0;
  std::size_t k = static_cast<std::size_t>(r);
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> index_sets(std::size_t n, std::size_t r) {
  std::vector<IndexSet> out;
  if (r > n) return out;
  IndexSet cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t lex_rank(const IndexSet& s, std::size_t n) {
  std::size_t r = s.size(), rank = 0, prev = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = prev; v < s[i]; ++v) rank += binomial(n - v - 1, static_cast<long>(r - i - 1));
    prev = s[i] + 1;
  }
  return rank;
}

// Sign of the shuffle sorting the concatenation I.J, plus the sorted union;
// sign 0 when the sets intersect.
inline std::pair<int, IndexSet> wedge_sign(const IndexSet& I, const IndexSet& J) {
  std::size_t inv = 0;
  IndexSet merged;
  merged.reserve(I.size() + J.size());
  for (std::size_t j : J) {
    for (std::size_t i : I) {
      if (i == j) return {0, {}};
      if (i > j) ++inv;
    }
  }
  std::size_t a = 0, b = 0;
  while (a < I.size() || b < J.size()) {
    if (b == J.size() || (a < I.size() && I[a] < J[b]))
      merged.push_back(I[a++]);
    else
      merged.push_back(J[b++]);
  }
  return {(inv % 2) ? -1 : 1, merged};
}

inline IndexSet set_complement(const IndexSet& s, std::size_t n) {
  return RingMatrix::complement(s, n);
}

struct ExteriorElement {
  std::size_t ambient = 0;
  std::size_t degree = 0;
  std::map<IndexSet, LaurentPoly> coeffs;  // zero coefficients omitted

  static ExteriorElement basis(std::size_t ambient, IndexSet s) {
    ExteriorElement e;
    e.ambient = ambient;
    e.degree = s.size();
    e.coeffs.emplace(std::move(s), LaurentPoly(1));
    return e;
  }

  void add_term(const IndexSet& s, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(s);
    if (it == coeffs.end()) {
      coeffs.emplace(s, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const ExteriorElement& o) const {
    return ambient == o.ambient && degree == o.degree && coeffs == o.coeffs;
  }
};

inline ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.ambient != y.ambient) throw std::logic_error("wedge: ambient rank mismatch");
  ExteriorElement out;
  out.ambient = x.ambient;
  out.degree = x.degree + y.degree;
  for (const auto& [I, a] : x.coeffs)
    for (const auto& [J, b] : y.coeffs) {
      auto [s, merged] = wedge_sign(I, J);
      if (s == 0) continue;
      LaurentPoly c = a * b;
      out.add_term(merged, s < 0 ? -c : c);
    }
  return out;
}

// Matrix of Lambda^r A in lexicographic bases: entry (I, J) = minor(A, I, J).
inline RingMatrix exterior_power_matrix(const RingMatrix& A, std::size_t r) {
  auto rows = index_sets(A.rows(), r);
  auto cols = index_sets(A.cols(), r);
  RingMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = A.minor(rows[i], cols[j]);
  return out;
}

// Contraction of the determinant form on R^n along a degree-1 element alpha:
// the functional v |-> coefficient of e_{0..n-1} in v ^ alpha.
class Contraction {
 public:
  Contraction(std::size_t ambient, ExteriorElement alpha)
      : ambient_(ambient), alpha_(std::move(alpha)) {
    if (alpha_.degree != 1 || alpha_.ambient != ambient_)
      throw std::logic_error("Contraction: alpha must be a degree-1 element");
  }

  LaurentPoly operator()(const ExteriorElement& v) const {
    if (v.ambient != ambient_ || v.degree + 1 != ambient_)
      throw std::logic_error("Contraction: expected degree n-1 input");
    ExteriorElement w = wedge(v, alpha_);
    IndexSet full(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) full[i] = i;
    auto it = w.coeffs.find(full);
    return it == w.coeffs.end() ? LaurentPoly() : it->second;
  }

 private:
  std::size_t ambient_;
  ExteriorElement alpha_;
};

// The mutually inverse maps d_r : Lambda^r H -> Hom(Lambda^{n-r} H, R) fixed by
// x ^ y = d_r(x)(y) * w where w is the wedge of the ordered basis. Functionals
// are stored as coefficient vectors over the lexicographic basis of degree n-r.
struct Duality {
  std::size_t ambient;
  std::size_t degree;

  std::vector<LaurentPoly> apply(const ExteriorElement& x) const {
    if (x.ambient != ambient || x.degree != degree)
      throw std::logic_error("Duality::apply: degree mismatch");
    auto duals = index_sets(ambient, ambient - degree);
    std::vector<LaurentPoly> out(duals.size());
    for (std::size_t j = 0; j < duals.size(); ++j) {
      IndexSet comp = set_complement(duals[j], ambient);
      auto it = x.coeffs.find(comp);
      if (it == x.coeffs.end()) continue;
      int s = wedge_sign(comp, duals[j]).first;
      out[j] = s < 0 ? -it->second : it->second;
    }
    return out;
  }

  ExteriorElement inverse(const std::vector<LaurentPoly>& f) const {
    auto duals = index_sets(ambient, ambient - degree);
    if (f.size() != duals.size()) throw std::logic_error("Duality::inverse: size mismatch");
    ExteriorElement out;
    out.ambient = ambient;
    out.degree = degree;
    for (std::size_t j = 0; j < duals.size(); ++j) {
      if (f[j].is_zero()) continue;
      IndexSet comp = set_complement(duals[j], ambient);
      int s = wedge_sign(comp, duals[j]).first;
      out.add_term(comp, s < 0 ? -f[j] : f[j]);
    }
    return out;
  }
};

}  // namespace talex
