#pragma once

// The functor side: tangle words over sign sequences, built from braid
// letters, cups and caps, and their graded maps.
//
// Conventions. A cup at position j inserts its two new points at 0-based
// positions (j, j+1) of the running sequence, oriented (s, -s); a cap removes
// the opposite-signed pair at (j, j+1). For a cup the tangle module is the
// middle disk's module with the loop alpha around the new pair killed on the
// top side; the bottom inclusion sends the one pair class that straddles the
// cup to u_{j-1} + c(e_{j-1}, s) t^s u_{j+1}, every other pair class to its
// shifted copy. The cap is the same picture upside down. These inclusion
// matrices are not printed anywhere; they are fixed by the plat engine's
// surface algebra and certified against it by the cross-validation suite.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "talex/alexander.hpp"
#include "talex/burau.hpp"
#include "talex/exterior.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

struct TangleLetter {
  enum class Kind { Braid, Cup, Cap };
  Kind kind;
  int index;  // Braid: generator index (1-based); Cup/Cap: pair position j (0-based)
  int sign;   // Braid: crossing sign; Cup/Cap: sign of the left point of the pair

  static TangleLetter braid(int i, int s) { return {Kind::Braid, i, s}; }
  static TangleLetter cup(int j, int s) { return {Kind::Cup, j, s}; }
  static TangleLetter cap(int j, int s) { return {Kind::Cap, j, s}; }
  bool operator==(const TangleLetter&) const = default;
};

struct TangleWord {
  SignSequence bottom;
  std::vector<TangleLetter> letters;  // bottom to top
};

struct IllFormed : std::runtime_error {
  int letter_index;
  IllFormed(int idx, const std::string& why)
      : std::runtime_error("letter " + std::to_string(idx + 1) + ": " + why), letter_index(idx) {}
};

inline SignSequence letter_target(const SignSequence& e, const TangleLetter& l, int idx) {
  SignSequence s = e;
  switch (l.kind) {
    case TangleLetter::Kind::Braid: {
      if (l.index < 1 || static_cast<std::size_t>(l.index) >= s.size())
        throw IllFormed(idx, "braid index out of range");
      std::swap(s[l.index - 1], s[l.index]);
      return s;
    }
    case TangleLetter::Kind::Cup: {
      if (l.index < 0 || static_cast<std::size_t>(l.index) > s.size())
        throw IllFormed(idx, "cup position out of range");
      s.insert(s.begin() + l.index, {l.sign, -l.sign});
      return s;
    }
    case TangleLetter::Kind::Cap: {
      if (l.index < 0 || static_cast<std::size_t>(l.index) + 1 >= s.size())
        throw IllFormed(idx, "cap position out of range");
      if (s.size() < 3) throw IllFormed(idx, "cap would empty the boundary");
      std::size_t j = static_cast<std::size_t>(l.index);
      if (s[j] == s[j + 1]) throw IllFormed(idx, "cap over equal signs");
      if (s[j] != l.sign) throw IllFormed(idx, "cap orientation mismatch");
      s.erase(s.begin() + l.index, s.begin() + l.index + 2);
      return s;
    }
  }
  throw IllFormed(idx, "unknown letter");
}

// Runs the bookkeeping for the whole word and returns the top sequence.
inline SignSequence validate(const TangleWord& w) {
  if (w.bottom.empty()) throw IllFormed(-1, "empty bottom sequence");
  SignSequence s = w.bottom;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    s = letter_target(s, w.letters[i], static_cast<int>(i));
  long bot = 0, top = 0;
  for (int x : w.bottom) bot += x;
  for (int x : s) top += x;
  if (bot != top) throw IllFormed(-1, "total sign not conserved");  // unreachable by construction
  return s;
}

inline GradedMap rho_identity(const SignSequence& e) {
  return GradedMap::identity(e.size() - 1);
}

// Degree-i block of a braid letter, extracted through Jacobi's identity:
//   (-1)^{sum ~I + sum ~J} jacobi_complementary(B, ~I, ~J) = det(B[J, I]),
// the determinant-without-inversion reading of the braid formula. As a graded
// family this is det(B) Lambda^i(B^{-1}) of the inverse-convention Burau
// matrix, one global unit away from either compound family, and it is the
// normalization under which the plat engine agrees degreewise.
inline GradedMap rho_braid_morphism(const BurauMorphism& b) {
  std::size_t r = b.source.size() - 1;
  GradedMap g = GradedMap::make(r, r, 0);
  for (std::size_t i = 0; i <= r; ++i) {
    auto sets = index_sets(r, i);
    RingMatrix& blk = g.blocks[i];
    for (std::size_t jj = 0; jj < sets.size(); ++jj) {
      IndexSet jbar = set_complement(sets[jj], r);
      for (std::size_t ii = 0; ii < sets.size(); ++ii) {
        IndexSet ibar = set_complement(sets[ii], r);
        std::size_t s = 0;
        for (std::size_t x : ibar) s += x;
        for (std::size_t x : jbar) s += x;
        LaurentPoly v = b.matrix.jacobi_complementary(ibar, jbar);
        blk.at(jj, ii) = (s % 2) ? -v : v;
      }
    }
  }
  return g;
}

inline GradedMap rho_braid(const SignSequence& e, int index, int crossing_sign) {
  return rho_braid_morphism(burau_generator(e, index, crossing_sign));
}

namespace detail {

// Bottom-disk pair classes expressed in the cup'd disk's surviving classes:
// an (m+1) x (m-1) matrix over the top u-basis (row j is the killed alpha).
inline RingMatrix cup_inclusion(const SignSequence& e, std::size_t j, int s) {
  const std::size_t m = e.size();
  RingMatrix inc(m + 1, m - 1);
  for (std::size_t i = 0; i + 1 <= m - 1; ++i) {
    if (i + 1 < j) {
      inc.at(i, i) = LaurentPoly(1);
    } else if (i + 1 == j) {
      inc.at(i, i) = LaurentPoly(1);
      inc.at(i + 2, i) = LaurentPoly::from_unit(pair_unit(e[i], s) * Unit{1, s});
    } else {
      inc.at(i + 2, i) = LaurentPoly(1);
    }
  }
  return inc;
}

// Wedge-with-e_j matrix Lambda^i -> Lambda^{i+1} on an ambient of rank n.
inline RingMatrix wedge_with(std::size_t n, std::size_t i, std::size_t j) {
  auto rows = index_sets(n, i + 1);
  auto cols = index_sets(n, i);
  RingMatrix W(rows.size(), cols.size());
  IndexSet single{j};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto [sg, merged] = wedge_sign(cols[c], single);
    if (sg == 0) continue;
    W.at(lex_rank(merged, n), c) = LaurentPoly(sg);
  }
  return W;
}

}  // namespace detail

// Cup at position j with orientation (s, -s): shift +1; the image of x is
// (-1)^{k-i} (lift of x) ^ alpha, alpha the loop around the new pair.
inline GradedMap rho_cup(const SignSequence& e, int j, int s) {
  const std::size_t m = e.size();
  if (m < 1) throw std::invalid_argument("rho_cup: empty sign sequence");
  if (j < 0 || static_cast<std::size_t>(j) > m)
    throw std::invalid_argument("rho_cup: position out of range");
  const std::size_t k = m;  // deficiency of the cup tangle's module
  RingMatrix lift = detail::cup_inclusion(e, static_cast<std::size_t>(j), s);

  GradedMap g = GradedMap::make(m - 1, m + 1, +1);
  for (std::size_t i = 0; i <= m - 1; ++i) {
    RingMatrix w = detail::wedge_with(m + 1, i, static_cast<std::size_t>(j));
    RingMatrix blk = w * exterior_power_matrix(lift, i);
    g.blocks[i] = ((k - i) % 2) ? Unit{-1, 0} * blk : blk;
  }
  return g;
}

// Cap at position j over the pair (s, -s): shift -1; x maps to zero unless it
// carries a factor of the class beta complementary to the top inclusion, in
// which case that factor is stripped off.
inline GradedMap rho_cap(const SignSequence& e, int j, int s) {
  const std::size_t len = e.size();
  if (j < 0 || static_cast<std::size_t>(j) + 1 >= len)
    throw std::invalid_argument("rho_cap: position out of range");
  if (len < 3) throw std::invalid_argument("rho_cap: cap would empty the boundary");
  const std::size_t jj = static_cast<std::size_t>(j);
  if (e[jj] != s || e[jj + 1] != -s)
    throw std::invalid_argument("rho_cap: signs at the cap are not (s, -s)");
  const std::size_t m = len - 2;  // rank of the tangle module

  // Projection killing the pair class u_j; surviving slots keep their order.
  auto slot = [jj](std::size_t l) { return l < jj ? l : l - 1; };
  RingMatrix proj(m, m + 1);
  for (std::size_t l = 0; l <= m; ++l)
    if (l != jj) proj.at(slot(l), l) = LaurentPoly(1);

  // Basis change to (top inclusion image, beta): beta goes last so stripping
  // it off is sign-free.
  RingMatrix T(m, m);
  for (std::size_t h = 0; h + 1 <= m - 1; ++h) {
    if (h + 1 < jj) {
      T.at(slot(h), h) = LaurentPoly(1);
    } else if (h + 1 == jj) {
      T.at(slot(jj - 1), h) = LaurentPoly(1);
      T.at(slot(jj + 1), h) = LaurentPoly::from_unit(pair_unit(e[jj - 1], s) * Unit{1, s});
    } else {
      T.at(slot(h + 2), h) = LaurentPoly(1);
    }
  }
  T.at(slot(jj <= m - 1 ? jj + 1 : jj - 1), m - 1) = LaurentPoly(1);  // beta
  RingMatrix V = T.inverse_unit_det() * proj;

  GradedMap g = GradedMap::make(m + 1, m - 1, -1);
  for (std::size_t i = 1; i <= m + 1; ++i) {
    if (i - 1 > m - 1) continue;
    RingMatrix lam = exterior_power_matrix(V, i);
    auto rows = index_sets(m - 1, i - 1);
    auto cols = index_sets(m + 1, i);
    RingMatrix blk(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      IndexSet withBeta = rows[r];
      withBeta.push_back(m - 1);
      std::size_t src = lex_rank(withBeta, m);
      for (std::size_t c = 0; c < cols.size(); ++c) blk.at(r, c) = lam.at(src, c);
    }
    g.blocks[i] = ((m - i) % 2) ? Unit{-1, 0} * blk : blk;
  }
  return g;
}

inline GradedMap rho_letter(const SignSequence& e, const TangleLetter& l) {
  switch (l.kind) {
    case TangleLetter::Kind::Braid:
      return rho_braid(e, l.index, l.sign);
    case TangleLetter::Kind::Cup:
      return rho_cup(e, l.index, l.sign);
    case TangleLetter::Kind::Cap:
      return rho_cap(e, l.index, l.sign);
  }
  throw std::logic_error("rho_letter: unknown letter kind");
}

// The composite family in the representative the letters produce, before the
// reproducibility normalization.
inline GradedMap rho_word_raw(const TangleWord& w) {
  validate(w);
  SignSequence s = w.bottom;
  GradedMap acc = rho_identity(s);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    GradedMap step = rho_letter(s, w.letters[i]);
    acc = graded_map_compose(acc, step);
    s = letter_target(s, w.letters[i], static_cast<int>(i));
  }
  return acc;
}

inline GradedMap rho_word(const TangleWord& w) {
  GradedMap acc = rho_word_raw(w);
  acc.normalize_units();
  return acc;
}

// The 1x1 degree-0 entry of a (1,1)-tangle's invariant: the Alexander
// polynomial of the closure, up to a unit.
inline LaurentPoly alexander_of_11(const GradedMap& g) {
  if (g.source_rank != 0 || g.target_rank != 0)
    throw std::invalid_argument("alexander_of_11: not a (1,1)-tangle invariant");
  return g.blocks[0].at(0, 0);
}

}  // namespace talex
