#pragma once

// The oriented (sign-twisted, reduced) Burau representation as a groupoid over
// sign sequences. Punctures are p_0..p_{m-1}; the twisted homology of the
// m-punctured disk is free of rank m-1 on the consecutive-pair classes
// u_0..u_{m-2}, where u_j is a loop around p_j and p_{j+1} when their signs
// differ and a figure eight around them when the signs agree. In chain
// coordinates u_j = x_j + c(e_j, e_{j+1}) x_{j+1} with
//   c(x, y) = -1    if x == y,
//   c(x, y) = t^x   otherwise.
//
// The generator s_i swaps punctures i-1, i (0-based). Its matrix is the
// identity outside the u_{i-2}, u_{i-1}, u_i block; in the all-equal-signs
// case the block is [[1,0,0],[t^e,-t^e,1],[0,0,1]], and the mixed-sign entries
// below come from pushing the braid's action on chains into the u bases.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

using SignSequence = std::vector<int>;  // entries +-1, length >= 1

struct BraidLetter {
  int index;  // generator index i, 1-based: swaps strands i-1, i (0-based)
  int sign;   // +1 positive crossing, -1 negative
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  std::size_t strands = 1;
  std::vector<BraidLetter> letters;  // bottom to top

  bool operator==(const BraidWord&) const = default;
};

// Coefficient of x_{j+1} in the pair class around punctures of signs (x, y).
inline Unit pair_unit(int x, int y) {
  return x == y ? Unit{-1, 0} : Unit{1, x};
}

inline SignSequence swapped(const SignSequence& e, std::size_t a, std::size_t b) {
  SignSequence out = e;
  std::swap(out[a], out[b]);
  return out;
}

struct BurauMorphism {
  SignSequence source;
  SignSequence target;
  RingMatrix matrix;  // (m-1) x (m-1), columns = images of source u-basis

  bool operator==(const BurauMorphism&) const = default;

  static BurauMorphism identity(const SignSequence& e) {
    return {e, e, RingMatrix::identity(e.size() - 1)};
  }
};

inline BurauMorphism burau_generator(const SignSequence& e, int index, int crossing_sign) {
  const std::size_t m = e.size();
  if (index < 1 || static_cast<std::size_t>(index) > m - 1)
    throw std::invalid_argument("burau_generator: index out of range");
  const std::size_t a = static_cast<std::size_t>(index) - 1;
  const std::size_t b = a + 1;

  if (crossing_sign < 0) {
    // The inverse of the positive generator based at the swapped sequence.
    BurauMorphism pos = burau_generator(swapped(e, a, b), index, +1);
    return {e, pos.source, pos.matrix.inverse_unit_det()};
  }

  SignSequence top = swapped(e, a, b);
  RingMatrix B = RingMatrix::identity(m - 1);
  const Unit cab_top = pair_unit(e[b], e[a]);  // pair coefficient on the target side
  // middle column u_{a}
  B.at(a, a) = LaurentPoly::from_unit(Unit{1, e[b]} * cab_top.inverse());
  // left column u_{a-1}
  if (a >= 1) {
    Unit lam = pair_unit(e[a - 1], e[a]) * Unit{1, e[b]} * cab_top.inverse();
    B.at(a, a - 1) = LaurentPoly::from_unit(lam);
  }
  // right column u_{b}
  if (b + 1 <= m - 1) {
    B.at(a, b) = LaurentPoly(1);
    B.at(b, b) = LaurentPoly::from_unit(Unit{-1, 0} * cab_top);
  }
  return {e, top, B};
}

inline BurauMorphism burau_word(const SignSequence& e, const BraidWord& w) {
  if (e.size() != w.strands) throw std::invalid_argument("burau_word: sign sequence length != strand count");
  BurauMorphism out = BurauMorphism::identity(e);
  for (const BraidLetter& l : w.letters) {
    BurauMorphism g = burau_generator(out.target, l.index, l.sign);
    out.matrix = g.matrix * out.matrix;
    out.target = g.target;
  }
  return out;
}

// The permutation of strand positions induced by a word: out[p] = position at
// the top of the strand entering at bottom position p.
inline std::vector<std::size_t> braid_permutation(const BraidWord& w) {
  std::vector<std::size_t> pos(w.strands);
  for (std::size_t i = 0; i < w.strands; ++i) pos[i] = i;
  std::vector<std::size_t> where = pos;  // where[p] = strand currently at position p
  for (const BraidLetter& l : w.letters) {
    std::size_t a = static_cast<std::size_t>(l.index) - 1;
    std::swap(where[a], where[a + 1]);
  }
  std::vector<std::size_t> out(w.strands);
  for (std::size_t p = 0; p < w.strands; ++p) out[where[p]] = p;
  return out;
}

inline SignSequence apply_word_to_signs(const SignSequence& e, const BraidWord& w) {
  SignSequence s = e;
  for (const BraidLetter& l : w.letters) {
    std::size_t a = static_cast<std::size_t>(l.index) - 1;
    if (a + 1 >= s.size()) throw std::invalid_argument("apply_word_to_signs: index out of range");
    std::swap(s[a], s[a + 1]);
  }
  return s;
}

inline BraidWord inverse_word(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

}  // namespace talex
