#pragma once

// Conversions between tangle words and plat descriptions.
//
// canonical_word: the straight reading of a plat as cups, braid, caps.
// word_to_plat: plat position for an arbitrary word. All cup pairs are created
// at the bottom right in order of first use and routed into place with
// positive crossings; capped pairs are routed to the right and parked, so the
// final picture has the free endpoints on the left of both disks.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "talex/plat.hpp"
#include "talex/tangle.hpp"

namespace talex {

inline TangleWord canonical_word(const PlatDescription& pd) {
  pd.validate();
  TangleWord w;
  w.bottom.assign(pd.middle.begin(), pd.middle.begin() + static_cast<long>(pd.m_minus));
  for (std::size_t a = 0; a < pd.n_minus(); ++a) {
    std::size_t j = pd.m_minus + 2 * a;
    w.letters.push_back(TangleLetter::cup(static_cast<int>(j), pd.middle[j]));
  }
  for (const BraidLetter& l : pd.braid.letters)
    w.letters.push_back(TangleLetter::braid(l.index, l.sign));
  SignSequence top = pd.top_signs();
  for (std::size_t a = 0; a < pd.n_plus(); ++a) {
    std::size_t j = pd.m_plus + 2 * a;
    // Every cap removes at the same position: earlier pairs shift down.
    w.letters.push_back(TangleLetter::cap(static_cast<int>(pd.m_plus), top[j]));
  }
  validate(w);
  return w;
}

inline PlatDescription word_to_plat(const TangleWord& w) {
  SignSequence top = validate(w);
  std::size_t cups = 0, caps = 0;
  for (const TangleLetter& l : w.letters) {
    if (l.kind == TangleLetter::Kind::Cup) ++cups;
    if (l.kind == TangleLetter::Kind::Cap) ++caps;
  }
  const std::size_t S = w.bottom.size() + 2 * cups;

  PlatDescription pd;
  pd.m_minus = w.bottom.size();
  pd.m_plus = top.size();
  pd.middle = w.bottom;
  pd.braid.strands = S;

  auto emit = [&pd, S](std::size_t idx1based) {
    if (idx1based < 1 || idx1based > S - 1) throw std::logic_error("word_to_plat: bad route letter");
    pd.braid.letters.push_back({static_cast<int>(idx1based), +1});
  };

  // Sweep state: active strands occupy [0, W), unused cup pairs [W, W+2u),
  // parked capped pairs [S-2c, S).
  std::size_t W = w.bottom.size();
  std::size_t parked = 0;
  SignSequence seq = w.bottom;
  for (std::size_t li = 0; li < w.letters.size(); ++li) {
    const TangleLetter& l = w.letters[li];
    if (l.kind == TangleLetter::Kind::Braid) {
      pd.braid.letters.push_back({l.index, l.sign});
    } else if (l.kind == TangleLetter::Kind::Cup) {
      pd.middle.push_back(l.sign);
      pd.middle.push_back(-l.sign);
      // Pair starts at (W, W+1); walk it left to (j, j+1).
      for (std::size_t p = W; p > static_cast<std::size_t>(l.index); --p) {
        emit(p);
        emit(p + 1);
      }
      W += 2;
    } else {
      // Route the pair at (j, j+1) right past active and stock strands, then
      // park it just left of the previously parked pairs.
      std::size_t target = S - 2 * parked - 2;
      for (std::size_t p = static_cast<std::size_t>(l.index); p < target; ++p) {
        emit(p + 2);
        emit(p + 1);
      }
      W -= 2;
      ++parked;
    }
    seq = letter_target(seq, l, static_cast<int>(li));
  }
  pd.validate();
  return pd;
}

}  // namespace talex
