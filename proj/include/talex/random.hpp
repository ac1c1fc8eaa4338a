#pragma once

// Deterministic random generators for the property suites: plats with valid
// pairings, words over the hilden generators, and free tangle words.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "talex/burau.hpp"
#include "talex/plat.hpp"
#include "talex/tangle.hpp"

namespace talex {

using Rng = std::mt19937_64;

inline int random_sign(Rng& rng) { return (rng() & 1) ? +1 : -1; }

inline SignSequence random_signs(Rng& rng, std::size_t len) {
  SignSequence e(len);
  for (auto& x : e) x = random_sign(rng);
  return e;
}

inline BraidWord random_braid_word(Rng& rng, std::size_t strands, std::size_t max_len) {
  BraidWord w{strands, {}};
  if (strands < 2) return w;
  std::uniform_int_distribution<std::size_t> len_d(0, max_len);
  std::uniform_int_distribution<int> idx_d(1, static_cast<int>(strands) - 1);
  std::size_t len = len_d(rng);
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back({idx_d(rng), random_sign(rng)});
  return w;
}

// Builds top-valid data first and pulls the signs back through the braid;
// rejects candidates whose bottom pairing fails.
inline PlatDescription random_plat(Rng& rng, std::size_t max_strands = 6,
                                   std::size_t max_word = 8) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::uniform_int_distribution<std::size_t> s_d(2, max_strands);
    std::size_t S = s_d(rng);
    std::vector<std::size_t> ends;
    for (std::size_t m = S % 2 ? 1 : 2; m <= S; m += 2) ends.push_back(m);
    std::size_t m_plus = ends[rng() % ends.size()];
    std::size_t m_minus = ends[rng() % ends.size()];

    SignSequence top(S);
    for (std::size_t i = 0; i < m_plus; ++i) top[i] = random_sign(rng);
    for (std::size_t a = 0; m_plus + 2 * a < S; ++a) {
      int s = random_sign(rng);
      top[m_plus + 2 * a] = s;
      top[m_plus + 2 * a + 1] = -s;
    }

    PlatDescription pd;
    pd.braid = random_braid_word(rng, S, max_word);
    pd.m_minus = m_minus;
    pd.m_plus = m_plus;
    auto perm = braid_permutation(pd.braid);
    pd.middle.resize(S);
    for (std::size_t q = 0; q < S; ++q) pd.middle[q] = top[perm[q]];

    bool ok = true;
    for (std::size_t a = 0; a < pd.n_minus() && ok; ++a)
      ok = pd.middle[m_minus + 2 * a] == -pd.middle[m_minus + 2 * a + 1];
    if (!ok) continue;
    pd.validate();
    return pd;
  }
  throw std::logic_error("random_plat: rejection sampling failed");
}

// A word in the hilden generators and their inverses.
inline BraidWord random_hilden_word(Rng& rng, std::size_t m, std::size_t n,
                                    std::size_t max_factors = 3) {
  auto gens = hilden_generators(m, n);
  BraidWord out{m + 2 * n, {}};
  std::uniform_int_distribution<std::size_t> count_d(1, max_factors);
  std::size_t count = count_d(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const BraidWord& g = gens[rng() % gens.size()];
    BraidWord use = (rng() & 1) ? inverse_word(g) : g;
    out.letters.insert(out.letters.end(), use.letters.begin(), use.letters.end());
  }
  return out;
}

// A valid word from the given bottom; cup/cap positions and crossing letters
// are sampled uniformly among the legal options at each level.
inline TangleWord random_word(Rng& rng, SignSequence bottom, std::size_t length,
                              std::size_t max_width = 7) {
  TangleWord w;
  w.bottom = std::move(bottom);
  SignSequence s = w.bottom;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<TangleLetter> options;
    if (s.size() >= 2)
      for (int i = 1; static_cast<std::size_t>(i) < s.size(); ++i) {
        options.push_back(TangleLetter::braid(i, +1));
        options.push_back(TangleLetter::braid(i, -1));
      }
    if (s.size() + 2 <= max_width)
      for (int j = 0; static_cast<std::size_t>(j) <= s.size(); ++j) {
        options.push_back(TangleLetter::cup(j, +1));
        options.push_back(TangleLetter::cup(j, -1));
      }
    if (s.size() >= 3)
      for (int j = 0; static_cast<std::size_t>(j) + 1 < s.size(); ++j)
        if (s[j] == -s[j + 1]) options.push_back(TangleLetter::cap(j, s[j]));
    if (options.empty()) break;
    TangleLetter pick = options[rng() % options.size()];
    w.letters.push_back(pick);
    s = letter_target(s, pick, static_cast<int>(w.letters.size()) - 1);
  }
  return w;
}

}  // namespace talex
