#pragma once

// Direct computation of the tangle invariant from a plat description.
//
// A plat has N+1 strands: the leftmost m_minus bottom endpoints are free, the
// remaining 2*n_minus are joined by cups in adjacent pairs; likewise m_plus
// and caps at the top after the braid's permutation. The middle disk S sits
// just above the cups; its consecutive-pair classes u_0..u_{N-1} relabel as
//   gamma^-_1..gamma^-_{m_minus - 1},  beta^-_1, alpha^-_1, beta^-_2, alpha^-_2, ...
// where alpha classes (loops around one cup's two endpoints) die in the bottom
// half and the rest survive. The top half is the same picture pushed through
// the braid. Gluing the halves yields a presentation of the tangle module with
// generators (gamma^-, beta^-, gamma^+, beta^+) and one relator per u-class:
// the bottom image minus the top image. The invariant's coefficients are then
// signed Alexander-function determinants over indicator columns.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "talex/alexander.hpp"
#include "talex/burau.hpp"
#include "talex/exterior.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

struct PlatDescription {
  BraidWord braid;        // on m_minus + 2*n_minus strands
  SignSequence middle;    // signs at the bottom of the braid (the surface S)
  std::size_t m_minus = 1;
  std::size_t m_plus = 1;

  std::size_t strands() const { return braid.strands; }
  std::size_t n_minus() const { return (strands() - m_minus) / 2; }
  std::size_t n_plus() const { return (strands() - m_plus) / 2; }
  std::size_t rank_minus() const { return m_minus - 1; }
  std::size_t rank_plus() const { return m_plus - 1; }
  long shift() const {
    return (static_cast<long>(rank_plus()) - static_cast<long>(rank_minus())) / 2;
  }

  SignSequence top_signs() const { return apply_word_to_signs(middle, braid); }

  void validate() const {
    const std::size_t s = strands();
    if (middle.size() != s) throw std::invalid_argument("plat: sign count != strand count");
    if (m_minus < 1 || m_plus < 1) throw std::invalid_argument("plat: endpoint counts must be >= 1");
    if (m_minus > s || (s - m_minus) % 2 != 0)
      throw std::invalid_argument("plat: bottom endpoints do not leave whole cup pairs");
    if (m_plus > s || (s - m_plus) % 2 != 0)
      throw std::invalid_argument("plat: top endpoints do not leave whole cap pairs");
    for (const BraidLetter& l : braid.letters)
      if (l.index < 1 || static_cast<std::size_t>(l.index) > s - 1)
        throw std::invalid_argument("plat: braid letter index out of range");
    for (std::size_t a = 0; a < n_minus(); ++a)
      if (middle[m_minus + 2 * a] != -middle[m_minus + 2 * a + 1])
        throw std::invalid_argument("plat: cup pair signs must be opposite");
    SignSequence top = top_signs();
    for (std::size_t a = 0; a < n_plus(); ++a)
      if (top[m_plus + 2 * a] != -top[m_plus + 2 * a + 1])
        throw std::invalid_argument("plat: cap pair signs must be opposite");
  }
};

struct MVPresentation {
  Presentation pres;
  std::size_t rank_minus = 0;
  std::size_t rank_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_plus = 0;

  // Generators are ordered gamma^-, beta^-, gamma^+, beta^+.
  std::size_t gamma_minus_gen(std::size_t i) const { return i; }
  std::size_t gamma_plus_gen(std::size_t i) const { return rank_minus + n_minus + i; }
};

namespace detail {

// Generator slot of the u-class at index l on a disk with m free endpoints at
// the left (gamma slots 0..m-2 offset by `base`, beta slots after them), or
// npos for an alpha class.
inline std::size_t side_slot(std::size_t l, std::size_t m, std::size_t base) {
  if (l < m - 1) return base + l;  // gamma
  std::size_t off = l - (m - 1);
  if (off % 2 == 0) return base + (m - 1) + off / 2;  // beta
  return static_cast<std::size_t>(-1);                // alpha
}

}  // namespace detail

inline MVPresentation build_presentation(const PlatDescription& pd) {
  pd.validate();
  const std::size_t N = pd.strands() - 1;
  const std::size_t rm = pd.rank_minus(), rp = pd.rank_plus();
  const std::size_t nm = pd.n_minus(), np = pd.n_plus();
  const std::size_t gens = (rm + nm) + (rp + np);

  BurauMorphism b = burau_word(pd.middle, pd.braid);

  RingMatrix P(gens, N);
  const std::size_t top_base = rm + nm;
  for (std::size_t l = 0; l < N; ++l) {
    std::size_t bot = detail::side_slot(l, pd.m_minus, 0);
    if (bot != static_cast<std::size_t>(-1)) P.at(bot, l) = LaurentPoly(1);
    for (std::size_t tl = 0; tl < N; ++tl) {
      std::size_t top = detail::side_slot(tl, pd.m_plus, top_base);
      if (top == static_cast<std::size_t>(-1)) continue;
      if (!b.matrix.at(tl, l).is_zero()) P.at(top, l) = -b.matrix.at(tl, l);
    }
  }
  return MVPresentation{Presentation{P}, rm, rp, nm, np};
}

inline GradedMap rho_plat_raw(const PlatDescription& pd) {
  MVPresentation mvp = build_presentation(pd);
  const std::size_t rm = mvp.rank_minus, rp = mvp.rank_plus;
  const long dk = pd.shift();
  const std::size_t gens = mvp.pres.generator_count();

  GradedMap rho = GradedMap::make(rm, rp, dk);
  for (std::size_t i = 0; i <= rm; ++i) {
    long jdeg = static_cast<long>(i) + dk;
    if (jdeg < 0 || jdeg > static_cast<long>(rp)) continue;
    auto Is = index_sets(rm, i);
    auto Js = index_sets(rp, static_cast<std::size_t>(jdeg));
    RingMatrix& block = rho.blocks[i];
    for (std::size_t jj = 0; jj < Js.size(); ++jj) {
      const IndexSet& J = Js[jj];
      IndexSet Jbar = set_complement(J, rp);
      int sg = wedge_sign(J, Jbar).first;
      for (std::size_t ii = 0; ii < Is.size(); ++ii) {
        std::vector<std::vector<LaurentPoly>> ucols;
        ucols.reserve(Is[ii].size() + Jbar.size());
        for (std::size_t g : Is[ii]) {
          std::vector<LaurentPoly> col(gens);
          col[mvp.gamma_minus_gen(g)] = LaurentPoly(1);
          ucols.push_back(std::move(col));
        }
        for (std::size_t g : Jbar) {
          std::vector<LaurentPoly> col(gens);
          col[mvp.gamma_plus_gen(g)] = LaurentPoly(1);
          ucols.push_back(std::move(col));
        }
        LaurentPoly v = alexander_function(mvp.pres, ucols);
        block.at(jj, ii) = sg < 0 ? -v : v;
      }
    }
  }
  return rho;
}

inline GradedMap rho_plat(const PlatDescription& pd) {
  GradedMap rho = rho_plat_raw(pd);
  rho.normalize_units();
  return rho;
}

// Generators of the subgroup of braids preserving the standard cups to the
// right of m free strands (n >= 1 cup pairs): the half twist of the first
// cup, the loop of the second cup strand around the first, and the swaps of
// adjacent cups.
inline std::vector<BraidWord> hilden_generators(std::size_t m, std::size_t n) {
  if (n < 1) throw std::invalid_argument("hilden_generators: need at least one cup");
  const std::size_t strands = m + 2 * n;
  auto ok = [&](std::size_t idx) { return idx >= 1 && idx <= strands - 1; };
  std::vector<BraidWord> out;
  auto add = [&](std::vector<std::size_t> idxs) {
    BraidWord w{strands, {}};
    for (std::size_t idx : idxs) {
      if (!ok(idx)) return;
      w.letters.push_back({static_cast<int>(idx), +1});
    }
    out.push_back(std::move(w));
  };
  add({m + 1});
  add({m + 2, m + 1, m + 1, m + 2});
  for (std::size_t i = 1; i + 1 <= n; ++i)
    add({m + 2 * i, m + 2 * i - 1, m + 2 * i + 1, m + 2 * i});
  return out;
}

// sigma -> sigma * sigma_s: two extra strands, one extra cup/cap pair at the
// right, and one crossing between the old last strand and the first new one.
// The new pair's sign is the old top's last sign so the boundary is unchanged.
inline PlatDescription stabilize(const PlatDescription& pd) {
  const std::size_t s = pd.strands();
  SignSequence top = pd.top_signs();
  int x = top.back();

  PlatDescription out = pd;
  out.braid.strands = s + 2;
  out.braid.letters.push_back({static_cast<int>(s), +1});
  out.middle.push_back(x);
  out.middle.push_back(-x);
  out.validate();
  return out;
}

// Hilden move on the cup side: insert h below the braid. The surface signs
// pull back through h.
inline PlatDescription hilden_move_bottom(const PlatDescription& pd, const BraidWord& h) {
  if (h.strands != pd.strands()) throw std::invalid_argument("hilden_move_bottom: strand mismatch");
  PlatDescription out = pd;
  out.middle = apply_word_to_signs(pd.middle, inverse_word(h));
  out.braid.letters = h.letters;
  out.braid.letters.insert(out.braid.letters.end(), pd.braid.letters.begin(),
                           pd.braid.letters.end());
  out.validate();
  return out;
}

// Hilden move on the cap side: append h above the braid.
inline PlatDescription hilden_move_top(const PlatDescription& pd, const BraidWord& h) {
  if (h.strands != pd.strands()) throw std::invalid_argument("hilden_move_top: strand mismatch");
  PlatDescription out = pd;
  out.braid.letters.insert(out.braid.letters.end(), h.letters.begin(), h.letters.end());
  out.validate();
  return out;
}

}  // namespace talex
