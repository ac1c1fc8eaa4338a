#pragma once

// Independent ground truth: the Alexander polynomial of a braid closure from
// the reduced Burau matrix, det(b - Id) = Delta * (t^n - 1)/(t - 1) up to a
// unit, evaluated at the all-plus specialization. Also strand tracing for
// component counts of closures, and the standard embedding of a braid closure
// as a (1,1)-tangle word (cut strand 1, nest the other closure arcs).

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "talex/burau.hpp"
#include "talex/laurent.hpp"
#include "talex/tangle.hpp"

namespace talex {

inline std::size_t closure_component_count(const BraidWord& w) {
  auto perm = braid_permutation(w);
  std::vector<bool> seen(w.strands, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
    }
  }
  return cycles;
}

// Alexander polynomial of the closure of w, canonical up to units. Zero for
// split closures.
inline LaurentPoly closed_braid_oracle(const BraidWord& w) {
  const std::size_t n = w.strands;
  SignSequence plus(n, +1);
  BurauMorphism b = burau_word(plus, w);
  RingMatrix d = b.matrix;
  for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, i) -= LaurentPoly(1);
  LaurentPoly q = d.det();
  if (q.is_zero()) return LaurentPoly();
  LaurentPoly delta = divexact(q, cyclotomic_sum(static_cast<int>(n)));
  return delta.normalize().first;
}

// Number of components of the link closed off from a tangle word: arcs merge
// at cups and caps, and for a (1,1)-tangle the two free ends join.
inline std::size_t word_closure_components(const TangleWord& w) {
  SignSequence top = validate(w);
  std::vector<std::size_t> parent;
  auto fresh = [&parent]() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  std::vector<std::size_t> arcs;
  std::vector<std::size_t> bottom_arcs;
  for (std::size_t i = 0; i < w.bottom.size(); ++i) {
    arcs.push_back(fresh());
    bottom_arcs.push_back(arcs.back());
  }
  for (const TangleLetter& l : w.letters) {
    std::size_t j = static_cast<std::size_t>(l.index);
    switch (l.kind) {
      case TangleLetter::Kind::Braid:
        std::swap(arcs[j - 1], arcs[j]);
        break;
      case TangleLetter::Kind::Cup: {
        std::size_t a = fresh(), b = fresh();
        unite(a, b);
        arcs.insert(arcs.begin() + static_cast<long>(j), {a, b});
        break;
      }
      case TangleLetter::Kind::Cap:
        unite(arcs[j], arcs[j + 1]);
        arcs.erase(arcs.begin() + static_cast<long>(j), arcs.begin() + static_cast<long>(j) + 2);
        break;
    }
  }
  if (w.bottom.size() == 1 && top.size() == 1) unite(bottom_arcs[0], arcs[0]);
  std::vector<bool> root(parent.size(), false);
  for (std::size_t i = 0; i < parent.size(); ++i) root[find(i)] = true;
  std::size_t c = 0;
  for (bool r : root) c += r ? 1 : 0;
  return c;
}

// A (1,1)-tangle word whose closure is the closure of w: cut the first strand,
// create the n-1 return strands with cups, route the braid strands together,
// run w, route back, and cap the return pairs.
inline TangleWord braid_closure_to_11_word(const BraidWord& w) {
  const std::size_t n = w.strands;
  if (n < 1) throw std::invalid_argument("braid_closure_to_11_word: empty braid");
  TangleWord out;
  out.bottom = {+1};
  if (n == 1) return out;

  for (std::size_t i = 0; i + 1 < n; ++i) out.letters.push_back(TangleLetter::cup(1, -1));
  // Sequence is now (+, -, +, -, +, ...): upward strands at even positions.
  // Bring the upward strands to positions 0..n-1 with |down strands| pushed right.
  std::vector<int> route;
  for (std::size_t s = 1; s < n; ++s) {
    // Upward strand s sits at position 2s; walk it left to position s.
    for (std::size_t p = 2 * s; p > s; --p) route.push_back(static_cast<int>(p));
  }
  for (int r : route) out.letters.push_back(TangleLetter::braid(r, +1));
  for (const BraidLetter& l : w.letters) out.letters.push_back(TangleLetter::braid(l.index, l.sign));
  for (auto it = route.rbegin(); it != route.rend(); ++it)
    out.letters.push_back(TangleLetter::braid(*it, -1));
  for (std::size_t i = 0; i + 1 < n; ++i) out.letters.push_back(TangleLetter::cap(1, -1));
  validate(out);
  return out;
}

}  // namespace talex
