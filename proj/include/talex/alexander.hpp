#pragma once

// Alexander functions of finitely presented modules over Z[t, t^-1], and the
// graded family of matrices that carries the tangle invariant.
//
// A Presentation stores generators as rows and relators as columns, so that
// appending the k test columns of the Alexander function yields a square
// matrix: phi(u_1 ^ ... ^ u_k) = det [u_1 ... u_k | relators].

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "talex/exterior.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

struct Presentation {
  RingMatrix matrix;  // generator_count x relator_count

  std::size_t generator_count() const { return matrix.rows(); }
  std::size_t relator_count() const { return matrix.cols(); }
  long deficiency() const {
    return static_cast<long>(generator_count()) - static_cast<long>(relator_count());
  }
};

// u_columns: the k = deficiency test vectors, each of length generator_count,
// placed before the relator columns.
inline LaurentPoly alexander_function(const Presentation& pres,
                                      const std::vector<std::vector<LaurentPoly>>& u_columns) {
  const std::size_t g = pres.generator_count();
  const std::size_t p = pres.relator_count();
  if (static_cast<long>(u_columns.size()) != pres.deficiency())
    throw std::logic_error("alexander_function: wrong number of u-columns");
  RingMatrix sq(g, g);
  for (std::size_t j = 0; j < u_columns.size(); ++j) {
    if (u_columns[j].size() != g)
      throw std::logic_error("alexander_function: u-column has wrong length");
    for (std::size_t i = 0; i < g; ++i) sq.at(i, j) = u_columns[j][i];
  }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < g; ++i) sq.at(i, u_columns.size() + j) = pres.matrix.at(i, j);
  return sq.det();
}

// The graded family rho: blocks[i] maps Lambda^i (source) to Lambda^{i+shift}
// (target), stored for 0 <= i <= source_rank with C(n, r) = 0 outside range.
// Two families are equal iff all degrees agree after ONE shared unit.
struct GradedMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  long shift = 0;
  std::vector<RingMatrix> blocks;

  static GradedMap make(std::size_t source_rank, std::size_t target_rank, long shift) {
    GradedMap g{source_rank, target_rank, shift, {}};
    g.blocks.reserve(source_rank + 1);
    for (std::size_t i = 0; i <= source_rank; ++i)
      g.blocks.emplace_back(binomial(target_rank, static_cast<long>(i) + shift),
                            binomial(source_rank, static_cast<long>(i)));
    return g;
  }

  static GradedMap identity(std::size_t rank) {
    GradedMap g = make(rank, rank, 0);
    for (std::size_t i = 0; i <= rank; ++i) g.blocks[i] = RingMatrix::identity(binomial(rank, static_cast<long>(i)));
    return g;
  }

  bool is_zero() const {
    for (const auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }

  // Rescale so the first nonzero entry is canonical (min exponent 0, positive
  // lowest coefficient); a no-op on the zero family.
  GradedMap& normalize_units() {
    for (const auto& b : blocks)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b.at(r, c).is_zero()) {
            Unit u = b.at(r, c).normalize().second.inverse();
            for (auto& blk : blocks) blk = u * blk;
            return *this;
          }
    return *this;
  }

  bool operator==(const GradedMap& o) const {
    return source_rank == o.source_rank && target_rank == o.target_rank && shift == o.shift &&
           blocks == o.blocks;
  }
};

// g after f (degreewise product g_{i+shift(f)} * f_i, shifts added).
inline GradedMap graded_map_compose(const GradedMap& f, const GradedMap& g) {
  if (f.target_rank != g.source_rank)
    throw std::logic_error("graded_map_compose: rank mismatch");
  GradedMap out = GradedMap::make(f.source_rank, g.target_rank, f.shift + g.shift);
  for (std::size_t i = 0; i <= f.source_rank; ++i) {
    long mid = static_cast<long>(i) + f.shift;
    if (mid < 0 || mid > static_cast<long>(g.source_rank)) continue;  // factor through 0
    const RingMatrix& gi = g.blocks[static_cast<std::size_t>(mid)];
    const RingMatrix& fi = f.blocks[i];
    if (gi.rows() == 0 || fi.rows() == 0 || fi.cols() == 0) continue;
    out.blocks[i] = gi * fi;
  }
  return out;
}

// True iff there is a single unit u with f = u * g across every degree.
inline bool graded_map_eq(const GradedMap& f, const GradedMap& g) {
  if (f.source_rank != g.source_rank || f.target_rank != g.target_rank || f.shift != g.shift)
    return false;
  GradedMap a = f, b = g;
  a.normalize_units();
  b.normalize_units();
  return a == b;
}

}  // namespace talex
