#pragma once

// Dense matrices over Z[t, t^-1] with exact determinants.
//
// det() runs fraction-free Bareiss elimination with full row/column pivoting
// (any nonzero entry may serve as pivot; sign bookkeeping tracks the swaps)
// and exact division by the previous pivot. A sparse pre-pass peels off rows
// and columns with a single nonzero entry first; the presentation matrices
// produced by the plat engine are mostly indicator columns, so this collapses
// the bulk of each determinant before elimination starts.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("RingMatrix: size mismatch in product");
    RingMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const LaurentPoly& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend RingMatrix operator*(const LaurentPoly& s, const RingMatrix& a) {
    RingMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = s * a.entries_[i];
    return out;
  }
  friend RingMatrix operator*(const Unit& u, const RingMatrix& a) {
    RingMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = u * a.entries_[i];
    return out;
  }

  RingMatrix submatrix(const std::vector<std::size_t>& rs,
                       const std::vector<std::size_t>& cs) const {
    RingMatrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, j) = at(rs[i], cs[j]);
    return out;
  }

  LaurentPoly det() const {
    if (rows_ != cols_) throw std::logic_error("det: matrix not square");
    RingMatrix work = *this;
    int sign = 1;
    LaurentPoly scale(1);
    if (!work.peel_singletons(sign, scale)) return LaurentPoly();
    std::size_t n = work.rows_;
    if (n == 0) return sign < 0 ? -scale : scale;

    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t pr = n, pc = n;
      std::size_t best = static_cast<std::size_t>(-1);
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const LaurentPoly& e = work.at(i, j);
          if (e.is_zero()) continue;
          std::size_t w = e.term_count();
          if (w < best) {
            best = w;
            pr = i;
            pc = j;
          }
        }
      if (pr == n) return LaurentPoly();  // no nonzero pivot left
      if (pr != k) {
        work.swap_rows(pr, k);
        sign = -sign;
      }
      if (pc != k) {
        work.swap_cols(pc, k);
        sign = -sign;
      }
      const LaurentPoly pivot = work.at(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          LaurentPoly num = pivot * work.at(i, j) - work.at(i, k) * work.at(k, j);
          work.at(i, j) = num.is_zero() ? LaurentPoly() : divexact(num, prev);
        }
        work.at(i, k) = LaurentPoly();
      }
      prev = pivot;
    }
    LaurentPoly d = scale * work.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
  }

  // det of the submatrix with rows I and columns J (each strictly increasing).
  LaurentPoly minor(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J) const {
    if (I.size() != J.size()) throw std::logic_error("minor: |I| != |J|");
    return submatrix(I, J).det();
  }

  // det(A) * (Lambda^r A^{-1})_{I,J} without inverting A, via Jacobi's identity:
  //   det(A) * (Lambda^r A^{-1})_{I,J} = (-1)^{sum I + sum J} * det(A[~J, ~I]).
  LaurentPoly jacobi_complementary(const std::vector<std::size_t>& I,
                                   const std::vector<std::size_t>& J) const {
    if (rows_ != cols_) throw std::logic_error("jacobi_complementary: matrix not square");
    if (I.size() != J.size()) throw std::logic_error("jacobi_complementary: |I| != |J|");
    std::size_t s = 0;
    for (std::size_t i : I) s += i;
    for (std::size_t j : J) s += j;
    LaurentPoly m = minor(complement(J, rows_), complement(I, rows_));
    return (s % 2) ? -m : m;
  }

  // Exact inverse; valid only when det is a unit (Burau matrices and the
  // cap-engine basis changes are).
  RingMatrix inverse_unit_det() const {
    if (rows_ != cols_) throw std::logic_error("inverse: matrix not square");
    LaurentPoly d = det();
    if (!d.is_unit()) throw std::logic_error("inverse: determinant is not a unit");
    Unit ui = d.as_unit().inverse();
    RingMatrix out(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j)
        out.at(i, j) = ui * jacobi_complementary({i}, {j});
    return out;
  }

  static std::vector<std::size_t> complement(const std::vector<std::size_t>& S, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - S.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k < S.size() && S[k] == i)
        ++k;
      else
        out.push_back(i);
    }
    return out;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }

  // Repeatedly expand rows/columns holding a single nonzero entry, shrinking
  // the matrix in place; cofactor signs accumulate into `sign`, peeled entries
  // into `scale`. Returns false when a zero row/column forces det = 0. On
  // success *this is the residual core: det(original) = sign * scale * det(core).
  bool peel_singletons(int& sign, LaurentPoly& scale) {
    bool progress = true;
    while (progress && rows_ > 0) {
      progress = false;
      for (std::size_t j = 0; j < cols_ && rows_ > 0; ++j) {
        std::size_t cnt = 0, hit = 0;
        for (std::size_t i = 0; i < rows_; ++i)
          if (!at(i, j).is_zero()) {
            ++cnt;
            hit = i;
          }
        if (cnt == 0) return false;
        if (cnt == 1) {
          if ((hit + j) % 2) sign = -sign;
          scale *= at(hit, j);
          remove_row_col(hit, j);
          progress = true;
          --j;
        }
      }
      for (std::size_t i = 0; i < rows_ && rows_ > 0; ++i) {
        std::size_t cnt = 0, hit = 0;
        for (std::size_t j = 0; j < cols_; ++j)
          if (!at(i, j).is_zero()) {
            ++cnt;
            hit = j;
          }
        if (cnt == 0) return false;
        if (cnt == 1) {
          if ((i + hit) % 2) sign = -sign;
          scale *= at(i, hit);
          remove_row_col(i, hit);
          progress = true;
          --i;
        }
      }
    }
    return !scale.is_zero();
  }

  void remove_row_col(std::size_t r, std::size_t c) {
    std::vector<LaurentPoly> next((rows_ - 1) * (cols_ - 1));
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == c) continue;
        next[k++] = std::move(at(i, j));
      }
    }
    --rows_;
    --cols_;
    entries_ = std::move(next);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

}  // namespace talex
