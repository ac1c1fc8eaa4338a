#pragma once

// Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].
//
// A LaurentPoly is stored as (min_exp, coeffs) where coeffs[k] is the integer
// coefficient of t^{min_exp + k}. The representation is trimmed: coeffs is
// empty iff the polynomial is zero, and otherwise the first and last
// coefficients are nonzero. Coefficients are arbitrary-precision integers;
// plat determinants overflow 64 bits already for modest braid words.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace talex {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly;
struct Unit;

// A unit of Z[t, t^-1]: sign * t^exp with sign = +-1.
struct Unit {
  int sign = 1;
  std::int64_t exp = 0;

  Unit inverse() const { return Unit{sign, -exp}; }
  Unit operator*(const Unit& o) const { return Unit{sign * o.sign, exp + o.exp}; }
  bool operator==(const Unit& o) const = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long v) {  // implicit: integers embed in the ring
    if (v != 0) {
      min_exp_ = 0;
      coeffs_.push_back(Int(v));
    }
  }
  explicit LaurentPoly(Int v) {
    if (v != 0) {
      min_exp_ = 0;
      coeffs_.push_back(std::move(v));
    }
  }

  // c * t^e
  static LaurentPoly term(Int c, std::int64_t e) {
    LaurentPoly p;
    if (c != 0) {
      p.min_exp_ = e;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }
  static LaurentPoly t(std::int64_t e = 1) { return term(1, e); }
  static LaurentPoly from_unit(const Unit& u) { return term(u.sign, u.exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1; }

  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
      if (c != 0) ++n;
    return n;
  }

  Int coeff(std::int64_t e) const {
    if (is_zero() || e < min_exp_ || e > max_exp()) return Int(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    std::int64_t lo = std::min(p.min_exp_, q.min_exp_);
    std::int64_t hi = std::max(p.max_exp(), q.max_exp());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(p.min_exp_ - lo) + k] += p.coeffs_[k];
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(q.min_exp_ - lo) + k] += q.coeffs_[k];
    return make(lo, std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out = p;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return LaurentPoly();
    std::vector<Int> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        if (q.coeffs_[j] != 0) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return make(p.min_exp_ + q.min_exp_, std::move(out));
  }

  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  friend LaurentPoly operator*(const Unit& u, const LaurentPoly& p) {
    LaurentPoly out = p;
    out.min_exp_ += u.exp;
    if (u.sign < 0)
      for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  bool operator==(const LaurentPoly& o) const {
    return (is_zero() && o.is_zero()) || (min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_);
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // True iff *this is a unit of the ring, i.e. a single term with coefficient +-1.
  bool is_unit() const {
    return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
  }

  Unit as_unit() const {
    if (!is_unit()) throw std::logic_error("LaurentPoly::as_unit: not a unit");
    return Unit{coeffs_[0] < 0 ? -1 : 1, min_exp_};
  }

  // Canonical form under the unit action: p = u * canonical where the canonical
  // representative is zero or has min_exp = 0 and positive lowest coefficient.
  std::pair<LaurentPoly, Unit> normalize() const {
    if (is_zero()) return {LaurentPoly(), Unit{}};
    Unit u{coeffs_.front() < 0 ? -1 : 1, min_exp_};
    return {u.inverse() * *this, u};
  }

  friend bool eq_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
    return p.normalize().first == q.normalize().first;
  }

  // Exact division; throws if q does not divide p in Z[t, t^-1].
  friend LaurentPoly divexact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::logic_error("divexact: division by zero");
    if (p.is_zero()) return LaurentPoly();
    std::vector<Int> rem = p.coeffs_;
    const std::vector<Int>& d = q.coeffs_;
    if (rem.size() < d.size()) throw std::logic_error("divexact: not divisible");
    std::vector<Int> quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
      Int& lead = rem[k + d.size() - 1];
      if (lead == 0) continue;
      if (lead % d.back() != 0) throw std::logic_error("divexact: not divisible");
      Int q0 = lead / d.back();
      for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q0 * d[j];
      quot[k] = std::move(q0);
    }
    for (const auto& c : rem)
      if (c != 0) throw std::logic_error("divexact: nonzero remainder");
    return make(p.min_exp_ - q.min_exp_, std::move(quot));
  }

  // Renders as e.g. "-2*t^-1 + 3 - t^2": terms in increasing exponent.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Int& c = coeffs_[k];
      if (c == 0) continue;
      std::int64_t e = min_exp_ + static_cast<std::int64_t>(k);
      bool neg = c < 0;
      Int a = neg ? Int(-c) : c;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << '*';
        os << 't';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  static LaurentPoly make(std::int64_t lo, std::vector<Int> cs) {
    std::size_t b = 0, e = cs.size();
    while (b < e && cs[b] == 0) ++b;
    while (e > b && cs[e - 1] == 0) --e;
    LaurentPoly p;
    if (b < e) {
      p.min_exp_ = lo + static_cast<std::int64_t>(b);
      p.coeffs_.assign(cs.begin() + static_cast<std::ptrdiff_t>(b),
                       cs.begin() + static_cast<std::ptrdiff_t>(e));
    }
    return p;
  }

  std::int64_t min_exp_ = 0;
  std::vector<Int> coeffs_;  // empty iff zero; ends nonzero otherwise
};

inline LaurentPoly operator*(const LaurentPoly& p, const Unit& u) { return u * p; }

// 1 + t + ... + t^{n-1}
inline LaurentPoly cyclotomic_sum(int n) {
  LaurentPoly s;
  for (int i = 0; i < n; ++i) s += LaurentPoly::t(i);
  return s;
}

}  // namespace talex
