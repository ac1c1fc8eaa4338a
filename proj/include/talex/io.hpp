#pragma once

// Text forms used by the CLI and the corpus files.
//
//   polynomial   -2*t^-1 + 3 - t^2         (terms in increasing exponent)
//   signs        ++-                        (one +/- per point)
//   braid word   s1 s2^-1 s1                (s<i> with optional ^k)
//   tangle word  bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)
//   plat         strands=3; signs=++-; braid=s1 s1 s1; bottom=1; top=1
//
// cup@k / cap@k place the pair immediately after the k-th point (k = 0 puts
// it at the left end), i.e. the pair occupies 0-based positions (k, k+1).

#include <cctype>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "talex/burau.hpp"
#include "talex/laurent.hpp"
#include "talex/plat.hpp"
#include "talex/tangle.hpp"

namespace talex {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& why)
      : std::runtime_error("parse error at " + std::to_string(pos + 1) + ": " + why),
        position(pos) {}
};

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return i < s.size() ? s[i] : '\0'; }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(i, std::string("expected '") + c + "' (" + what + ")");
  }
  long integer() {
    skip_ws();
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(start, "expected an integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > (std::numeric_limits<long>::max() - 9) / 10)
        throw ParseError(start, "integer out of range");
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  }

  // Coefficients can exceed machine integers; exponents cannot in practice.
  Int big_integer() {
    skip_ws();
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(start, "expected an integer");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? Int(-v) : v;
  }
};

}  // namespace detail

inline LaurentPoly parse_laurent(const std::string& text) {
  detail::Cursor c{text};
  LaurentPoly out;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+'))
      sign = 1;
    else if (!first)
      throw ParseError(c.i, "expected '+' or '-' between terms");
    first = false;
    c.skip_ws();
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.big_integer();
      have_coeff = true;
      c.skip_ws();
      if (c.peek() == '*') ++c.i;
      c.skip_ws();
    }
    std::int64_t exp = 0;
    if (c.peek() == 't') {
      ++c.i;
      exp = 1;
      c.skip_ws();
      if (c.peek() == '^') {
        ++c.i;
        exp = c.integer();
      }
    } else if (!have_coeff) {
      throw ParseError(c.i, "expected a coefficient or 't'");
    }
    out += LaurentPoly::term(sign < 0 ? Int(-coeff) : coeff, exp);
  }
  return out;
}

inline std::string render_signs(const SignSequence& e) {
  std::string out;
  for (int x : e) out += x > 0 ? '+' : '-';
  return out;
}

inline SignSequence parse_signs(const std::string& text) {
  SignSequence out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+')
      out.push_back(+1);
    else if (ch == '-')
      out.push_back(-1);
    else
      throw ParseError(i, "expected '+' or '-' in sign sequence");
  }
  if (out.empty()) throw ParseError(0, "empty sign sequence");
  return out;
}

namespace detail {

// s<i> with optional ^k; appends |k| letters of sign sgn(k).
inline void parse_braid_letter(Cursor& c, std::vector<BraidLetter>& out) {
  c.expect('s', "braid letter");
  long idx = c.integer();
  if (idx < 1) throw ParseError(c.i, "braid index must be >= 1");
  long rep = 1;
  c.skip_ws();
  if (c.peek() == '^') {
    ++c.i;
    rep = c.integer();
    if (rep == 0) return;
  }
  int sign = rep > 0 ? +1 : -1;
  for (long k = 0; k < (rep > 0 ? rep : -rep); ++k)
    out.push_back({static_cast<int>(idx), sign});
}

}  // namespace detail

// Whitespace-separated letters; strand count supplied by the caller.
inline BraidWord parse_braid_word(const std::string& text, std::size_t strands) {
  detail::Cursor c{text};
  BraidWord w{strands, {}};
  while (!c.done()) detail::parse_braid_letter(c, w.letters);
  for (const BraidLetter& l : w.letters)
    if (static_cast<std::size_t>(l.index) >= strands)
      throw ParseError(0, "braid index " + std::to_string(l.index) + " needs more strands");
  return w;
}

inline std::string render_braid_word(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline TangleWord parse_tangle_word(const std::string& text) {
  detail::Cursor c{text};
  c.skip_ws();
  static const std::string kBottom = "bottom:";
  if (text.compare(c.i, kBottom.size(), kBottom) != 0)
    throw ParseError(c.i, "expected 'bottom:<signs>'");
  c.i += kBottom.size();
  TangleWord w;
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < text.size() && (text[c.i] == '+' || text[c.i] == '-')) ++c.i;
  w.bottom = parse_signs(text.substr(start, c.i - start));

  while (!c.done()) {
    c.expect(';', "letter separator");
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == 's') {
      std::vector<BraidLetter> ls;
      detail::parse_braid_letter(c, ls);
      for (const BraidLetter& l : ls) w.letters.push_back(TangleLetter::braid(l.index, l.sign));
      continue;
    }
    bool is_cup;
    if (text.compare(c.i, 4, "cup@") == 0) {
      is_cup = true;
      c.i += 4;
    } else if (text.compare(c.i, 4, "cap@") == 0) {
      is_cup = false;
      c.i += 4;
    } else {
      throw ParseError(c.i, "expected 's<i>', 'cup@<j>(..)' or 'cap@<j>(..)'");
    }
    long j = c.integer();
    if (j < 0) throw ParseError(c.i, "position must be >= 0");
    c.expect('(', "orientation");
    c.skip_ws();
    int s;
    if (text.compare(c.i, 2, "+-") == 0)
      s = +1;
    else if (text.compare(c.i, 2, "-+") == 0)
      s = -1;
    else
      throw ParseError(c.i, "orientation must be (+-) or (-+)");
    c.i += 2;
    c.expect(')', "orientation");
    w.letters.push_back(is_cup ? TangleLetter::cup(static_cast<int>(j), s)
                               : TangleLetter::cap(static_cast<int>(j), s));
  }
  return w;
}

inline std::string render_tangle_word(const TangleWord& w) {
  std::string out = "bottom:" + render_signs(w.bottom);
  for (const TangleLetter& l : w.letters) {
    out += " ; ";
    switch (l.kind) {
      case TangleLetter::Kind::Braid:
        out += 's' + std::to_string(l.index) + (l.sign < 0 ? "^-1" : "");
        break;
      case TangleLetter::Kind::Cup:
        out += "cup@" + std::to_string(l.index) + (l.sign > 0 ? "(+-)" : "(-+)");
        break;
      case TangleLetter::Kind::Cap:
        out += "cap@" + std::to_string(l.index) + (l.sign > 0 ? "(+-)" : "(-+)");
        break;
    }
  }
  return out;
}

// Key=value plat form: strands, signs, braid (may be empty), bottom, top.
inline PlatDescription parse_plat_text(const std::string& text) {
  PlatDescription pd;
  long strands = -1, bottom = -1, top = -1;
  std::string signs, braid;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t end = text.find(';', i);
    if (end == std::string::npos) end = text.size();
    std::string field = text.substr(i, end - i);
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) {
      bool blank = true;
      for (char ch : field)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) throw ParseError(i, "expected key=value");
      i = end + 1;
      continue;
    }
    auto trim = [](std::string v) {
      std::size_t b = v.find_first_not_of(" \t");
      std::size_t e = v.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    std::string key = trim(field.substr(0, eq)), val = trim(field.substr(eq + 1));
    auto count = [i, &key](const std::string& v) {
      detail::Cursor c{v};
      long n = c.integer();
      if (!c.done()) throw ParseError(i, "trailing characters after " + key);
      return n;
    };
    if (key == "strands")
      strands = count(val);
    else if (key == "signs")
      signs = val;
    else if (key == "braid")
      braid = val;
    else if (key == "bottom")
      bottom = count(val);
    else if (key == "top")
      top = count(val);
    else
      throw ParseError(i, "unknown plat field '" + key + "'");
    i = end + 1;
  }
  if (strands < 1 || bottom < 0 || top < 0 || signs.empty())
    throw ParseError(0, "plat needs strands, signs, bottom, top");
  pd.braid = parse_braid_word(braid, static_cast<std::size_t>(strands));
  pd.middle = parse_signs(signs);
  pd.m_minus = static_cast<std::size_t>(bottom);
  pd.m_plus = static_cast<std::size_t>(top);
  pd.validate();
  return pd;
}

inline std::string render_plat_text(const PlatDescription& pd) {
  return "strands=" + std::to_string(pd.strands()) + "; signs=" + render_signs(pd.middle) +
         "; braid=" + render_braid_word(pd.braid) + "; bottom=" + std::to_string(pd.m_minus) +
         "; top=" + std::to_string(pd.m_plus);
}

// Balanced-exponent rendering: defined when the exponent span is even.
inline bool has_symmetric_form(const LaurentPoly& p) {
  return !p.is_zero() && (p.max_exp() - p.min_exp()) % 2 == 0;
}

inline std::string render_symmetric(const LaurentPoly& p) {
  if (!has_symmetric_form(p)) return p.to_string();
  std::int64_t mid = p.min_exp() + (p.max_exp() - p.min_exp()) / 2;
  return (Unit{1, -mid} * p).to_string();
}

}  // namespace talex
