#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "largeness/error.hpp"
#include "largeness/ordinal.hpp"

namespace largeness {

namespace detail {

inline void format_ordinal(std::string& out, const Ordinal& a);

inline void format_exponent(std::string& out, const Ordinal& e) {
  if (e.is_finite() || e == Ordinal::omega()) {
    format_ordinal(out, e);
  } else {
    out += '(';
    format_ordinal(out, e);
    out += ')';
  }
}

inline void format_ordinal(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::finite(1)) {
      out += '^';
      format_exponent(out, t.exponent);
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
}

/// Recursive-descent parser over the grammar
///   ord  := "0" | term ("+" term)*
///   term := nat | "w" ["^" atom] ["*" nat]
///   atom := nat | "w" | "(" ord ")"
class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_ord();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  Nat parse_nat() {
    if (!peek_digit()) throw ParseError(pos_, "expected a natural number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    return Nat(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal parse_atom() {
    if (peek('(')) {
      ++pos_;
      Ordinal inner = parse_ord();
      expect(')');
      return inner;
    }
    if (peek('w')) {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal::finite(parse_nat());
  }

  Term parse_term() {
    const std::size_t start = (skip_ws(), pos_);
    if (peek_digit()) {
      Nat n = parse_nat();
      if (n.is_zero()) throw ParseError(start, "zero term inside a sum");
      return Term{Ordinal(), n};
    }
    expect('w');
    Ordinal exponent = Ordinal::finite(1);
    if (peek('^')) {
      ++pos_;
      exponent = parse_atom();
    }
    Nat coefficient = 1;
    if (peek('*')) {
      ++pos_;
      const std::size_t at = (skip_ws(), pos_);
      coefficient = parse_nat();
      if (coefficient.is_zero()) throw ParseError(at, "zero coefficient");
    }
    return Term{std::move(exponent), std::move(coefficient)};
  }

  Ordinal parse_ord() {
    skip_ws();
    if (peek('0')) {
      const std::size_t start = pos_;
      std::size_t end = pos_ + 1;
      if (end >= text_.size() || text_[end] < '0' || text_[end] > '9') {
        pos_ = end;
        if (peek('+')) throw ParseError(start, "zero term inside a sum");
        return Ordinal();
      }
    }
    std::vector<Term> terms;
    while (true) {
      const std::size_t start = (skip_ws(), pos_);
      Term t = parse_term();
      if (!terms.empty() && !(t.exponent < terms.back().exponent))
        throw ParseError(start, "terms are not in strictly decreasing Cantor normal form");
      terms.push_back(std::move(t));
      if (!peek('+')) break;
      ++pos_;
    }
    return Ordinal::from_cnf(std::move(terms));
  }
};

}  // namespace detail

inline std::string to_string(const Ordinal& a) {
  std::string out;
  detail::format_ordinal(out, a);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse_all();
}

namespace literals {
inline Ordinal operator""_ord(const char* text, std::size_t n) {
  return parse_ordinal(std::string_view(text, n));
}
}  // namespace literals

}  // namespace largeness
