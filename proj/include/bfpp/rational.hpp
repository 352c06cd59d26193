#pragma once

#include <cctype>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfpp/errors.hpp"

namespace bfpp {

/// Exact arbitrary-precision rational. All function values in the library use it.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

// Hand-rolled recursive-descent cursor shared by the text grammars.
class Cursor {
public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c))
      fail(std::string("expected '") + c + "'" + found());
  }

  void expect(std::string_view word) {
    if (!consume(word))
      fail("expected '" + std::string(word) + "'" + found());
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a natural number" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t natural() {
    std::size_t at = position();
    std::string d = digits();
    try {
      return std::stoull(d);
    } catch (std::out_of_range const&) {
      throw ParseError("natural number '" + d + "' out of range", at);
    }
  }

  std::size_t position() {
    skip_ws();
    return base_ + pos_;
  }

  void expect_end() {
    if (!at_end())
      fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(std::string const& msg) { throw ParseError(msg, position()); }

private:
  std::string found() {
    if (pos_ >= text_.size())
      return ", found end of input";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline Rational parse_rational(Cursor& in) {
  bool negative = in.consume('-');
  if (!negative)
    in.consume('+');
  Integer num(in.digits());
  Integer den(1);
  if (in.peek() == '/') {
    std::size_t at = in.position();
    in.expect('/');
    den = Integer(in.digits());
    if (den == 0)
      throw ParseError("zero denominator", at);
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

} // namespace detail

/// Parses `p/q`, `-p/q` or an integer.
inline Rational parse_rational(std::string_view text) {
  detail::Cursor in(text);
  Rational r = detail::parse_rational(in);
  in.expect_end();
  return r;
}

/// Canonical text: reduced `p/q`, or `p` when the denominator is 1.
inline std::string format_rational(Rational const& q) { return q.str(); }

inline Rational abs(Rational const& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(Rational const& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

} // namespace bfpp
