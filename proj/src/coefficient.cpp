#include "ckstar/coefficient.hpp"

#include "ckstar/error.hpp"

#include <cctype>

namespace ckstar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::invalid_graph: return "invalid_graph";
    case ErrorCode::invalid_path: return "invalid_path";
    case ErrorCode::composition_mismatch: return "composition_mismatch";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::non_composable: return "non_composable";
    case ErrorCode::unsupported_root_order: return "unsupported_root_order";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::window_too_short: return "window_too_short";
    case ErrorCode::search_failure: return "search_failure";
    case ErrorCode::loops_not_equalizable: return "loops_not_equalizable";
    case ErrorCode::precondition: return "precondition";
  }
  return "unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::precondition, "zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational Coefficient::norm_squared() const { return Rational(re_ * re_ + im_ * im_); }

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient Coefficient::root_of_unity(int order, long long power) {
  if (order != 1 && order != 2 && order != 4) {
    throw Error(ErrorCode::unsupported_root_order,
                "only roots of unity of order 1, 2 or 4 are exact; got " + std::to_string(order));
  }
  // Express as a power of i: a primitive n-th root is i^(4/n).
  long long quarter_turns = (power % order + order) % order * (4 / order);
  switch (quarter_turns % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

std::string Coefficient::to_string() const {
  if (is_real()) return format_rational(re_);
  return format_rational(re_) + (sgn(im_) < 0 ? " - " : " + ") + format_rational(abs(im_)) + "i";
}

}  // namespace ckstar
