#include "tropconic/scalar.hpp"

#include <cctype>

namespace tropconic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den))
      throw input_error("bad rational '" + std::string(text) +
                        "': denominator must be a positive integer");
  }
  if (!all_digits(num))
    throw input_error("bad rational '" + std::string(text) + "'");

  Rational q;
  std::string plain = std::string(num) + (den.empty() ? "" : "/" + std::string(den));
  if (mpq_set_str(q.get_mpq_t(), plain.c_str(), 10) != 0)
    throw input_error("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw input_error("bad rational '" + std::string(text) + "': denominator is zero");
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

TropScalar t_add(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar t_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_bottom() || b.is_bottom()) return TropScalar::bottom();
  return TropScalar(a.value() + b.value());
}

TropScalar t_pow(const TropScalar& a, long k) {
  if (k == 0) return TropScalar(0L);
  if (a.is_bottom()) {
    if (k < 0) throw input_error("t_pow: negative power of -inf");
    return TropScalar::bottom();
  }
  return TropScalar(Rational(k * a.value()));
}

TropScalar nonneg_part(const TropScalar& a) { return t_add(a, TropScalar(0L)); }

TropScalar parse_scalar(std::string_view text) {
  if (text == "-inf") return TropScalar::bottom();
  return TropScalar(parse_rational(text));
}

std::string format_scalar(const TropScalar& a) {
  return a.is_bottom() ? "-inf" : format_rational(a.value());
}

}  // namespace tropconic
