#include "isorel/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace isorel {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) ++start;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw std::invalid_argument("not a rational literal: '" + text + "'");
  // mpq_set_str rejects a leading '+'; drop it.
  Scalar x(text[0] == '+' ? text.substr(1) : text);
  // mpq_class("p/0") does not throw; reject explicitly.
  if (mpz_sgn(mpq_denref(x.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  x.canonicalize();
  return x;
}

std::string rational_to_string(const Scalar& x) { return x.get_str(); }

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

long to_long(const Scalar& x) {
  if (!is_integer(x)) throw std::domain_error("rational is not an integer");
  if (!x.get_num().fits_slong_p()) throw std::domain_error("integer too large for long");
  return x.get_num().get_si();
}

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

}  // namespace isorel
