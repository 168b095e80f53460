#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isorel {

// Ground field: the rationals, exactly. mpq_class keeps values gcd-reduced
// with positive denominator; zero is 0/1. Everything above this header is
// field-agnostic, so retargeting means replacing this alias and the three
// helpers below.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Accepts "-3" or "-3/7" (denominator unsigned and nonzero); canonicalizes.
// Throws std::invalid_argument on anything else.
Scalar parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 1.
std::string rational_to_string(const Scalar& x);

bool is_integer(const Scalar& x);

// Requires is_integer(x) and a value that fits in long.
long to_long(const Scalar& x);

bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

}  // namespace isorel
