#pragma once

#include <gmpxx.h>

#include <string>

namespace pvertex {

// Exact arbitrary-precision rational scalar. mpq_class values stay canonical
// (fully reduced, denominator > 0) as long as every raw num/den construction
// goes through canonicalize(); the helpers below are the only construction
// paths used in this codebase.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p" or "p/q" with arbitrary-precision parts; result is
// canonicalized ("2/4" parses to 1/2). Throws ParseError on malformed text
// or a zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

}  // namespace pvertex
