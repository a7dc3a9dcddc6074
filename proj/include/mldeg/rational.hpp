#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mldeg {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q" and finite decimals such as "-1.25". Result is canonical.
std::optional<Rational> parse_rational(std::string_view text);

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace mldeg
