#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fuzzdyn {

// Every quantity in this library is exact. Rat is a GMP rational kept in
// canonical form: reduced fraction, positive denominator.
using Rat = mpq_class;

// Canonical rational num/den. den must be nonzero.
Rat rat(long num, long den = 1);

// Parses "p/q" or "p", with an optional leading minus on p.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

// Serializes as "p/q", or just "p" when the denominator is one.
std::string rat_str(const Rat& r);

double rat_approx(const Rat& r);

Rat rat_abs(const Rat& r);

// Largest integer not exceeding r, returned as a rational.
Rat rat_floor(const Rat& r);

// Fractional part in [0, 1).
Rat wrap_unit(const Rat& r);

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace fuzzdyn
