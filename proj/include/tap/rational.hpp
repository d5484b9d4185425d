#pragma once

#include <gmpxx.h>

#include <string>

namespace tap {

/// Exact rational number. All solver arithmetic goes through this type;
/// doubles appear only in human-readable output.
using Rat = mpq_class;

/// Build a canonical rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

/// Parse "p/q" or "p" (optional leading '-'). Throws SchemaError on anything else.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// k-th harmonic number 1 + 1/2 + ... + 1/k as an exact rational; H(0) = 0.
Rat harmonic(long k);

double rat_to_double(const Rat& r);

}  // namespace tap
