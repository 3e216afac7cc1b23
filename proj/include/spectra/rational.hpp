#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spectra {

/// Exact rational number. mpq_class keeps numerator/denominator coprime with
/// a positive denominator as long as values are canonicalized after
/// construction from raw parts, which every helper here does.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "17", "-3/6", "+2". The result is canonical.
Rat parse_rat(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace spectra
