#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vcgap {

// Exact rational arithmetic. GMP's mpq_class keeps every value canonical
// (lowest terms, positive denominator), which all certificate checks in
// this project rely on. No floating point anywhere.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0, digits only after the slash).
// Throws ParseError on malformed text or a zero denominator.
Rat rat_parse(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

std::vector<std::string> rat_strs(const std::vector<Rat>& values);

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace vcgap
