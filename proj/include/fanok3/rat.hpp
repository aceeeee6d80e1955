#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fanok3 {

using Int = mpz_class;
using Rat = mpq_class;  // canonical: gcd(|num|, den) = 1, den >= 1

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" or "p"; used by the CLI and the JSON report (rationals never serialize
// as floats).
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

Rat rat_pow(const Rat& base, unsigned long e);

// q mod 2Z normalized into [0, 2); q mod 1Z into [0, 1).
Rat mod2(const Rat& q);
Rat mod1(const Rat& q);

// Exact integer square root test.
std::optional<Int> int_sqrt(const Int& n);
// Rational square test: returns r >= 0 with r*r == q if q is a square.
std::optional<Rat> rat_sqrt(const Rat& q);

}  // namespace fanok3
