#pragma once

#include <array>
#include <map>
#include <string>

#include "fanok3/rat.hpp"

namespace fanok3 {

// Sparse Laurent polynomial in (x, y, z) over Q; exponents may be negative.
class MultiPoly {
  public:
    using Exp = std::array<int, 3>;

    MultiPoly() = default;
    static MultiPoly term(const Rat& c, int a, int b, int cc);
    static MultiPoly constant(const Rat& c) { return term(c, 0, 0, 0); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, Rat>& terms() const { return t_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    MultiPoly pow(int e) const;

    // Multiply by the minimal monomial x^a y^b z^c making all exponents
    // non-negative.
    MultiPoly cleared() const;

    // Canonical rendering: terms sorted by the monomial order of the exponent
    // map (graded on total degree, then lexicographic).
    std::string str(const std::array<std::string, 3>& vars = {"x", "y", "z"}) const;

  private:
    void add_term(const Exp& e, const Rat& c);
    std::map<Exp, Rat> t_;
};

}  // namespace fanok3
