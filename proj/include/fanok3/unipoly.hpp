#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fanok3/rat.hpp"

namespace fanok3 {

// Univariate polynomial over Q, coefficients stored by ascending degree.
// The zero polynomial has an empty coefficient vector and the sentinel degree
// below; valuation code must never see -1 arithmetic.
class UniPoly {
  public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
    UniPoly(std::initializer_list<long> ascending) {
        for (long v : ascending) c_.emplace_back(v);
        trim();
    }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& a);
    static UniPoly monomial(const Rat& a, int deg);
    // x
    static UniPoly var() { return monomial(Rat(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : int(c_.size()) - 1; }
    const Rat& coeff(int i) const;  // 0 outside range
    const Rat& lc() const;          // leading coefficient; throws on zero
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator/(const Rat& s) const;

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    // p(x + c)
    UniPoly shift(const Rat& c) const;
    // u^weight * p(1/u); requires degree() <= weight (weight >= 0)
    UniPoly reverse(int weight) const;
    UniPoly monic() const;  // throws on zero

    // Largest m with x^m | p (p nonzero).
    int valuation_at_zero() const;
    // Largest m with (x - r)^m | p (p nonzero).
    int valuation_at(const Rat& r) const;
    // Exact division by (x - r)^m.
    UniPoly deflate(const Rat& r, int m) const;

    // Quotient and remainder over Q.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
    // Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& divisor) const;

    std::string str(const std::string& var = "x1") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly operator*(const Rat& s, const UniPoly& p);

// Monic gcd via the subresultant (fraction-free) remainder sequence on the
// primitive integer parts; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

// Yun's algorithm: pairwise-coprime squarefree monic f_i with distinct
// multiplicities m_i such that f = lc(f) * prod f_i^{m_i}. Rejects f = 0.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f);

// Resultant via the Sylvester matrix (fraction-free determinant after
// clearing denominators). Res(f, 0) = 0 for deg f > 0.
Rat resultant(const UniPoly& f, const UniPoly& g);

// Discriminant of a*y^3 + b*y^2 + c*y + d with respect to y, coefficients in
// Q[x1]: 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 (the classical polynomial
// discriminant; for 4y^3 - g2 y - g3 it equals 16(g2^3 - 27 g3^2)).
// Rejects a = 0.
UniPoly discriminant_wrt_y(const UniPoly& a, const UniPoly& b, const UniPoly& c,
                           const UniPoly& d);

}  // namespace fanok3
