#pragma once

#include <utility>
#include <vector>

#include "fanok3/rat.hpp"

namespace fanok3 {

// Dense integer matrix with exact arithmetic only.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}
    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * size_t(cols_) + size_t(c)]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    bool is_symmetric() const;

    // Exact determinant (Bareiss fraction-free elimination); square only.
    Int det() const;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMat u, d, v;  // u * m * v = d, u and v unimodular, d diagonal d_i | d_{i+1}
};

// Smith normal form with transforms; diagonal entries nonnegative.
SmithResult smith_normal_form(const IntMat& m);

// Basis of the integer kernel {x : m x = 0}; columns form a saturated
// (direct-summand) basis since they come from the unimodular V of the SNF.
IntMat integer_kernel(const IntMat& m);

// Exact signature (s, t) of a symmetric rational-entried matrix given as an
// integer matrix: symmetric Gaussian reduction with the hyperbolic 2x2 split
// for zero diagonals. Degenerate directions are skipped (caller checks det).
std::pair<int, int> symmetric_signature(const IntMat& g);

// Inverse of a nonsingular integer matrix over Q (row reduction).
std::vector<std::vector<Rat>> rational_inverse(const IntMat& g);

}  // namespace fanok3
