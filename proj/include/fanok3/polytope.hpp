#pragma once

#include <array>
#include <string>
#include <vector>

#include "fanok3/intmat.hpp"
#include "fanok3/multipoly.hpp"
#include "fanok3/rat.hpp"

namespace fanok3 {

// 3-dimensional lattice polytope given by its vertex list (columns of the
// vertex matrix). label = k for the eighteen reference polytopes, 0 otherwise.
struct Polytope {
    std::vector<std::array<long, 3>> vertices;
    int label = 0;
};

Polytope reference_polytope(int k);

struct Facet {
    std::vector<int> vertex_indices;   // ascending
    std::array<Int, 3> inner_normal;   // primitive
    Int level;                         // <n, v> = level on the facet, >= level elsewhere
};

// Polar dual with rational vertices (n_F / -level_F per facet).
struct RationalPolytope {
    std::vector<std::array<Rat, 3>> vertices;
};

// Exhaustive supporting-plane search over vertex triples (l <= 8).
// Rejects lower-dimensional input.
std::vector<Facet> facets(const Polytope& p);

// Requires the origin strictly interior.
RationalPolytope polar_dual(const Polytope& p);

// True iff every polar-dual vertex is integral. Requires origin interior.
bool is_reflexive(const Polytope& p);

// Definition: origin interior and every facet has exactly 3 vertices forming
// a Z-basis (determinant +-1).
bool is_fano(const Polytope& p);

struct GaleData {
    IntMat extended;  // 4 x (l+1), first column (1,0,0,0), first row all ones
    IntMat kernel;    // (l+1) x (l-3), rows 4..l the identity
};

// Requires the first three vertices to be e1, e2, e3 (reference ordering).
GaleData gale_transform(const Polytope& p);

// Integral polytope from a rational one; throws if a vertex is non-integral.
Polytope to_integral(const RationalPolytope& p);

// polar_dual(polar_dual(p)) has the same vertex set as p.
bool dual_involution_holds(const Polytope& p);

// Anticanonical hypersurface equation: 1 + x + y + z plus one lambda-term per
// remaining vertex.
struct LaurentEquation {
    // coefficient token: 0 for the constant 1, i >= 1 for lambda_i
    std::vector<std::pair<int, std::array<int, 3>>> terms;

    // Laurent form as a MultiPoly with symbolic lambda tokens replaced by
    // formal markers is not needed; rendering + clearing work on the term
    // list directly.
    std::string laurent_str() const;
    // Multiply by the minimal clearing monomial; canonical string matching
    // the reference equation strings.
    std::string cleared_str() const;
};

LaurentEquation anticanonical_equation(const Polytope& p);

}  // namespace fanok3
