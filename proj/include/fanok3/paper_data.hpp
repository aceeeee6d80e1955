#pragma once

#include <array>
#include <string>
#include <vector>

#include "fanok3/lattice.hpp"
#include "fanok3/rat.hpp"

namespace fanok3::data {

// Number of polytope vertices per k (k = 1..18).
int vertex_count(int k);

// 3 x l_k vertex matrix, columns in the printed order (the Gale normalization
// depends on this order).
std::vector<std::array<long, 3>> polytope_vertices(int k);

// The (l_k - 3) x (l_k - 3) intersection matrix paired with polytope k.
GramLattice lattice_Lk(int k);

// Reference defining equation of the toric K3 hypersurface for k = 6..18, as
// a canonical string (see canonical_equation_string for the normal form).
std::string equation_string(int k);

// Maps slot i (vertex i+3, 0-based i = 0..l_k-4) to the lambda index used by
// the reference equations (identity except k = 17, 18 where slots 1, 2 swap).
std::vector<int> lambda_assignment(int k);

// Kodaira multiset for k = 6..18: types for the non-I1 fibers (e.g. "I8",
// "I3*", "IV*") plus the number of I1 fibers.
struct FiberExpectation {
    std::vector<std::string> types;
    int i1_count = 0;
};
FiberExpectation fiber_expectation(int k);

// Evident-lattice fingerprints: rank and |det| per k = 6..18.
int evident_rank(int k);
long evident_det(int k);

// Discriminant group G_k as invariant factors (ascending divisibility).
std::vector<long> group_Gk(int k);

// One row of the alpha table: a cyclic summand order, the coordinates of
// alpha in the L_k basis, and q_{L_k}(alpha) mod 2Z.
struct AlphaRow {
    long cyclic_order;
    std::vector<Rat> coords;
    Rat q_value;
};
std::vector<AlphaRow> alpha_rows(int k);

// One row of the beta table: a cyclic summand order and q_{E_k}(beta) mod 2Z
// (the printed coordinate vectors presuppose an unrecoverable basis ordering;
// the invariant content is the (order, q) pair per summand).
struct BetaRow {
    long cyclic_order;
    Rat q_value;
};
std::vector<BetaRow> beta_rows(int k);

// Reference sections for k = 6..18 as display strings (y1(x1), z1(x1)).
struct SectionStrings {
    bool has_oprime = false;
    std::string q_y, q_z;
};
SectionStrings section_strings(int k);

}  // namespace fanok3::data
