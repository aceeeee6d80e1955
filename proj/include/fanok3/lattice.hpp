#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanok3/intmat.hpp"
#include "fanok3/rat.hpp"

namespace fanok3 {

// Non-degenerate integral bilinear form with labeled basis.
struct GramLattice {
    IntMat gram;
    std::vector<std::string> labels;

    int rank() const { return gram.rows(); }
    bool is_even() const;
    bool is_symmetric() const { return gram.is_symmetric(); }
};

GramLattice make_lattice(const std::vector<std::vector<long>>& rows,
                         std::vector<std::string> labels = {});

// U = [[0,1],[1,0]]
GramLattice hyperbolic_u();
// E8 root lattice with all self-intersections -2.
GramLattice e8_minus();

// Finite abelian group with a Q/2Z-valued quadratic form, presented by
// generators g_1..g_r of orders d_1 | d_2 | ... (all > 1): q(g_i) mod 2Z on
// the diagonal and the induced bilinear b(g_i, g_j) mod 1Z off it. For
// x = sum c_i g_i, q(x) = sum c_i^2 q_i + 2 sum_{i<j} c_i c_j b_ij (mod 2Z).
struct FiniteQuadraticForm {
    std::vector<Int> orders;                // invariant factors > 1, ascending divisibility
    std::vector<std::vector<Rat>> q;        // r x r: diag mod 2, off-diag mod 1
    // Generators as rational coordinate vectors in the source lattice basis
    // (elements of L^dual reduced mod L); empty for synthetic forms.
    std::vector<std::vector<Rat>> generator_coords;

    Int order() const;
    int length() const { return int(orders.size()); }  // l(A)
    // q of the element with generator coordinates c (c_i taken mod d_i).
    Rat q_value(const std::vector<Int>& c) const;
    // b(x, y) mod 1Z.
    Rat b_value(const std::vector<Int>& x, const std::vector<Int>& y) const;
    // order of the element with coordinates c
    Int element_order(const std::vector<Int>& c) const;
    // all elements as coordinate tuples (order() must be modest)
    std::vector<std::vector<Int>> elements() const;
};

struct LatticeInvariant {
    int s = 0, t = 0;
    FiniteQuadraticForm form;
};

// Exact signature via symmetric rational diagonalization; throws on a
// degenerate lattice.
std::pair<int, int> signature(const GramLattice& l);

Int determinant(const GramLattice& l);

// A_L = L^dual / L with q(v) = v^T G v mod 2Z. Rejects odd or degenerate
// lattices.
FiniteQuadraticForm discriminant_form(const GramLattice& l);

FiniteQuadraticForm negate_form(const FiniteQuadraticForm& f);

// Direct (orthogonal) sum of forms.
FiniteQuadraticForm form_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

// Isomorphism of finite quadratic forms, decided p-primary-component-wise by
// exhaustive generator-image search; returns the witness (images of f's
// generators as coordinate tuples in g) when isomorphic.
struct FormIsoResult {
    bool isomorphic = false;
    std::vector<std::vector<Int>> witness;  // per generator of f, coords in g
};
FormIsoResult forms_isomorphic(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
                               const Int& order_bound = Int(10000));

// Nikulin's sufficient uniqueness criterion: s > 0, t > 0 and
// l(A_L) <= rank(L) - 2.
bool unique_by_invariant(const GramLattice& l);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

LatticeInvariant lattice_invariant(const GramLattice& l);

// q(v) = v^T G v mod 2Z for v in the dual lattice, v given by rational
// coordinates in the lattice basis; throws if G v is not integral.
Rat dual_q_value(const GramLattice& l, const std::vector<Rat>& coords);

}  // namespace fanok3
