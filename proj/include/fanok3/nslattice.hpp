#pragma once

#include <string>
#include <vector>

#include "fanok3/elliptic.hpp"
#include "fanok3/lattice.hpp"

namespace fanok3 {

// Pairwise intersection numbers of the sections (O included), in the order of
// the `sections` argument. Diagonal entries are -2 (section self-intersection
// on a K3); (P.O) comes from the pole order of the transformed y-coordinate in
// the infinity chart; finite pairs from common-zero contact orders.
std::vector<std::vector<int>> pairwise_section_intersections(
    const FibrationEquation& f, const std::vector<KodairaFiber>& fibers,
    const std::vector<SectionMap>& sections, const IncidenceTable& inc);

// The evident lattice: general fiber F, the sections, and all non-identity
// components of the reducible fibers. The generating set has at most one
// integral relation; the stored Gram is the basis obtained by dropping one
// fiber component when needed (det-validated), and full_to_basis carries the
// coordinates of every generator in that basis.
struct EvidentLattice {
    GramLattice gram;                      // basis Gram
    std::vector<std::string> full_labels;  // F, (O), (Q), [(O')], components
    IntMat full_gram;
    IntMat full_to_basis;                  // rank x N
    std::vector<int> section_indices;      // positions of the section classes
    std::vector<int> trivial_indices;      // F, O and all fiber components
    std::string dropped_label;             // empty when the full set is a basis
};

EvidentLattice build_evident(int k, const std::vector<KodairaFiber>& fibers,
                             const std::vector<SectionMap>& sections, const IncidenceTable& inc,
                             const std::vector<std::vector<int>>& section_pairings);

// Sublattice generated by F, O and the non-identity fiber components.
struct TrivialLattice {
    GramLattice gram;
    std::vector<int> indices;  // into the evident lattice's full generator list
};
TrivialLattice trivial_lattice(const EvidentLattice& e);

// rank(NS) - 2 - sum (m_v - 1); throws on a negative result.
int shioda_tate_rank(int ns_rank, const std::vector<KodairaFiber>& fibers);

// Torsion invariant factors of NS/T (= MW torsion via T-hat/T), by SNF of the
// inclusion matrix of T in the evident basis.
std::vector<Int> mordell_weil_torsion(const EvidentLattice& e, const TrivialLattice& t);

struct MordellWeilReport {
    int rank = 0;
    std::vector<Int> torsion;
    std::string free_generator;     // "Q" when rank 1
    std::string torsion_generator;  // "O'" when torsion nontrivial
};
MordellWeilReport mordell_weil_report(const EvidentLattice& e, const TrivialLattice& t,
                                      const std::vector<KodairaFiber>& fibers);

}  // namespace fanok3
