#pragma once

#include <utility>
#include <vector>

#include "fanok3/rat.hpp"
#include "fanok3/unipoly.hpp"

namespace fanok3 {

// Local analysis of the curve z^2 = 4y^3 + a1 y^2 + a2 y + a3 at a place of
// the x1-line, working with the monic model w^2 = y^3 + c2 y^2 + c4 y + c6
// (w = z/2, c_i = a_i/4) over truncated power series in t = x1 - r.
//
// For a multiplicative fiber I_n the Weierstrass surface has an A_{n-1}
// singularity at the node. Hensel-factoring the cubic as
// (y^2 + beta y + delta)(y - e) and completing the square turns the local
// equation into U W = -d with ord(d) = n, where U, W are the two branch
// functions. A section through the node meets cycle component ord(U) (the
// opposite branch gives n - ord(U); the global flip is fixed per place by the
// square-root branch choice, so relative positions of sections are coherent).
// Sections on a common component meet with contact ord(U_P - U_Q) - i.

struct MultiplicativeLocal {
    int n = 0;
    // per section: cycle component index in 0..n-1 (0 = meets the identity
    // component / misses the node)
    std::vector<int> component;
    // pairwise local intersection numbers of the section curves above this
    // place (0 when they meet different components or different points)
    std::vector<std::vector<int>> contact;
};

MultiplicativeLocal analyze_multiplicative(int n, const UniPoly& a1, const UniPoly& a2,
                                           const UniPoly& a3, const Rat& place,
                                           const std::vector<std::pair<UniPoly, UniPoly>>& sections);

// Component classes a section can meet on an additive fiber. For I_n* the
// simple components are the identity, the second near component A attached to
// the same end of the chain, and the two interchangeable far components; for
// IV* they are the identity and the two interchangeable far tips.
enum class StarComponent { Identity, Near, Far };

std::vector<StarComponent> analyze_star(int n, const UniPoly& a1, const UniPoly& a2,
                                        const UniPoly& a3, const Rat& place,
                                        const std::vector<std::pair<UniPoly, UniPoly>>& sections);

enum class IVStarComponent { Identity, Far };

std::vector<IVStarComponent> analyze_iv_star(const UniPoly& a1, const UniPoly& a2,
                                             const UniPoly& a3, const Rat& place,
                                             const std::vector<std::pair<UniPoly, UniPoly>>& sections);

}  // namespace fanok3
