#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fanok3/multipoly.hpp"
#include "fanok3/rat.hpp"
#include "fanok3/rng.hpp"
#include "fanok3/unipoly.hpp"

namespace fanok3 {

// Thrown when a lambda specialization hits a non-generic locus (fiber
// collision, irrational multi-component place, Euler defect).
class DegenerateParameter : public std::runtime_error {
  public:
    explicit DegenerateParameter(const std::string& what) : std::runtime_error(what) {}
};

// z1^2 = 4 y1^3 + a1(x1) y1^2 + a2(x1) y1 + a3(x1)
struct FibrationEquation {
    int k = 0;
    std::vector<Rat> lambda;
    UniPoly a1, a2, a3;
};

// Rejects wrong lambda arity and zero lambda components.
FibrationEquation build_fibration(int k, const std::vector<Rat>& lambda);

// Exact completing-the-cube image z^2 = 4Y^3 - g2 Y - g3, Y = y1 + shift,
// shift = a1/12; delta = g2^3 - 27 g3^2.
struct WeierstrassModel {
    UniPoly g2, g3, delta, shift;
};
WeierstrassModel to_weierstrass(const FibrationEquation& f);

// g2^3 / (g2^3 - 27 g3^2) in lowest terms with monic denominator (the
// normalization with j = 1 at g3 = 0; not the 1728-scaled classical form).
struct RationalFunction {
    UniPoly num, den;
};
RationalFunction j_invariant(const WeierstrassModel& w);

enum class KodairaType { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

std::string kodaira_name(KodairaType t, int n);
int kodaira_component_count(KodairaType t, int n);
int kodaira_euler(KodairaType t, int n);
std::vector<int> kodaira_multiplicities(KodairaType t, int n);

struct Place {
    enum class Kind { Finite, Infinity, Orbit } kind = Kind::Finite;
    Rat finite;
    UniPoly orbit;  // squarefree factor whose roots form the orbit
    std::string str() const;
};

struct KodairaFiber {
    Place place;
    KodairaType type = KodairaType::In;
    int n = 0;           // index for I_n / I_n*
    int orbit_size = 1;  // > 1 only for I_1 orbits over an irrational factor
    int vg2 = 0, vg3 = 0, vdelta = 0;

    int component_count() const { return kodaira_component_count(type, n); }
    int euler() const { return kodaira_euler(type, n); }
    std::string type_name() const { return kodaira_name(type, n); }
};

// Singular fibers over every place with ord(delta) > 0, rational roots,
// irrational I_1 orbits, and infinity (weights u^8 g2(1/u), u^12 g3(1/u),
// u^24 delta(1/u)), with minimal-model reduction before typing. Throws
// DegenerateParameter when a multi-component fiber sits at an irrational
// place, when a repeated factor cannot be split over Q, or when the Euler
// numbers do not sum to 24.
std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& w);

struct SectionMap {
    std::string name;        // "O", "O'", "Q"
    bool at_infinity = false;  // the zero section x -> (x, inf, inf)
    UniPoly y, z;
};

// O plus the reference sections for k (O' exactly when a3 = 0).
std::vector<SectionMap> fibration_sections(int k, const std::vector<Rat>& lambda);

// Substituting (y(x), z(x)) into the fibration equation yields the zero
// polynomial. O verifies trivially.
bool verify_section(const FibrationEquation& f, const SectionMap& s);

struct ComponentRef {
    enum class Kind { Identity, Cycle, Near, Far } kind = Kind::Identity;
    int index = 0;  // cycle position for Kind::Cycle (1..n-1)

    bool operator==(const ComponentRef& o) const { return kind == o.kind && index == o.index; }
    std::string str() const;
};

// Incidence of every section with every multi-component fiber, plus the
// pairwise local intersection numbers of sections above those fibers.
// comp[fi][si] is meaningful when fibers[fi] has >= 2 components (identity
// otherwise); contact[fi][si][sj] likewise.
struct IncidenceTable {
    std::vector<std::vector<ComponentRef>> comp;
    std::vector<std::vector<std::vector<int>>> contact;
};
IncidenceTable incidence_table(const FibrationEquation& f, const std::vector<KodairaFiber>& fibers,
                               const std::vector<SectionMap>& sections);

// Per-fiber component of a single section (the spec-level operation).
std::vector<ComponentRef> section_incidence(const FibrationEquation& f,
                                            const std::vector<KodairaFiber>& fibers,
                                            const SectionMap& s);

// The birational transformation (x, y, z) -> (x1, y1, z1) carrying the toric
// hypersurface to the fibration; embedded for documentation and the
// substitution self-check.
struct RationalMap3 {
    MultiPoly num[3], den[3];
};
RationalMap3 birational_map(int k, const std::vector<Rat>& lambda);

// Cleared hypersurface polynomial with numeric lambda (for the self-check).
MultiPoly hypersurface_polynomial(int k, const std::vector<Rat>& lambda);

// Substitutes the birational map into the hypersurface polynomial and reduces
// modulo the fibration equation; true iff the result vanishes identically.
bool verify_birational_transform(int k, const std::vector<Rat>& lambda);

// Draws lambda tuples (numerators/denominators uniform in [1, 50]) until
// classify_fibers accepts; returns the tuple and the fibers.
struct GenericSpecialization {
    std::vector<Rat> lambda;
    std::vector<KodairaFiber> fibers;
};
GenericSpecialization draw_generic(int k, SplitMix64& rng, int max_tries = 64);

}  // namespace fanok3
