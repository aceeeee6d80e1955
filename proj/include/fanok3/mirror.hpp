#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fanok3/elliptic.hpp"
#include "fanok3/lattice.hpp"
#include "fanok3/nslattice.hpp"

namespace fanok3 {

// One named check of the mirror pipeline, in evaluation order.
struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct MirrorVerdict {
    int k = 0;
    std::vector<Rat> lambda_used;
    std::vector<KodairaFiber> fibers;
    int evident_rank = 0;
    Int evident_det;
    std::vector<Int> evident_group;
    std::vector<std::pair<Int, Rat>> q_beta;  // per summand: order, q value found
    MordellWeilReport mw;
    std::vector<NamedCheck> checks;
    bool overall = false;
    std::string failure_stage;  // nonempty when a stage threw
};

// Full pipeline for k in 6..18: specializes lambda (rejecting degenerate
// draws, requiring a stable fiber multiset across `specializations` draws),
// verifies the sections, assembles the evident lattice, and runs the checks:
// signatures, q_E = -q_L, uniqueness of U + L_k, determinant and group
// matches, Shioda-Tate rank.
MirrorVerdict verify_mirror(int k, uint64_t seed, int specializations = 3);

// Same pipeline with an override for L_k (negative-control testing).
MirrorVerdict verify_mirror_with_lattice(int k, const GramLattice& lk, uint64_t seed,
                                         int specializations = 3);

// Lattice-only summary for any k (used for k = 1..5 where the fibration
// models live in earlier work).
struct LatticeOnlySummary {
    int k = 0;
    Int det;
    std::vector<Int> group;
    bool degenerate = false;
    int s = 0, t = 0;
    bool signature_matches = false;  // against (1, l_k - 4)
    bool unique_u_plus_l = false;
};
LatticeOnlySummary lattice_only_summary(int k);

struct Report {
    uint64_t seed = 0;
    int specializations = 3;
    std::vector<LatticeOnlySummary> lattice_only;  // k = 1..5
    std::vector<MirrorVerdict> verdicts;           // k = 6..18
};

// Runs verify_mirror for k = 6..18 (in parallel) and the lattice-only subset
// for k = 1..5.
Report report_all(uint64_t seed, int specializations = 3);

nlohmann::ordered_json verdict_json(const MirrorVerdict& v);
nlohmann::ordered_json report_json(const Report& r);
std::string report_markdown(const Report& r);

}  // namespace fanok3
