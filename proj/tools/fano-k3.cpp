// Command-line front end: per-stage subcommands, table reproduction and the
// mirror verification report.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanok3/elliptic.hpp"
#include "fanok3/lattice.hpp"
#include "fanok3/mirror.hpp"
#include "fanok3/nslattice.hpp"
#include "fanok3/paper_data.hpp"
#include "fanok3/polytope.hpp"

using nlohmann::ordered_json;
using namespace fanok3;

namespace {

struct Output {
    std::string format = "markdown";
    std::string path;

    void emit(const ordered_json& j, const std::string& md) const {
        std::string text = (format == "json") ? j.dump(2) + "\n" : md;
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(path);
            os << text;
        }
    }
};

uint64_t seed_from_env_or(uint64_t fallback) {
    if (const char* env = std::getenv("FANO_K3_SEED")) return std::strtoull(env, nullptr, 10);
    return fallback;
}

std::string group_str(const std::vector<Int>& g) {
    if (g.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < g.size(); ++i) s += (i ? " + " : "") + ("Z/" + g[i].get_str());
    return s;
}

// ---- polytopes -------------------------------------------------------------

int cmd_polytopes(const std::vector<int>& ks, const Output& out) {
    ordered_json rows = ordered_json::array();
    std::ostringstream md;
    md << "| k | vertices | facets | fano | reflexive | dual involution | det L_k |\n"
       << "|---|---|---|---|---|---|---|\n";
    bool ok = true;
    for (int k : ks) {
        Polytope p = reference_polytope(k);
        bool fano = is_fano(p);
        bool refl = is_reflexive(p);
        bool invo = dual_involution_holds(p);
        Int det = determinant(data::lattice_Lk(k));
        ok = ok && fano && refl && invo;
        ordered_json r;
        r["k"] = k;
        r["vertices"] = int(p.vertices.size());
        r["facets"] = int(facets(p).size());
        r["fano"] = fano;
        r["reflexive"] = refl;
        r["dual_involution"] = invo;
        r["det_L"] = det.get_str();
        rows.push_back(r);
        md << "| " << k << " | " << p.vertices.size() << " | " << facets(p).size() << " | "
           << (fano ? "yes" : "NO") << " | " << (refl ? "yes" : "NO") << " | "
           << (invo ? "yes" : "NO") << " | " << det.get_str() << " |\n";
    }
    ordered_json j;
    j["polytopes"] = rows;
    j["all_pass"] = ok;
    out.emit(j, md.str());
    return ok ? 0 : 1;
}

// ---- equation --------------------------------------------------------------

int cmd_equation(int k, const Output& out) {
    Polytope p = reference_polytope(k);
    LaurentEquation eq = anticanonical_equation(p);
    std::string computed = eq.cleared_str();
    std::string reference = data::equation_string(k);
    bool match = computed == reference;
    ordered_json j;
    j["k"] = k;
    j["laurent"] = eq.laurent_str();
    j["equation"] = computed + " = 0";
    j["reference"] = reference + " = 0";
    j["match"] = match;
    std::ostringstream md;
    md << "k = " << k << "\n  laurent form: " << eq.laurent_str() << " = 0\n  cleared:      "
       << computed << " = 0\n  reference:    " << reference << " = 0\n  match: "
       << (match ? "yes" : "NO") << "\n";
    out.emit(j, md.str());
    return match ? 0 : 1;
}

// ---- fibration -------------------------------------------------------------

int cmd_fibration(int k, uint64_t seed, int nspec, const Output& out) {
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * uint64_t(k)));
    GenericSpecialization g = draw_generic(k, rng);
    FibrationEquation f = build_fibration(k, g.lambda);
    WeierstrassModel w = to_weierstrass(f);
    auto sections = fibration_sections(k, g.lambda);
    bool sections_ok = true;
    for (const auto& s : sections) sections_ok = sections_ok && verify_section(f, s);
    IncidenceTable inc = incidence_table(f, g.fibers, sections);

    // stability across further specializations
    auto multiset = [](const std::vector<KodairaFiber>& fs) {
        std::map<std::string, int> m;
        for (const auto& fb : fs) m[fb.type_name()] += fb.orbit_size;
        return m;
    };
    bool stable = true;
    for (int i = 1; i < nspec; ++i) {
        GenericSpecialization g2 = draw_generic(k, rng);
        stable = stable && multiset(g2.fibers) == multiset(g.fibers);
    }
    // reference multiset
    std::map<std::string, int> expect;
    auto fe = data::fiber_expectation(k);
    for (const std::string& t : fe.types) expect[t] += 1;
    expect["I1"] += fe.i1_count;
    bool matches_reference = multiset(g.fibers) == expect;

    // the discriminant factor supported away from x1 = 0 (the polynomial whose
    // roots are the finite nonzero singular places)
    int v0 = w.delta.valuation_at_zero();
    UniPoly pk = w.delta.deflate(Rat(0), v0).monic();

    int euler = 0;
    for (const auto& fb : g.fibers) euler += fb.euler() * fb.orbit_size;

    ordered_json j;
    j["k"] = k;
    j["seed"] = seed;
    j["specializations"] = nspec;
    ordered_json lam = ordered_json::array();
    for (const Rat& l : g.lambda) lam.push_back(rat_str(l));
    j["lambda_used"] = lam;
    ordered_json fibers = ordered_json::array();
    std::ostringstream md;
    md << "k = " << k << ", lambda = (";
    for (size_t i = 0; i < g.lambda.size(); ++i) md << (i ? ", " : "") << rat_str(g.lambda[i]);
    md << "), seed = " << seed << "\n\n| place | type | components | euler |\n|---|---|---|---|\n";
    for (size_t fi = 0; fi < g.fibers.size(); ++fi) {
        const KodairaFiber& fb = g.fibers[fi];
        ordered_json e;
        e["place"] = fb.place.str();
        e["type"] = fb.type_name();
        if (fb.orbit_size > 1) e["orbit_size"] = fb.orbit_size;
        fibers.push_back(e);
        md << "| " << fb.place.str() << " | " << fb.type_name()
           << (fb.orbit_size > 1 ? " x" + std::to_string(fb.orbit_size) : "") << " | "
           << fb.component_count() << " | " << fb.euler() * fb.orbit_size << " |\n";
    }
    j["fibers"] = fibers;
    j["euler_sum"] = euler;
    j["sections_verified"] = sections_ok;
    j["fiber_multiset_stable"] = stable;
    j["matches_reference"] = matches_reference;
    j["discriminant_factor"] = pk.str();
    ordered_json incj;
    for (size_t fi = 0; fi < g.fibers.size(); ++fi) {
        if (g.fibers[fi].component_count() < 2) continue;
        ordered_json per;
        for (size_t si = 0; si < sections.size(); ++si)
            per[sections[si].name] = inc.comp[fi][si].str();
        incj[g.fibers[fi].place.str()] = per;
    }
    j["section_components"] = incj;
    md << "\nEuler sum: " << euler << "\nsections verified: " << (sections_ok ? "yes" : "NO")
       << "\nstable across " << nspec << " specializations: " << (stable ? "yes" : "NO")
       << "\nmatches reference configuration: " << (matches_reference ? "yes" : "NO") << "\n";
    out.emit(j, md.str());
    return (sections_ok && stable && matches_reference && euler == 24) ? 0 : 1;
}

// ---- evident ---------------------------------------------------------------

int cmd_evident(int k, uint64_t seed, int nspec, const Output& out) {
    MirrorVerdict v = verify_mirror(k, seed, nspec);
    if (!v.failure_stage.empty()) {
        ordered_json j;
        j["k"] = k;
        j["error"] = v.failure_stage;
        out.emit(j, "error: " + v.failure_stage + "\n");
        return 1;
    }
    bool rank_ok = v.evident_rank == data::evident_rank(k);
    bool det_ok = abs(v.evident_det) == data::evident_det(k);
    std::vector<Int> want;
    for (long d : data::group_Gk(k)) want.push_back(Int(d));
    bool group_ok = v.evident_group == want;
    bool qbeta_ok = v.q_beta.size() == data::beta_rows(k).size();
    bool ok = rank_ok && det_ok && group_ok && qbeta_ok;
    ordered_json j;
    j["k"] = k;
    j["rank"] = v.evident_rank;
    j["det"] = v.evident_det.get_str();
    j["group"] = group_str(v.evident_group);
    ordered_json qb = ordered_json::array();
    for (const auto& [o, q] : v.q_beta) {
        ordered_json e;
        e["order"] = o.get_str();
        e["q"] = rat_str(q);
        qb.push_back(e);
    }
    j["q_beta"] = qb;
    j["rank_matches"] = rank_ok;
    j["det_matches"] = det_ok;
    j["group_matches"] = group_ok;
    j["q_beta_matches"] = qbeta_ok;
    std::ostringstream md;
    md << "k = " << k << "\n  rank(E) = " << v.evident_rank << " (reference "
       << data::evident_rank(k) << ")\n  |det(E)| = " << abs(v.evident_det).get_str()
       << " (reference " << data::evident_det(k) << ")\n  A_E = " << group_str(v.evident_group)
       << "\n  q_beta rows matched: " << v.q_beta.size() << "/" << data::beta_rows(k).size()
       << "\n  " << (ok ? "PASS" : "FAIL") << "\n";
    out.emit(j, md.str());
    return ok ? 0 : 1;
}

// ---- mirror ----------------------------------------------------------------

int cmd_mirror(const std::vector<int>& ks, uint64_t seed, int nspec, const Output& out) {
    Report rep;
    rep.seed = seed;
    rep.specializations = nspec;
    if (ks.size() == 13) {
        rep = report_all(seed, nspec);
    } else {
        for (int k : ks) rep.verdicts.push_back(verify_mirror(k, seed, nspec));
    }
    bool ok = true;
    for (const MirrorVerdict& v : rep.verdicts) ok = ok && v.overall;
    out.emit(report_json(rep), report_markdown(rep));
    return ok ? 0 : 1;
}

// ---- tables ----------------------------------------------------------------

int cmd_tables(uint64_t seed, int nspec, const Output& out) {
    ordered_json j;
    std::ostringstream md;
    bool all_ok = true;

    // polytopes and lattices
    md << "## Fano polytopes and lattices\n\n"
       << "| k | fano | reflexive | involution | det L_k |\n|---|---|---|---|---|\n";
    ordered_json t1 = ordered_json::array();
    for (int k = 1; k <= 18; ++k) {
        Polytope p = reference_polytope(k);
        bool fano = is_fano(p), refl = is_reflexive(p), invo = dual_involution_holds(p);
        all_ok = all_ok && fano && refl && invo;
        ordered_json r;
        r["k"] = k;
        r["fano"] = fano;
        r["reflexive"] = refl;
        r["involution"] = invo;
        r["det_L"] = determinant(data::lattice_Lk(k)).get_str();
        t1.push_back(r);
        md << "| " << k << " | " << (fano ? "yes" : "NO") << " | " << (refl ? "yes" : "NO")
           << " | " << (invo ? "yes" : "NO") << " | "
           << determinant(data::lattice_Lk(k)).get_str() << " |\n";
    }
    j["polytopes"] = t1;

    // defining equations
    md << "\n## Defining equations\n\n| k | equation | match |\n|---|---|---|\n";
    ordered_json t2 = ordered_json::array();
    for (int k = 6; k <= 18; ++k) {
        std::string c = anticanonical_equation(reference_polytope(k)).cleared_str();
        bool m = c == data::equation_string(k);
        all_ok = all_ok && m;
        ordered_json r;
        r["k"] = k;
        r["equation"] = c;
        r["match"] = m;
        t2.push_back(r);
        md << "| " << k << " | `" << c << " = 0` | " << (m ? "yes" : "NO") << " |\n";
    }
    j["equations"] = t2;

    // fibers, evident lattices, groups, q values
    md << "\n## Fibres, evident lattices, discriminant groups\n\n"
       << "| k | fibres | rank E | det E | group | MW | all checks |\n"
       << "|---|---|---|---|---|---|---|\n";
    ordered_json t7 = ordered_json::array();
    for (int k = 6; k <= 18; ++k) {
        MirrorVerdict v = verify_mirror(k, seed, nspec);
        std::map<std::string, int> ms;
        for (const KodairaFiber& f : v.fibers) ms[f.type_name()] += f.orbit_size;
        std::map<std::string, int> expect;
        auto fe = data::fiber_expectation(k);
        for (const std::string& t : fe.types) expect[t] += 1;
        expect["I1"] += fe.i1_count;
        bool fibers_match = ms == expect;
        bool rank_ok = v.evident_rank == data::evident_rank(k);
        bool det_ok = abs(v.evident_det) == data::evident_det(k);
        std::vector<Int> want;
        for (long d : data::group_Gk(k)) want.push_back(Int(d));
        bool group_ok = v.evident_group == want;
        all_ok = all_ok && fibers_match && rank_ok && det_ok && group_ok;
        ordered_json r;
        r["k"] = k;
        std::string fstr;
        for (const auto& [t, c] : ms)
            fstr += (fstr.empty() ? "" : " + ") + (c > 1 ? std::to_string(c) + " " : "") + t;
        r["fibers"] = fstr;
        r["fibers_match"] = fibers_match;
        r["rank"] = v.evident_rank;
        r["det"] = v.evident_det.get_str();
        r["group"] = group_str(v.evident_group);
        r["group_match"] = group_ok;
        r["mw_rank"] = v.mw.rank;
        r["mw_torsion"] = group_str(v.mw.torsion);
        r["overall"] = v.overall;
        t7.push_back(r);
        md << "| " << k << " | " << fstr << (fibers_match ? "" : " (MISMATCH)") << " | "
           << v.evident_rank << (rank_ok ? "" : " (MISMATCH)") << " | " << v.evident_det.get_str()
           << (det_ok ? "" : " (MISMATCH)") << " | " << group_str(v.evident_group)
           << (group_ok ? "" : " (MISMATCH)") << " | rank " << v.mw.rank
           << (v.mw.torsion.empty() ? "" : " + " + group_str(v.mw.torsion)) << " | "
           << (v.overall ? "PASS" : "FAIL") << " |\n";
    }
    j["fibrations"] = t7;

    // alpha rows (q_L values)
    md << "\n## Discriminant values q_L(alpha)\n\n| k | order | q computed | q reference | match |\n"
       << "|---|---|---|---|---|\n";
    ordered_json t11 = ordered_json::array();
    for (int k = 6; k <= 18; ++k) {
        GramLattice l = data::lattice_Lk(k);
        for (const auto& row : data::alpha_rows(k)) {
            Rat qv = dual_q_value(l, row.coords);
            bool m = qv == mod2(row.q_value);
            all_ok = all_ok && m;
            ordered_json r;
            r["k"] = k;
            r["order"] = row.cyclic_order;
            r["q"] = rat_str(qv);
            r["reference"] = rat_str(row.q_value);
            r["match"] = m;
            t11.push_back(r);
            md << "| " << k << " | Z/" << row.cyclic_order << " | " << rat_str(qv) << " | "
               << rat_str(row.q_value) << " | " << (m ? "yes" : "NO") << " |\n";
        }
    }
    j["alpha_values"] = t11;

    j["all_match"] = all_ok;
    md << "\nall tables match: " << (all_ok ? "yes" : "NO") << "\n";
    out.emit(j, md.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for toric K3 hypersurfaces from Fano polytopes"};
    app.require_subcommand(1);

    Output out;
    uint64_t seed = seed_from_env_or(42);
    int nspec = 3;
    int karg = 0;
    bool all = false;
    std::vector<int> kfilter;

    app.add_option("--seed", seed, "PRNG seed for lambda specializations");
    app.add_option("--specializations", nspec, "generic specializations per k")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--out", out.path, "output path (default stdout)");

    auto* c_poly = app.add_subcommand("polytopes", "Fano/reflexivity/duality facts");
    c_poly->add_option("--k", kfilter, "restrict to these k");

    auto* c_eq = app.add_subcommand("equation", "defining equation of the k-th hypersurface");
    c_eq->add_option("k", karg, "index in 6..18")->required();

    auto* c_fib = app.add_subcommand("fibration", "singular fibres and sections");
    c_fib->add_option("k", karg, "index in 6..18")->required();

    auto* c_ev = app.add_subcommand("evident", "evident-lattice fingerprints");
    c_ev->add_option("k", karg, "index in 6..18")->required();

    auto* c_mirror = app.add_subcommand("mirror", "mirror-pair verdicts");
    c_mirror->add_flag("--all", all, "run every k = 6..18 plus lattice-only k = 1..5");
    c_mirror->add_option("--k", kfilter, "restrict to these k");

    auto* c_tables = app.add_subcommand("tables", "computed table reproductions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_poly->parsed()) {
            std::vector<int> ks = kfilter;
            if (ks.empty())
                for (int k = 1; k <= 18; ++k) ks.push_back(k);
            for (int k : ks)
                if (k < 1 || k > 18) throw CLI::ValidationError("--k", "k must be in 1..18");
            return cmd_polytopes(ks, out);
        }
        if (c_eq->parsed()) {
            if (karg < 6 || karg > 18) {
                std::cerr << "equation: k must be in 6..18\n";
                return 2;
            }
            return cmd_equation(karg, out);
        }
        if (c_fib->parsed()) {
            if (karg < 6 || karg > 18) {
                std::cerr << "fibration: k must be in 6..18\n";
                return 2;
            }
            return cmd_fibration(karg, seed, nspec, out);
        }
        if (c_ev->parsed()) {
            if (karg < 6 || karg > 18) {
                std::cerr << "evident: k must be in 6..18\n";
                return 2;
            }
            return cmd_evident(karg, seed, nspec, out);
        }
        if (c_mirror->parsed()) {
            std::vector<int> ks = kfilter;
            if (all || ks.empty())
                for (int k = 6; k <= 18; ++k)
                    if (std::find(ks.begin(), ks.end(), k) == ks.end() && (all || kfilter.empty()))
                        ks.push_back(k);
            for (int k : ks)
                if (k < 6 || k > 18) {
                    std::cerr << "mirror: k must be in 6..18\n";
                    return 2;
                }
            std::sort(ks.begin(), ks.end());
            return cmd_mirror(ks, seed, nspec, out);
        }
        if (c_tables->parsed()) return cmd_tables(seed, nspec, out);
    } catch (const std::exception& ex) {
        if (out.format == "json") {
            ordered_json j;
            j["error"] = ex.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error: " << ex.what() << "\n";
        }
        return 1;
    }
    return 2;
}
