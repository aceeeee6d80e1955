#include "fanok3/nslattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanok3 {

namespace {

int multiplicity_of_factor(const UniPoly& p, const UniPoly& f) {
    if (p.is_zero()) return 0;
    UniPoly q = p;
    int m = 0;
    while (true) {
        auto [quot, rem] = q.divrem(f);
        if (!rem.is_zero()) return m;
        q = quot;
        ++m;
    }
}

bool is_multi_fiber_place(const std::vector<KodairaFiber>& fibers, const Rat& r) {
    for (const KodairaFiber& fb : fibers)
        if (fb.place.kind == Place::Kind::Finite && fb.place.finite == r &&
            fb.component_count() >= 2)
            return true;
    return false;
}

// local contact of two sections at a common finite point away from nodes
int smooth_contact(const FibrationEquation& f, const SectionMap& a, const SectionMap& b,
                   const Rat& r) {
    if (a.y.eval(r) != b.y.eval(r) || a.z.eval(r) != b.z.eval(r)) return 0;
    Rat y0 = a.y.eval(r), z0 = a.z.eval(r);
    UniPoly dy = a.y - b.y, dz = a.z - b.z;
    if (z0 != 0)
        return dy.is_zero() ? throw std::logic_error("identical sections")
                            : dy.valuation_at(r);
    // z = 0 chart needs the curve transversal there: dg/dy != 0 at (y0, r)
    Rat gp = Rat(12) * y0 * y0 + 2 * f.a1.eval(r) * y0 + f.a2.eval(r);
    if (gp == 0)
        throw std::logic_error(
            "section contact at a singular fiber point outside the analyzed places");
    return dz.is_zero() ? throw std::logic_error("identical sections") : dz.valuation_at(r);
}

}  // namespace

std::vector<std::vector<int>> pairwise_section_intersections(
    const FibrationEquation& f, const std::vector<KodairaFiber>& fibers,
    const std::vector<SectionMap>& sections, const IncidenceTable& inc) {
    size_t ns = sections.size();
    std::vector<std::vector<int>> m(ns, std::vector<int>(ns, 0));
    for (size_t i = 0; i < ns; ++i) m[i][i] = -2;

    // finite multi-fiber contacts from the incidence analysis
    for (size_t fi = 0; fi < fibers.size(); ++fi)
        for (size_t a = 0; a < ns; ++a)
            for (size_t b = a + 1; b < ns; ++b) {
                m[a][b] += inc.contact[fi][a][b];
                m[b][a] = m[a][b];
            }

    bool inf_is_multi = false;
    for (const KodairaFiber& fb : fibers)
        if (fb.place.kind == Place::Kind::Infinity && fb.component_count() >= 2)
            inf_is_multi = true;

    for (size_t a = 0; a < ns; ++a)
        for (size_t b = a + 1; b < ns; ++b) {
            const SectionMap& sa = sections[a];
            const SectionMap& sb = sections[b];
            if (sa.at_infinity || sb.at_infinity) {
                // (P.O): pole order of Y/Z in the infinity chart
                const SectionMap& p = sa.at_infinity ? sb : sa;
                if (p.at_infinity) throw std::invalid_argument("two infinity sections");
                int vy = p.y.is_zero() ? 1000 : 4 - p.y.degree();
                int vz = p.z.is_zero() ? 1000 : 6 - p.z.degree();
                int val = (vz < 0) ? vy - vz : 0;
                m[a][b] += val;
                m[b][a] = m[a][b];
                continue;
            }
            // finite pair: common zeros of (dy, dz) away from the multi places
            UniPoly dy = sa.y - sb.y, dz = sa.z - sb.z;
            if (dy.is_zero() && dz.is_zero())
                throw std::invalid_argument("pairwise_section_intersections: identical sections");
            UniPoly g = dy.is_zero() ? dz : (dz.is_zero() ? dy : poly_gcd(dy, dz));
            if (g.degree() < 1) continue;
            for (auto& [factor, mult] : squarefree_decompose(g)) {
                (void)mult;  // true contact orders come from dy/dz valuations
                UniPoly rem = factor;
                // rational contact points first
                while (rem.degree() >= 1) {
                    Rat root;
                    bool have_root = false;
                    if (rem.degree() == 1) {
                        root = -rem.coeff(0) / rem.coeff(1);
                        have_root = true;
                    } else if (rem.degree() == 2) {
                        Rat aa = rem.coeff(2), bb = rem.coeff(1), cc = rem.coeff(0);
                        auto sq = rat_sqrt(bb * bb - 4 * aa * cc);
                        if (sq) {
                            root = (-bb + *sq) / (2 * aa);
                            have_root = true;
                        }
                    }
                    if (!have_root) break;
                    rem = rem.degree() == 1 ? UniPoly::constant(Rat(1))
                                            : rem.deflate(root, 1).monic();
                    if (is_multi_fiber_place(fibers, root)) continue;  // counted above
                    m[a][b] += smooth_contact(f, sa, sb, root);
                    m[b][a] = m[a][b];
                }
                if (rem.degree() >= 1) {
                    // conjugate contact points over the irrational factor rem:
                    // only smooth fibers allowed there
                    for (const KodairaFiber& fb : fibers)
                        if (fb.place.kind == Place::Kind::Orbit &&
                            poly_gcd(fb.place.orbit, rem).degree() >= 1)
                            throw std::logic_error(
                                "section contact over an irrational singular place");
                    bool z_nonzero = multiplicity_of_factor(sa.z, rem) == 0 || sa.z.is_zero();
                    if (sa.z.is_zero()) z_nonzero = false;
                    int v;
                    if (z_nonzero)
                        v = dy.is_zero() ? 1000 : multiplicity_of_factor(dy, rem);
                    else
                        v = dz.is_zero() ? 1000 : multiplicity_of_factor(dz, rem);
                    if (v >= 1000)
                        throw std::logic_error("unbounded section contact over an orbit");
                    m[a][b] += rem.degree() * v;
                    m[b][a] = m[a][b];
                }
            }
        }
    return m;
}

namespace {

struct Block {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> gram;
    // position of a ComponentRef in this block; -1 for identity
    int position(const ComponentRef& c) const {
        switch (c.kind) {
            case ComponentRef::Kind::Identity: return -1;
            case ComponentRef::Kind::Cycle: return c.index - 1;
            case ComponentRef::Kind::Near: return near_pos;
            case ComponentRef::Kind::Far: return far_pos;
        }
        return -1;
    }
    int near_pos = -1, far_pos = -1;
};

Block fiber_block(const KodairaFiber& f, char letter) {
    Block b;
    auto lab = [&](int i) { return std::string(1, letter) + std::to_string(i + 1); };
    if (f.type == KodairaType::In) {
        int k = f.n - 1;
        b.gram.assign(size_t(k), std::vector<int>(size_t(k), 0));
        for (int i = 0; i < k; ++i) {
            b.gram[size_t(i)][size_t(i)] = -2;
            if (i + 1 < k) b.gram[size_t(i)][size_t(i + 1)] = b.gram[size_t(i + 1)][size_t(i)] = 1;
        }
        for (int i = 0; i < k; ++i) b.labels.push_back(lab(i));
        return b;
    }
    if (f.type == KodairaType::InStar) {
        // rows: A, c0..cn, B, C (Theta0 attaches to c0)
        int n = f.n;
        int sz = n + 4;
        b.gram.assign(size_t(sz), std::vector<int>(size_t(sz), 0));
        for (int i = 0; i < sz; ++i) b.gram[size_t(i)][size_t(i)] = -2;
        auto edge = [&](int i, int j) { b.gram[size_t(i)][size_t(j)] = b.gram[size_t(j)][size_t(i)] = 1; };
        edge(0, 1);
        for (int i = 0; i < n; ++i) edge(1 + i, 2 + i);
        edge(1 + n, sz - 2);
        edge(1 + n, sz - 1);
        b.near_pos = 0;
        b.far_pos = sz - 2;
        for (int i = 0; i < sz; ++i) b.labels.push_back(lab(i));
        return b;
    }
    if (f.type == KodairaType::IVStar) {
        // rows: m1, center, m2, t1, m3, t2 (Theta0 attaches to m1)
        b.gram.assign(6, std::vector<int>(6, 0));
        for (int i = 0; i < 6; ++i) b.gram[size_t(i)][size_t(i)] = -2;
        auto edge = [&](int i, int j) { b.gram[size_t(i)][size_t(j)] = b.gram[size_t(j)][size_t(i)] = 1; };
        edge(0, 1);
        edge(1, 2);
        edge(2, 3);
        edge(1, 4);
        edge(4, 5);
        b.far_pos = 3;
        for (int i = 0; i < 6; ++i) b.labels.push_back(lab(i));
        return b;
    }
    throw std::logic_error("fiber_block: unsupported type " + f.type_name());
}

}  // namespace

EvidentLattice build_evident(int k, const std::vector<KodairaFiber>& fibers,
                             const std::vector<SectionMap>& sections, const IncidenceTable& inc,
                             const std::vector<std::vector<int>>& section_pairings) {
    (void)k;
    size_t ns = sections.size();
    EvidentLattice e;
    e.full_labels.push_back("F");
    for (const SectionMap& s : sections) {
        e.section_indices.push_back(int(e.full_labels.size()));
        e.full_labels.push_back("(" + s.name + ")");
    }
    std::vector<size_t> multi;
    std::vector<Block> blocks;
    std::vector<int> block_offset;
    char letter = 'a';
    for (size_t fi = 0; fi < fibers.size(); ++fi) {
        if (fibers[fi].component_count() < 2) continue;
        if (fibers[fi].orbit_size != 1)
            throw std::logic_error("build_evident: reducible fiber over an orbit place");
        multi.push_back(fi);
        blocks.push_back(fiber_block(fibers[fi], letter));
        block_offset.push_back(int(e.full_labels.size()));
        for (const std::string& l : blocks.back().labels) e.full_labels.push_back(l);
        ++letter;
    }
    int N = int(e.full_labels.size());
    IntMat G(N, N);
    // F: F.F = 0, F.section = 1, F.component = 0
    for (size_t si = 0; si < ns; ++si) {
        G.at(0, 1 + int(si)) = 1;
        G.at(1 + int(si), 0) = 1;
    }
    // sections
    for (size_t a = 0; a < ns; ++a)
        for (size_t b = 0; b < ns; ++b) G.at(1 + int(a), 1 + int(b)) = section_pairings[a][b];
    // components
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& blk = blocks[bi];
        int off = block_offset[bi];
        int sz = int(blk.labels.size());
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) G.at(off + i, off + j) = blk.gram[size_t(i)][size_t(j)];
        size_t fi = multi[bi];
        for (size_t si = 0; si < ns; ++si) {
            int pos = blk.position(inc.comp[fi][si]);
            if (pos < 0) continue;
            G.at(1 + int(si), off + pos) = 1;
            G.at(off + pos, 1 + int(si)) = 1;
        }
    }
    e.full_gram = G;
    // trivial sublattice indices: F, O, all components
    e.trivial_indices.push_back(0);
    for (size_t si = 0; si < ns; ++si)
        if (sections[si].at_infinity) e.trivial_indices.push_back(1 + int(si));
    for (size_t bi = 0; bi < blocks.size(); ++bi)
        for (size_t i = 0; i < blocks[bi].labels.size(); ++i)
            e.trivial_indices.push_back(block_offset[bi] + int(i));

    // lattice generated by all generators: quotient of Z^N by ker(G)
    IntMat K = integer_kernel(G);
    int s = K.cols();
    int r = N - s;
    Int full_det(0);
    {
        SmithResult sr = smith_normal_form(K);
        for (int i = 0; i < s; ++i)
            if (sr.d.at(i, i) != 1)
                throw std::logic_error("build_evident: kernel not saturated");
    }
    // choose the basis: the full set when s = 0, else drop one component whose
    // omission preserves the determinant (the relation has unit coefficient
    // there). The quotient determinant is computed first as the reference.
    {
        SmithResult sk = smith_normal_form(K);
        // B = U^{-1} columns s..N-1 where U from SNF of K... we need U acting on
        // rows of K; smith gives u*K*v = d, u is N x N; quotient iso via u rows.
        auto uinv_q = rational_inverse(sk.u);
        IntMat B(N, r);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < r; ++j) {
                const Rat& v = uinv_q[size_t(i)][size_t(s + j)];
                if (v.get_den() != 1)
                    throw std::logic_error("build_evident: non-integral basis transform");
                B.at(i, j) = v.get_num();
            }
        IntMat Gq = B.transpose() * G * B;
        full_det = Gq.det();
        if (full_det == 0) throw std::logic_error("build_evident: degenerate evident lattice");
    }
    std::vector<int> keep;
    if (s == 0) {
        for (int i = 0; i < N; ++i) keep.push_back(i);
    } else if (s == 1) {
        int first_comp = 1 + int(ns);
        bool found = false;
        for (int drop = first_comp; drop < N && !found; ++drop) {
            std::vector<int> cand;
            for (int i = 0; i < N; ++i)
                if (i != drop) cand.push_back(i);
            IntMat sub(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub.at(i, j) = G.at(cand[size_t(i)], cand[size_t(j)]);
            if (sub.det() == full_det) {
                keep = cand;
                e.dropped_label = e.full_labels[size_t(drop)];
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("build_evident: no component drop yields a basis");
    } else {
        throw std::logic_error("build_evident: unexpected relation count " + std::to_string(s));
    }
    IntMat Gb(r, r);
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i) {
        labels.push_back(e.full_labels[size_t(keep[size_t(i)])]);
        for (int j = 0; j < r; ++j) Gb.at(i, j) = G.at(keep[size_t(i)], keep[size_t(j)]);
    }
    e.gram = GramLattice{Gb, labels};
    // coordinates of every generator in the basis: x_g = Gb^{-1} (basis . g)
    auto gbinv = rational_inverse(Gb);
    e.full_to_basis = IntMat(r, N);
    for (int g = 0; g < N; ++g) {
        for (int i = 0; i < r; ++i) {
            Rat acc(0);
            for (int j = 0; j < r; ++j)
                acc += gbinv[size_t(i)][size_t(j)] * Rat(G.at(keep[size_t(j)], g));
            if (acc.get_den() != 1)
                throw std::logic_error("build_evident: generator outside the chosen basis");
            e.full_to_basis.at(i, g) = acc.get_num();
        }
    }
    return e;
}

TrivialLattice trivial_lattice(const EvidentLattice& e) {
    TrivialLattice t;
    t.indices = e.trivial_indices;
    int n = int(t.indices.size());
    IntMat g(n, n);
    std::vector<std::string> lab;
    for (int i = 0; i < n; ++i) {
        lab.push_back(e.full_labels[size_t(t.indices[size_t(i)])]);
        for (int j = 0; j < n; ++j)
            g.at(i, j) = e.full_gram.at(t.indices[size_t(i)], t.indices[size_t(j)]);
    }
    t.gram = GramLattice{g, lab};
    return t;
}

int shioda_tate_rank(int ns_rank, const std::vector<KodairaFiber>& fibers) {
    int total = 0;
    for (const KodairaFiber& f : fibers) total += (f.component_count() - 1) * f.orbit_size;
    int r = ns_rank - 2 - total;
    if (r < 0) throw std::logic_error("shioda_tate_rank: negative rank, inconsistent inputs");
    return r;
}

std::vector<Int> mordell_weil_torsion(const EvidentLattice& e, const TrivialLattice& t) {
    int r = e.gram.rank();
    IntMat m(r, int(t.indices.size()));
    for (size_t j = 0; j < t.indices.size(); ++j)
        for (int i = 0; i < r; ++i) m.at(i, int(j)) = e.full_to_basis.at(i, t.indices[j]);
    SmithResult s = smith_normal_form(m);
    std::vector<Int> tor;
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.d.at(i, i) > 1) tor.push_back(s.d.at(i, i));
    return tor;
}

MordellWeilReport mordell_weil_report(const EvidentLattice& e, const TrivialLattice& t,
                                      const std::vector<KodairaFiber>& fibers) {
    MordellWeilReport rep;
    rep.torsion = mordell_weil_torsion(e, t);
    rep.rank = shioda_tate_rank(e.gram.rank(), fibers);
    if (rep.rank >= 1) rep.free_generator = "Q";
    if (!rep.torsion.empty()) rep.torsion_generator = "O'";
    return rep;
}

}  // namespace fanok3
