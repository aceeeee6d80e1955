#include "fanok3/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fanok3 {

bool GramLattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (gram.at(i, i) % 2 != 0) return false;
    return true;
}

GramLattice make_lattice(const std::vector<std::vector<long>>& rows,
                         std::vector<std::string> labels) {
    int n = int(rows.size());
    IntMat g(n, n);
    for (int r = 0; r < n; ++r) {
        if (int(rows[size_t(r)].size()) != n)
            throw std::invalid_argument("make_lattice: ragged rows");
        for (int c = 0; c < n; ++c) g.at(r, c) = rows[size_t(r)][size_t(c)];
    }
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    GramLattice l{std::move(g), std::move(labels)};
    if (!l.is_symmetric()) throw std::invalid_argument("make_lattice: not symmetric");
    return l;
}

GramLattice hyperbolic_u() { return make_lattice({{0, 1}, {1, 0}}, {"u1", "u2"}); }

GramLattice e8_minus() {
    // negative of the E8 Cartan matrix (Dynkin chain 1-2-3-4-5-6-7, node 8 on 5)
    std::vector<std::vector<long>> g(8, std::vector<long>(8, 0));
    auto edge = [&](int a, int b) { g[size_t(a)][size_t(b)] = g[size_t(b)][size_t(a)] = 1; };
    for (int i = 0; i < 8; ++i) g[size_t(i)][size_t(i)] = -2;
    edge(0, 1); edge(1, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(5, 6);
    edge(4, 7);
    std::vector<std::string> lab;
    for (int i = 1; i <= 8; ++i) lab.push_back("r" + std::to_string(i));
    return make_lattice(g, lab);
}

Int FiniteQuadraticForm::order() const {
    Int n(1);
    for (const Int& d : orders) n *= d;
    return n;
}

Rat FiniteQuadraticForm::q_value(const std::vector<Int>& c) const {
    size_t r = orders.size();
    if (c.size() != r) throw std::invalid_argument("q_value: wrong coordinate length");
    Rat acc(0);
    for (size_t i = 0; i < r; ++i) {
        acc += Rat(c[i] * c[i]) * q[i][i];
        for (size_t j = i + 1; j < r; ++j) acc += Rat(2 * c[i] * c[j]) * q[i][j];
    }
    return mod2(acc);
}

Rat FiniteQuadraticForm::b_value(const std::vector<Int>& x, const std::vector<Int>& y) const {
    size_t r = orders.size();
    Rat acc(0);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Rat bij = (i == j) ? q[i][i] / 2 : q[i][j];
            acc += Rat(x[i] * y[j]) * bij;
        }
    return mod1(acc);
}

Int FiniteQuadraticForm::element_order(const std::vector<Int>& c) const {
    Int o(1);
    for (size_t i = 0; i < orders.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), c[i].get_mpz_t());
        Int oi = orders[i] / g;
        Int l;
        mpz_lcm(l.get_mpz_t(), o.get_mpz_t(), oi.get_mpz_t());
        o = l;
    }
    return o;
}

std::vector<std::vector<Int>> FiniteQuadraticForm::elements() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(orders.size(), Int(0));
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        for (; i < orders.size(); ++i) {
            cur[i] += 1;
            if (cur[i] < orders[i]) break;
            cur[i] = 0;
        }
        if (i == orders.size()) break;
    }
    if (orders.empty()) out.assign(1, {});
    return out;
}

std::pair<int, int> signature(const GramLattice& l) {
    if (determinant(l) == 0) throw std::invalid_argument("signature: degenerate lattice");
    return symmetric_signature(l.gram);
}

Int determinant(const GramLattice& l) { return l.gram.det(); }

FiniteQuadraticForm discriminant_form(const GramLattice& l) {
    if (!l.is_even()) throw std::invalid_argument("discriminant_form: odd lattice");
    Int dt = determinant(l);
    if (dt == 0) throw std::invalid_argument("discriminant_form: degenerate lattice");
    int n = l.rank();
    // A = Z^n / G Z^n via SNF; with U G V = D the map y -> U^{-1} y identifies
    // Z^n / D Z^n with A, and q on A is y^T G^{-1} y mod 2Z.
    SmithResult s = smith_normal_form(l.gram);
    // U^{-1}: solve over Z by multiplying V D^{-1}? Use rational inverse of U.
    auto uinv = rational_inverse(s.u);
    auto ginv = rational_inverse(l.gram);
    FiniteQuadraticForm f;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) != 1) keep.push_back(i);
    for (int i : keep) f.orders.push_back(s.d.at(i, i));
    size_t r = keep.size();
    // generator i (as element of Z^n/GZ^n): y_i = U^{-1} e_{keep[i]} (integral:
    // U unimodular). Coordinates in L^dual basis: x_i = G^{-1} y_i.
    std::vector<std::vector<Rat>> gens(r, std::vector<Rat>(size_t(n), Rat(0)));
    for (size_t gi = 0; gi < r; ++gi) {
        std::vector<Rat> y(size_t(n), Rat(0));
        for (int row = 0; row < n; ++row) y[size_t(row)] = uinv[size_t(row)][size_t(keep[gi])];
        std::vector<Rat> x(size_t(n), Rat(0));
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col)
                x[size_t(row)] += ginv[size_t(row)][size_t(col)] * y[size_t(col)];
        for (Rat& v : x) v = mod1(v);  // reduce mod L for reproducible printing
        gens[gi] = std::move(x);
    }
    f.generator_coords = gens;
    f.q.assign(r, std::vector<Rat>(r, Rat(0)));
    auto pair_val = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat acc(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += a[size_t(i)] * Rat(l.gram.at(i, j)) * b[size_t(j)];
        return acc;
    };
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            f.q[i][j] = (i == j) ? mod2(pair_val(gens[i], gens[i]))
                                 : mod1(pair_val(gens[i], gens[j]));
    return f;
}

FiniteQuadraticForm negate_form(const FiniteQuadraticForm& f) {
    FiniteQuadraticForm g = f;
    for (size_t i = 0; i < g.q.size(); ++i)
        for (size_t j = 0; j < g.q.size(); ++j)
            g.q[i][j] = (i == j) ? mod2(-g.q[i][j]) : mod1(-g.q[i][j]);
    return g;
}

FiniteQuadraticForm form_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    FiniteQuadraticForm s;
    size_t ra = a.orders.size(), rb = b.orders.size();
    s.orders = a.orders;
    s.orders.insert(s.orders.end(), b.orders.begin(), b.orders.end());
    s.q.assign(ra + rb, std::vector<Rat>(ra + rb, Rat(0)));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ra; ++j) s.q[i][j] = a.q[i][j];
    for (size_t i = 0; i < rb; ++i)
        for (size_t j = 0; j < rb; ++j) s.q[ra + i][ra + j] = b.q[i][j];
    return s;
}

namespace {

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    Int p(2);
    while (p * p <= n) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
        p += 1;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// p-primary part of f: generators (d_i / p^{v_p(d_i)}) g_i of order p^{v_p(d_i)}.
FiniteQuadraticForm p_part(const FiniteQuadraticForm& f, const Int& p) {
    FiniteQuadraticForm g;
    std::vector<Int> mult;  // multiplier per kept generator
    std::vector<size_t> idx;
    for (size_t i = 0; i < f.orders.size(); ++i) {
        Int d = f.orders[i], pk(1);
        while (d % p == 0) { d /= p; pk *= p; }
        if (pk == 1) continue;
        idx.push_back(i);
        mult.push_back(d);  // d = cofactor; element d*g_i has order p^k
        g.orders.push_back(pk);
    }
    size_t r = idx.size();
    g.q.assign(r, std::vector<Rat>(r, Rat(0)));
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) {
            Rat v = f.q[idx[a]][idx[b]] * Rat(mult[a] * mult[b]);
            g.q[a][b] = (a == b) ? mod2(v) : mod1(v);
        }
    return g;
}

// exhaustive isomorphism search for a p-group form (|A| small)
bool p_iso(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
           std::vector<std::vector<Int>>* witness) {
    if (f.orders != g.orders) return false;
    size_t r = f.orders.size();
    if (r == 0) return true;
    auto elems = g.elements();
    // candidate images per generator: same order and same q value
    std::vector<std::vector<std::vector<Int>>> cand(r);
    for (size_t i = 0; i < r; ++i) {
        std::vector<Int> ei(r, Int(0));
        ei[i] = 1;
        Rat qi = f.q_value(ei);
        for (const auto& e : elems)
            if (g.element_order(e) == f.orders[i] && g.q_value(e) == qi) cand[i].push_back(e);
        if (cand[i].empty()) return false;
    }
    // depth-first over images with bilinear-compatibility pruning, then check
    // that the images generate (surjective endomorphism of a finite group is
    // an automorphism).
    std::vector<std::vector<Int>> img(r);
    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == r) {
            // generation check: the matrix of images must hit every element
            IntMat m(int(r), int(r));
            for (size_t j = 0; j < r; ++j)
                for (size_t i = 0; i < r; ++i) m.at(int(i), int(j)) = img[j][i];
            // images generate A iff [m | diag(orders)] has cokernel trivial
            IntMat full(int(r), int(2 * r));
            for (size_t i = 0; i < r; ++i) {
                for (size_t j = 0; j < r; ++j) full.at(int(i), int(j)) = m.at(int(i), int(j));
                full.at(int(i), int(r + i)) = g.orders[i];
            }
            SmithResult s = smith_normal_form(full);
            Int prod(1);
            for (size_t i = 0; i < r; ++i) prod *= s.d.at(int(i), int(i));
            if (prod != 1 && prod != -1) return false;
            return true;
        }
        std::vector<Int> fei(r, Int(0));
        fei[pos] = 1;
        for (const auto& e : cand[pos]) {
            bool ok = true;
            for (size_t j = 0; j < pos && ok; ++j) {
                std::vector<Int> fej(r, Int(0));
                fej[j] = 1;
                if (g.b_value(e, img[j]) != f.b_value(fei, fej)) ok = false;
            }
            if (!ok) continue;
            img[pos] = e;
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) return false;
    if (witness) *witness = img;
    return true;
}

}  // namespace

FormIsoResult forms_isomorphic(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
                               const Int& order_bound) {
    if (f.order() > order_bound || g.order() > order_bound)
        throw std::invalid_argument("forms_isomorphic: order bound exceeded");
    FormIsoResult res;
    if (f.orders != g.orders) return res;
    if (f.order() == 1) {
        res.isomorphic = true;
        return res;
    }
    std::vector<Int> primes = prime_factors(f.order());
    // p-component-wise check
    for (const Int& p : primes) {
        FiniteQuadraticForm fp = p_part(f, p), gp = p_part(g, p);
        if (!p_iso(fp, gp, nullptr)) return res;
    }
    // whole-group witness (small orders; the p-wise screen above makes this
    // search succeed immediately in practice)
    std::vector<std::vector<Int>> w;
    if (!p_iso(f, g, &w)) return res;
    res.isomorphic = true;
    res.witness = std::move(w);
    return res;
}

bool unique_by_invariant(const GramLattice& l) {
    if (!l.is_even()) throw std::invalid_argument("unique_by_invariant: odd lattice");
    Int dt = determinant(l);
    if (dt == 0) throw std::invalid_argument("unique_by_invariant: degenerate lattice");
    auto [s, t] = signature(l);
    if (s <= 0 || t <= 0) return false;
    FiniteQuadraticForm f = discriminant_form(l);
    return f.length() <= l.rank() - 2;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    int n = a.rank(), m = b.rank();
    IntMat g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = a.gram.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram.at(i, j);
    std::vector<std::string> lab = a.labels;
    lab.insert(lab.end(), b.labels.begin(), b.labels.end());
    return GramLattice{std::move(g), std::move(lab)};
}

LatticeInvariant lattice_invariant(const GramLattice& l) {
    LatticeInvariant inv;
    auto st = signature(l);
    inv.s = st.first;
    inv.t = st.second;
    inv.form = discriminant_form(l);
    return inv;
}

Rat dual_q_value(const GramLattice& l, const std::vector<Rat>& coords) {
    int n = l.rank();
    if (int(coords.size()) != n) throw std::invalid_argument("dual_q_value: wrong length");
    std::vector<Rat> gv(size_t(n), Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gv[size_t(i)] += Rat(l.gram.at(i, j)) * coords[size_t(j)];
    for (const Rat& v : gv)
        if (v.get_den() != 1)
            throw std::invalid_argument("dual_q_value: vector not in the dual lattice");
    Rat acc(0);
    for (int i = 0; i < n; ++i) acc += coords[size_t(i)] * gv[size_t(i)];
    return mod2(acc);
}

}  // namespace fanok3
