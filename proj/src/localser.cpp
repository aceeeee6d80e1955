#include "fanok3/localser.hpp"

#include <optional>
#include <stdexcept>

namespace fanok3 {

namespace {

// ---- coefficient fields ----------------------------------------------------

struct RatField {
    using Elem = Rat;
    static Elem zero() { return Rat(0); }
    static Elem from(const Rat& r) { return r; }
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) { return Rat(1) / a; }
};

// Q(sqrt(D)) for a fixed non-square D, elements a + b sqrt(D).
struct QuadField {
    Rat D;
    struct Elem {
        Rat a, b;
    };
    Elem zero() const { return {Rat(0), Rat(0)}; }
    Elem from(const Rat& r) const { return {r, Rat(0)}; }
    static bool is_zero(const Elem& e) { return e.a == 0 && e.b == 0; }
    static Elem add(const Elem& x, const Elem& y) { return {x.a + y.a, x.b + y.b}; }
    static Elem sub(const Elem& x, const Elem& y) { return {x.a - y.a, x.b - y.b}; }
    Elem mul(const Elem& x, const Elem& y) const {
        return {x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    static Elem neg(const Elem& x) { return {-x.a, -x.b}; }
    Elem inv(const Elem& x) const {
        Rat nrm = x.a * x.a - D * x.b * x.b;
        if (nrm == 0) throw std::logic_error("quadratic field: non-invertible element");
        return {x.a / nrm, -x.b / nrm};
    }
};

// ---- truncated power series -------------------------------------------------

template <class F>
struct Series {
    using Elem = typename F::Elem;
    const F* field;
    int N;
    std::vector<Elem> c;

    Series(const F* f, int n) : field(f), N(n) {
        Elem z = zero_of(f);
        c.assign(size_t(n), z);
    }
    static Elem zero_of(const F* f) {
        if constexpr (std::is_same_v<F, RatField>)
            return Rat(0);
        else
            return f->zero();
    }
    static Series constant(const F* f, int n, const Elem& v) {
        Series s(f, n);
        s.c[0] = v;
        return s;
    }
};

// thin wrappers so RatField's static and QuadField's member ops unify
template <class F>
typename F::Elem fadd(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    return f.add(a, b);
}
template <class F>
typename F::Elem fsub(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    return f.sub(a, b);
}
template <class F>
typename F::Elem fmul(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    return f.mul(a, b);
}
template <class F>
typename F::Elem finv(const F& f, const typename F::Elem& a) {
    return f.inv(a);
}

template <class F>
Series<F> sadd(const Series<F>& x, const Series<F>& y) {
    Series<F> r(x.field, x.N);
    for (int i = 0; i < x.N; ++i) r.c[size_t(i)] = fadd(*x.field, x.c[size_t(i)], y.c[size_t(i)]);
    return r;
}
template <class F>
Series<F> ssub(const Series<F>& x, const Series<F>& y) {
    Series<F> r(x.field, x.N);
    for (int i = 0; i < x.N; ++i) r.c[size_t(i)] = fsub(*x.field, x.c[size_t(i)], y.c[size_t(i)]);
    return r;
}
template <class F>
Series<F> smul(const Series<F>& x, const Series<F>& y) {
    Series<F> r(x.field, x.N);
    for (int i = 0; i < x.N; ++i) {
        if (F::is_zero(x.c[size_t(i)])) continue;
        for (int j = 0; j + i < x.N; ++j) {
            if (F::is_zero(y.c[size_t(j)])) continue;
            r.c[size_t(i + j)] =
                fadd(*x.field, r.c[size_t(i + j)], fmul(*x.field, x.c[size_t(i)], y.c[size_t(j)]));
        }
    }
    return r;
}
template <class F>
Series<F> sinv(const Series<F>& x) {
    if (F::is_zero(x.c[0])) throw std::logic_error("series inverse of non-unit");
    Series<F> r(x.field, x.N);
    typename F::Elem i0 = finv(*x.field, x.c[0]);
    r.c[0] = i0;
    for (int i = 1; i < x.N; ++i) {
        typename F::Elem acc = Series<F>::zero_of(x.field);
        for (int j = 1; j <= i; ++j)
            acc = fadd(*x.field, acc, fmul(*x.field, x.c[size_t(j)], r.c[size_t(i - j)]));
        r.c[size_t(i)] = F::neg(fmul(*x.field, acc, i0));
    }
    return r;
}
// square root with prescribed leading value g (g*g == x.c[0])
template <class F>
Series<F> ssqrt(const Series<F>& x, const typename F::Elem& g) {
    Series<F> r(x.field, x.N);
    r.c[0] = g;
    typename F::Elem two_g = fadd(*x.field, g, g);
    typename F::Elem inv2g = finv(*x.field, two_g);
    for (int i = 1; i < x.N; ++i) {
        typename F::Elem acc = Series<F>::zero_of(x.field);
        for (int j = 1; j < i; ++j)
            acc = fadd(*x.field, acc, fmul(*x.field, r.c[size_t(j)], r.c[size_t(i - j)]));
        r.c[size_t(i)] = fmul(*x.field, fsub(*x.field, x.c[size_t(i)], acc), inv2g);
    }
    return r;
}
template <class F>
std::optional<int> sval(const Series<F>& x) {
    for (int i = 0; i < x.N; ++i)
        if (!F::is_zero(x.c[size_t(i)])) return i;
    return std::nullopt;
}

// p(x1) as a series in t = x1 - r
template <class F>
Series<F> from_poly(const F* f, int n, const UniPoly& p, const Rat& r) {
    UniPoly sh = p.shift(r);  // sh(t) = p(t + r)
    Series<F> s(f, n);
    for (int i = 0; i < n && i <= (sh.is_zero() ? -1 : sh.degree()); ++i) {
        if constexpr (std::is_same_v<F, RatField>)
            s.c[size_t(i)] = sh.coeff(i);
        else
            s.c[size_t(i)] = f->from(sh.coeff(i));
    }
    return s;
}

// ---- shared local setup ------------------------------------------------------

struct Translated {
    // monic cubic translated so the multiple root of the reduction is at 0
    Rat y0;           // the multiple root
    UniPoly B2, B4, B6;  // still x1-polynomials (shift applied later per field)
};

Rat multiple_root(const UniPoly& a1, const UniPoly& a2, const UniPoly& a3, const Rat& r,
                  bool expect_double) {
    // reduction of the monic cubic y^3 + (a1/4) y^2 + (a2/4) y + (a3/4) at x1 = r
    Rat c2 = a1.eval(r) / 4, c4 = a2.eval(r) / 4, c6 = a3.eval(r) / 4;
    UniPoly f0({});
    f0 = UniPoly::monomial(Rat(1), 3) + UniPoly::monomial(c2, 2) + UniPoly::monomial(c4, 1) +
         UniPoly::constant(c6);
    UniPoly g = poly_gcd(f0, f0.derivative());
    if (expect_double) {
        if (g.degree() != 1) throw std::logic_error("place is not a node");
        return -g.coeff(0) / g.coeff(1);
    }
    // cusp: triple root
    if (g.degree() != 2) throw std::logic_error("place is not a cusp");
    // g = (y - y0)^2
    Rat y0 = -g.coeff(1) / (2 * g.coeff(2));
    return y0;
}

Translated translate(const UniPoly& a1, const UniPoly& a2, const UniPoly& a3, const Rat& y0) {
    Translated t;
    t.y0 = y0;
    UniPoly c2 = a1 / Rat(4), c4 = a2 / Rat(4), c6 = a3 / Rat(4);
    UniPoly y0c = UniPoly::constant(y0);
    t.B2 = c2 + UniPoly::constant(3 * y0);
    t.B4 = c4 + c2 * (2 * y0) + UniPoly::constant(3 * y0 * y0);
    t.B6 = c6 + c4 * y0 + c2 * (y0 * y0) + UniPoly::constant(y0 * y0 * y0);
    return t;
}

// ---- multiplicative analysis over a chosen field -----------------------------

template <class F>
void run_multiplicative(const F& fld, int n, int N, const Translated& tr, const Rat& place,
                        const std::vector<std::pair<UniPoly, UniPoly>>& sections,
                        const std::vector<bool>& through_node, const typename F::Elem& gamma,
                        MultiplicativeLocal& out) {
    const F* f = &fld;
    Series<F> B2 = from_poly(f, N, tr.B2, place);
    Series<F> B4 = from_poly(f, N, tr.B4, place);
    Series<F> B6 = from_poly(f, N, tr.B6, place);

    // Newton for the simple root e of Y^3 + B2 Y^2 + B4 Y + B6 near -B2(0)
    Series<F> e = Series<F>::constant(f, N, F::neg(B2.c[0]));
    for (int it = 0; it < N + 2; ++it) {
        Series<F> e2 = smul(e, e);
        Series<F> Fe = sadd(sadd(smul(e2, e), smul(B2, e2)), sadd(smul(B4, e), B6));
        Series<F> Fp = sadd(sadd(smul(e2, Series<F>::constant(f, N, f->from(Rat(3)))),
                                 smul(smul(B2, e), Series<F>::constant(f, N, f->from(Rat(2))))),
                            B4);
        e = ssub(e, smul(Fe, sinv(Fp)));
    }
    Series<F> beta = sadd(B2, e);
    Series<F> delta = sadd(B4, smul(e, beta));
    Series<F> chk = sadd(B6, smul(e, delta));
    if (sval(chk)) throw std::logic_error("Hensel factorization failed");
    Series<F> m(f, N);
    {
        Series<F> half = Series<F>::constant(f, N, f->from(rat(-1, 2)));
        m = smul(beta, half);
    }
    Series<F> d = ssub(smul(m, m), delta);
    auto vd = sval(d);
    if (!vd || *vd != n) throw std::logic_error("unexpected A_{n-1} depth at node");

    size_t ns = sections.size();
    std::vector<std::optional<Series<F>>> U(ns);
    for (size_t i = 0; i < ns; ++i) {
        if (!through_node[i]) continue;
        Series<F> y = from_poly(f, N, sections[i].first, place);
        Series<F> w = from_poly(f, N, sections[i].second * rat(1, 2), place);
        Series<F> Y = ssub(y, Series<F>::constant(f, N, f->from(tr.y0)));
        Series<F> E = ssub(Y, e);
        Series<F> eta = ssqrt(E, gamma);
        Series<F> Ui = ssub(smul(w, sinv(eta)), ssub(Y, m));
        Series<F> Wi = sadd(smul(w, sinv(eta)), ssub(Y, m));
        auto vu = sval(Ui), vw = sval(Wi);
        if (!vu || !vw || *vu + *vw != n)
            throw std::logic_error("branch valuations inconsistent with I_n");
        out.component[i] = *vu;
        U[i] = Ui;
    }
    // pairwise contacts on a shared non-identity component
    for (size_t i = 0; i < ns; ++i)
        for (size_t j = i + 1; j < ns; ++j) {
            if (!U[i] || !U[j]) continue;
            if (out.component[i] != out.component[j] || out.component[i] == 0) continue;
            Series<F> dU = ssub(*U[i], *U[j]);
            auto v = sval(dU);
            if (!v) throw std::logic_error("sections agree to series precision at a node");
            out.contact[i][j] = out.contact[j][i] = *v - out.component[i];
        }
}

}  // namespace

MultiplicativeLocal analyze_multiplicative(int n, const UniPoly& a1, const UniPoly& a2,
                                           const UniPoly& a3, const Rat& place,
                                           const std::vector<std::pair<UniPoly, UniPoly>>& sections) {
    if (n < 1) throw std::invalid_argument("analyze_multiplicative: n >= 1 required");
    MultiplicativeLocal out;
    out.n = n;
    size_t ns = sections.size();
    out.component.assign(ns, 0);
    out.contact.assign(ns, std::vector<int>(ns, 0));

    Rat y0 = multiple_root(a1, a2, a3, place, /*expect_double=*/true);
    Translated tr = translate(a1, a2, a3, y0);
    // c = B2 at the place = tangent-cone coefficient (nonzero for a node)
    Rat c = tr.B2.eval(place);
    if (c == 0) throw std::logic_error("analyze_multiplicative: cusp at multiplicative place");

    std::vector<bool> through(ns, false);
    bool any = false;
    for (size_t i = 0; i < ns; ++i) {
        Rat yv = sections[i].first.eval(place);
        Rat zv = sections[i].second.eval(place);
        through[i] = (yv == y0 && zv == 0);
        any = any || through[i];
    }
    if (n == 1) {
        // I_1: single component; nothing to locate (sections through the node
        // would make the section pass through a smooth surface point anyway).
        return out;
    }
    if (!any) return out;

    int N = n + 10;
    auto g = rat_sqrt(c);
    if (g) {
        RatField fld;
        run_multiplicative(fld, n, N, tr, place, sections, through, *g, out);
    } else {
        QuadField fld{c};
        QuadField::Elem gamma{Rat(0), Rat(1)};
        run_multiplicative(fld, n, N, tr, place, sections, through, gamma, out);
    }
    return out;
}

std::vector<StarComponent> analyze_star(int n, const UniPoly& a1, const UniPoly& a2,
                                        const UniPoly& a3, const Rat& place,
                                        const std::vector<std::pair<UniPoly, UniPoly>>& sections) {
    if (n < 1) throw std::invalid_argument("analyze_star: n >= 1 required");
    Rat y0 = multiple_root(a1, a2, a3, place, /*expect_double=*/false);
    Translated tr = translate(a1, a2, a3, y0);
    int vB2 = tr.B2.is_zero() ? 1000 : tr.B2.valuation_at(place);
    int vB4 = tr.B4.is_zero() ? 1000 : tr.B4.valuation_at(place);
    int vB6 = tr.B6.is_zero() ? 1000 : tr.B6.valuation_at(place);
    if (vB2 < 1 || vB4 < 2 || vB6 < 3)
        throw std::logic_error("analyze_star: valuations inconsistent with I_n*");
    // first-blowup cubic C(Z) = Z^3 + (B2/t) Z^2 + (B4/t^2) Z + (B6/t^3) at t=0
    auto shifted_coeff = [&](const UniPoly& p, int k) {
        if (p.is_zero()) return Rat(0);
        return p.shift(place).coeff(k);
    };
    UniPoly C = UniPoly::monomial(Rat(1), 3) + UniPoly::monomial(shifted_coeff(tr.B2, 1), 2) +
                UniPoly::monomial(shifted_coeff(tr.B4, 2), 1) +
                UniPoly::constant(shifted_coeff(tr.B6, 3));
    UniPoly g = poly_gcd(C, C.derivative());
    if (g.degree() != 1) throw std::logic_error("analyze_star: expected a double root (n >= 1)");
    Rat dbl = -g.coeff(0) / g.coeff(1);
    UniPoly lin = C.divexact(g * g);  // (Z - s)
    Rat simple = -lin.coeff(0) / lin.coeff(1);

    std::vector<StarComponent> out(sections.size(), StarComponent::Identity);
    for (size_t i = 0; i < sections.size(); ++i) {
        Rat yv = sections[i].first.eval(place);
        Rat zv = sections[i].second.eval(place);
        if (yv != y0 || zv != 0) continue;  // misses the cusp
        UniPoly Y = (sections[i].first - UniPoly::constant(y0)).shift(place);
        Rat Y1 = Y.is_zero() ? Rat(0) : Y.coeff(1);
        if (Y1 == simple)
            out[i] = StarComponent::Near;
        else if (Y1 == dbl)
            out[i] = StarComponent::Far;
        else
            throw std::logic_error("analyze_star: section meets a multiplicity-2 component");
    }
    return out;
}

std::vector<IVStarComponent> analyze_iv_star(const UniPoly& a1, const UniPoly& a2,
                                             const UniPoly& a3, const Rat& place,
                                             const std::vector<std::pair<UniPoly, UniPoly>>& sections) {
    Rat y0 = multiple_root(a1, a2, a3, place, /*expect_double=*/false);
    Translated tr = translate(a1, a2, a3, y0);
    int vB4 = tr.B4.is_zero() ? 1000 : tr.B4.valuation_at(place);
    int vB6 = tr.B6.is_zero() ? 1000 : tr.B6.valuation_at(place);
    if (vB4 < 3 || vB6 != 4) throw std::logic_error("analyze_iv_star: valuations not IV*");
    std::vector<IVStarComponent> out(sections.size(), IVStarComponent::Identity);
    for (size_t i = 0; i < sections.size(); ++i) {
        Rat yv = sections[i].first.eval(place);
        Rat zv = sections[i].second.eval(place);
        if (yv != y0 || zv != 0) continue;
        UniPoly Y = (sections[i].first - UniPoly::constant(y0)).shift(place);
        int vY = Y.is_zero() ? 1000 : Y.valuation_at_zero();
        UniPoly w = (sections[i].second * rat(1, 2)).shift(place);
        int vw = w.is_zero() ? 1000 : w.valuation_at_zero();
        if (vY < 2 || vw != 2)
            throw std::logic_error("analyze_iv_star: unexpected section valuations");
        out[i] = IVStarComponent::Far;
    }
    return out;
}

}  // namespace fanok3
