#include "fanok3/elliptic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fanok3/localser.hpp"
#include "fanok3/paper_data.hpp"

namespace fanok3 {

namespace {

UniPoly X() { return UniPoly::var(); }
UniPoly C(const Rat& r) { return UniPoly::constant(r); }
UniPoly C1() { return UniPoly::constant(Rat(1)); }

}  // namespace

FibrationEquation build_fibration(int k, const std::vector<Rat>& lambda) {
    if (k < 6 || k > 18) throw std::invalid_argument("build_fibration: k must be in 6..18");
    size_t want = size_t(data::vertex_count(k) - 3);
    if (lambda.size() != want)
        throw std::invalid_argument("build_fibration: lambda arity mismatch");
    for (const Rat& l : lambda)
        if (l == 0) throw std::invalid_argument("build_fibration: zero lambda component");

    auto l = [&](int i) { return lambda[size_t(i - 1)]; };
    UniPoly x = X();
    UniPoly one_x = C1() + x;  // 1 + x1
    FibrationEquation f;
    f.k = k;
    f.lambda = lambda;
    switch (k) {
        case 6:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * x * (C(-4 * l(1) - 4 * l(3)) + one_x * one_x);
            f.a2 = C(4 * l(1) * l(3)) * x * x * x * x;
            f.a3 = UniPoly::zero();
            break;
        case 7:
            f.a1 = x * (C(-4 * l(2)) + x * (C(-4 * l(1)) + one_x * one_x));
            f.a2 = C(-2 * l(3)) * x * x * x * x * one_x;
            f.a3 = C(l(3) * l(3)) * x * x * x * x * x * x;
            break;
        case 8:
            f.a1 = x * (x * one_x * one_x - C(4 * l(1)) * (C(l(2)) + x));
            f.a2 = C(-2 * l(3)) * x * x * x * one_x * (C(l(2)) + x);
            f.a3 = C(l(3) * l(3)) * x * x * x * x * (C(l(2)) + x) * (C(l(2)) + x);
            break;
        case 9:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(3)) + x * (C(-4 * l(1)) + one_x * one_x));
            f.a2 = C(4 * l(1) * l(3)) * x * x * x;
            f.a3 = UniPoly::zero();
            break;
        case 10:
            f.a1 = C(l(1) * l(1)) + C(2 * l(1)) * x * one_x +
                   x * (C(-4 * l(2)) + x * one_x * one_x);
            f.a2 = C(-2 * l(3)) * x * x * (C(l(1)) + x + x * x);
            f.a3 = C(l(3) * l(3)) * x * x * x * x;
            break;
        case 11:
            f.a1 = x * x * (C(1 - 4 * l(1)) + C(2 - 4 * l(2)) * x + x * x);
            f.a2 = C(-2 * l(3)) * x * x * x * one_x;
            f.a3 = C(l(3) * l(3)) * x * x * x * x;
            break;
        case 12: {
            UniPoly s = C(l(1)) + x + x * x;
            f.a1 = s * s;
            f.a2 = C(-2 * l(3)) * x * x * (C(l(2)) + x) * s;
            f.a3 = C(l(3) * l(3)) * x * x * x * x * (C(l(2)) + x) * (C(l(2)) + x);
            break;
        }
        case 13:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(4)) + x * (C(-4 * l(1) - 4 * l(3)) + one_x * one_x));
            f.a2 = C(4 * l(1)) * x * x * x * (C(l(4)) + C(l(3)) * x);
            f.a3 = UniPoly::zero();
            break;
        case 14:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(4)) + x * (C(-4 * l(3)) + one_x * one_x));
            f.a2 = C(-2 * l(1)) * x * x * x * (C(l(2)) + x + x * x);
            f.a3 = C(l(1) * l(1)) * x * x * x * x * x * x;
            break;
        case 15:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(4)) + x * (C(-4 * l(3)) + one_x * one_x));
            f.a2 = C(-2 * l(1)) * x * x * (C(l(4)) + C(l(3)) * x) * (C(l(2)) + x + x * x);
            f.a3 = C(l(1) * l(1)) * x * x * x * x * (C(l(4)) + C(l(3)) * x) *
                   (C(l(4)) + C(l(3)) * x);
            break;
        case 16:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(4)) + x * (C(-4 * l(3)) + one_x * one_x));
            f.a2 = C(-2 * l(1)) * x * x * (C(l(2)) + x + x * x);
            f.a3 = C(l(1) * l(1)) * x * x * x * x;
            break;
        case 17:
            f.a1 = C(l(3) * l(3)) + C(2 * l(3)) * x * one_x +
                   x * (C(-4 * l(2)) * (C(l(4)) + x) +
                        x * (C(1 - 4 * l(1) - 4 * l(4) * l(5)) + C(Rat(2) - 4 * l(5)) * x +
                             x * x));
            f.a2 = C(4 * l(1)) * x * x * x * (C(l(4)) + x) * (C(l(2)) + C(l(5)) * x);
            f.a3 = UniPoly::zero();
            break;
        case 18:
            f.a1 = C(l(2) * l(2)) + C(2 * l(2)) * x * one_x +
                   x * (C(-4 * l(3)) * (C(l(5)) + x) +
                        x * (one_x * one_x - C(4 * l(4)) * (C(l(5)) + x)));
            f.a2 = C(-2 * l(1)) * x * x * x * (C(l(5)) + x) * (C(l(2)) + x + x * x);
            f.a3 = C(l(1) * l(1)) * x * x * x * x * x * x * (C(l(5)) + x) * (C(l(5)) + x);
            break;
    }
    return f;
}

WeierstrassModel to_weierstrass(const FibrationEquation& f) {
    WeierstrassModel w;
    w.shift = f.a1 / Rat(12);
    w.g2 = f.a1 * f.a1 / Rat(12) - f.a2;
    w.g3 = f.a1 * f.a2 / Rat(12) - f.a3 - f.a1 * f.a1 * f.a1 / Rat(216);
    w.delta = w.g2 * w.g2 * w.g2 - Rat(27) * w.g3 * w.g3;
    return w;
}

RationalFunction j_invariant(const WeierstrassModel& w) {
    if (w.delta.is_zero())
        throw std::invalid_argument("j_invariant: identically vanishing discriminant");
    UniPoly num = w.g2 * w.g2 * w.g2;
    UniPoly den = w.delta;
    if (num.is_zero()) return {UniPoly::zero(), C1()};
    UniPoly g = poly_gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    Rat lead = den.lc();
    return {num / lead, den / lead};
}

std::string kodaira_name(KodairaType t, int n) {
    switch (t) {
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::InStar: return "I" + std::to_string(n) + "*";
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::IVStar: return "IV*";
        case KodairaType::IIIStar: return "III*";
        case KodairaType::IIStar: return "II*";
    }
    return "?";
}

int kodaira_component_count(KodairaType t, int n) {
    switch (t) {
        case KodairaType::In: return std::max(1, n);
        case KodairaType::InStar: return n + 5;
        case KodairaType::II: return 1;
        case KodairaType::III: return 2;
        case KodairaType::IV: return 3;
        case KodairaType::IVStar: return 7;
        case KodairaType::IIIStar: return 8;
        case KodairaType::IIStar: return 9;
    }
    return 0;
}

int kodaira_euler(KodairaType t, int n) {
    switch (t) {
        case KodairaType::In: return n;
        case KodairaType::InStar: return n + 6;
        case KodairaType::II: return 2;
        case KodairaType::III: return 3;
        case KodairaType::IV: return 4;
        case KodairaType::IVStar: return 8;
        case KodairaType::IIIStar: return 9;
        case KodairaType::IIStar: return 10;
    }
    return 0;
}

std::vector<int> kodaira_multiplicities(KodairaType t, int n) {
    switch (t) {
        case KodairaType::In: return std::vector<int>(size_t(std::max(1, n)), 1);
        case KodairaType::InStar: {
            // Theta0, A, c_0..c_n, B, C
            std::vector<int> m = {1, 1};
            for (int i = 0; i <= n; ++i) m.push_back(2);
            m.push_back(1);
            m.push_back(1);
            return m;
        }
        case KodairaType::II: return {1};
        case KodairaType::III: return {1, 1};
        case KodairaType::IV: return {1, 1, 1};
        case KodairaType::IVStar: return {1, 2, 3, 2, 1, 2, 1};
        case KodairaType::IIIStar: return {1, 2, 3, 4, 3, 2, 1, 2};
        case KodairaType::IIStar: return {1, 2, 3, 4, 5, 6, 4, 2, 3};
    }
    return {};
}

std::string Place::str() const {
    switch (kind) {
        case Kind::Finite: return "x1=" + rat_str(finite);
        case Kind::Infinity: return "x1=inf";
        case Kind::Orbit: return "roots of " + orbit.str();
    }
    return "?";
}

std::string ComponentRef::str() const {
    switch (kind) {
        case Kind::Identity: return "0";
        case Kind::Cycle: return std::to_string(index);
        case Kind::Near: return "near";
        case Kind::Far: return "far";
    }
    return "?";
}

namespace {

struct LocalType {
    KodairaType type;
    int n = 0;
    int reductions = 0;
};

LocalType local_kodaira(int v2, int v3, int vd) {
    LocalType t{KodairaType::In, 0, 0};
    while (v2 >= 4 && v3 >= 6 && vd >= 12) {
        v2 -= 4;
        v3 -= 6;
        vd -= 12;
        ++t.reductions;
    }
    if (vd <= 0) throw std::logic_error("local_kodaira: smooth place");
    if (v2 == 0) {
        t.type = KodairaType::In;
        t.n = vd;
        return t;
    }
    if (vd == 2 && v3 == 1) { t.type = KodairaType::II; return t; }
    if (vd == 3 && v2 == 1) { t.type = KodairaType::III; return t; }
    if (vd == 4 && v3 == 2) { t.type = KodairaType::IV; return t; }
    if (vd == 6 && v2 >= 2 && v3 >= 3) { t.type = KodairaType::InStar; t.n = 0; return t; }
    if (v2 == 2 && v3 == 3 && vd >= 7) { t.type = KodairaType::InStar; t.n = vd - 6; return t; }
    if (vd == 8 && v3 == 4) { t.type = KodairaType::IVStar; return t; }
    if (vd == 9 && v2 == 3) { t.type = KodairaType::IIIStar; return t; }
    if (vd == 10 && v3 == 5) { t.type = KodairaType::IIStar; return t; }
    throw std::logic_error("local_kodaira: unclassifiable valuations");
}

constexpr int kInfValuation = 999;

int valuation_or_inf(const UniPoly& p, const Rat& r) {
    return p.is_zero() ? kInfValuation : p.valuation_at(r);
}

}  // namespace

std::vector<KodairaFiber> classify_fibers(const WeierstrassModel& w) {
    if (w.delta.is_zero())
        throw std::invalid_argument("classify_fibers: identically vanishing discriminant");
    std::vector<KodairaFiber> fibers;
    auto sqf = squarefree_decompose(w.delta);
    for (auto& [factor, mult] : sqf) {
        UniPoly rem = factor;
        if (mult >= 2) {
            // multi-vanishing places must be rational for the incidence and
            // lattice stages; split linear and quadratic factors exactly.
            while (rem.degree() >= 1) {
                Rat root;
                if (rem.degree() == 1) {
                    root = -rem.coeff(0) / rem.coeff(1);
                    rem = C1();
                } else if (rem.degree() == 2) {
                    Rat a = rem.coeff(2), b = rem.coeff(1), c = rem.coeff(0);
                    auto s = rat_sqrt(b * b - 4 * a * c);
                    if (!s)
                        throw DegenerateParameter(
                            "multi-component fiber over an irrational quadratic place");
                    root = (-b + *s) / (2 * a);
                    rem = rem.deflate(root, 1).monic();
                } else {
                    throw DegenerateParameter(
                        "multi-component fiber over an unresolved place of degree " +
                        std::to_string(rem.degree()));
                }
                KodairaFiber f;
                f.place = Place{Place::Kind::Finite, root, UniPoly::zero()};
                f.vg2 = valuation_or_inf(w.g2, root);
                f.vg3 = valuation_or_inf(w.g3, root);
                f.vdelta = mult;
                LocalType t = local_kodaira(f.vg2, f.vg3, f.vdelta);
                if (t.reductions > 0)
                    throw DegenerateParameter("non-minimal model at a finite place");
                f.type = t.type;
                f.n = t.n;
                fibers.push_back(std::move(f));
            }
        } else {
            KodairaFiber f;
            if (factor.degree() == 1) {
                f.place = Place{Place::Kind::Finite, -factor.coeff(0) / factor.coeff(1),
                                UniPoly::zero()};
                f.orbit_size = 1;
            } else {
                f.place = Place{Place::Kind::Orbit, Rat(0), factor};
                f.orbit_size = factor.degree();
            }
            f.type = KodairaType::In;
            f.n = 1;
            f.vdelta = 1;
            fibers.push_back(std::move(f));
        }
    }
    // infinity: weights 8, 12, 24
    if (w.g2.degree() > 8 || w.g3.degree() > 12 || w.delta.degree() > 24)
        throw std::logic_error("classify_fibers: degree bounds violated");
    int vd_inf = 24 - w.delta.degree();
    if (vd_inf > 0) {
        UniPoly g2r = w.g2.is_zero() ? UniPoly::zero() : w.g2.reverse(8);
        UniPoly g3r = w.g3.is_zero() ? UniPoly::zero() : w.g3.reverse(12);
        KodairaFiber f;
        f.place = Place{Place::Kind::Infinity, Rat(0), UniPoly::zero()};
        f.vg2 = g2r.is_zero() ? kInfValuation : g2r.valuation_at_zero();
        f.vg3 = g3r.is_zero() ? kInfValuation : g3r.valuation_at_zero();
        f.vdelta = vd_inf;
        LocalType t = local_kodaira(f.vg2, f.vg3, f.vdelta);
        if (t.reductions > 0) throw DegenerateParameter("non-minimal model at infinity");
        f.type = t.type;
        f.n = t.n;
        fibers.push_back(std::move(f));
    }
    int euler = 0;
    for (const KodairaFiber& f : fibers) euler += f.euler() * f.orbit_size;
    if (euler != 24)
        throw DegenerateParameter("Euler numbers sum to " + std::to_string(euler) +
                                  ", expected 24");
    return fibers;
}

std::vector<SectionMap> fibration_sections(int k, const std::vector<Rat>& lambda) {
    FibrationEquation f = build_fibration(k, lambda);
    auto l = [&](int i) { return lambda[size_t(i - 1)]; };
    UniPoly x = X();
    std::vector<SectionMap> out;
    out.push_back(SectionMap{"O", true, UniPoly::zero(), UniPoly::zero()});
    if (f.a3.is_zero())
        out.push_back(SectionMap{"O'", false, UniPoly::zero(), UniPoly::zero()});
    SectionMap q{"Q", false, UniPoly::zero(), UniPoly::zero()};
    switch (k) {
        case 6:
            q.y = C(l(1)) * x * x;
            q.z = C(l(1)) * x * x * (C(l(2)) + x + x * x);
            break;
        case 7: q.z = C(l(3)) * x * x * x; break;
        case 8: q.z = C(l(3)) * x * x * (C(l(2)) + x); break;
        case 9:
            q.y = C(l(1)) * x * x;
            q.z = C(l(1)) * x * x * (C(l(2)) + x + x * x);
            break;
        case 10: q.z = C(l(3)) * x * x; break;
        case 11: q.z = C(l(3)) * x * x; break;
        case 12: q.z = C(l(3)) * x * x * (C(l(2)) + x); break;
        case 13:
            q.y = x * (C(l(4)) + C(l(3)) * x);
            q.z = x * (C(l(4)) + C(l(3)) * x) * (C(l(2)) + x + x * x);
            break;
        case 14: q.z = C(l(1)) * x * x * x; break;
        case 15: q.z = C(l(1)) * x * x * (C(l(4)) + C(l(3)) * x); break;
        case 16: q.z = C(l(1)) * x * x; break;
        case 17:
            q.y = x * (C(l(2)) + C(l(5)) * x) * (C(l(4)) + x);
            q.z = x * (C(l(2)) + C(l(5)) * x) * (C(l(4)) + x) * (C(l(3)) + x + x * x);
            break;
        case 18: q.z = C(l(1)) * x * x * x * (C(l(5)) + x); break;
    }
    out.push_back(std::move(q));
    return out;
}

bool verify_section(const FibrationEquation& f, const SectionMap& s) {
    if (s.at_infinity) return true;
    UniPoly lhs = s.z * s.z;
    UniPoly rhs = Rat(4) * s.y * s.y * s.y + f.a1 * s.y * s.y + f.a2 * s.y + f.a3;
    return (lhs - rhs).is_zero();
}

namespace {

struct ChartData {
    UniPoly a1, a2, a3;
    Rat place;
    // per section: finite coordinates in this chart; absent for O
    std::vector<std::pair<UniPoly, UniPoly>> coords;
    std::vector<bool> present;
};

ChartData chart_for(const FibrationEquation& f, const KodairaFiber& fiber,
                    const std::vector<SectionMap>& sections) {
    ChartData c;
    if (fiber.place.kind == Place::Kind::Infinity) {
        if (f.a1.degree() > 4 || f.a2.degree() > 8 || f.a3.degree() > 12)
            throw std::logic_error("chart_for: coefficient degrees exceed K3 weights");
        c.a1 = f.a1.is_zero() ? UniPoly::zero() : f.a1.reverse(4);
        c.a2 = f.a2.is_zero() ? UniPoly::zero() : f.a2.reverse(8);
        c.a3 = f.a3.is_zero() ? UniPoly::zero() : f.a3.reverse(12);
        c.place = Rat(0);
        for (const SectionMap& s : sections) {
            if (s.at_infinity) {
                c.coords.push_back({UniPoly::zero(), UniPoly::zero()});
                c.present.push_back(false);
                continue;
            }
            if (s.y.degree() > 4 || s.z.degree() > 6)
                throw std::logic_error("chart_for: section degrees exceed chart weights");
            c.coords.push_back({s.y.is_zero() ? UniPoly::zero() : s.y.reverse(4),
                                s.z.is_zero() ? UniPoly::zero() : s.z.reverse(6)});
            c.present.push_back(true);
        }
    } else if (fiber.place.kind == Place::Kind::Finite) {
        c.a1 = f.a1;
        c.a2 = f.a2;
        c.a3 = f.a3;
        c.place = fiber.place.finite;
        for (const SectionMap& s : sections) {
            c.coords.push_back({s.y, s.z});
            c.present.push_back(!s.at_infinity);
        }
    } else {
        throw DegenerateParameter("incidence requested over an orbit place");
    }
    return c;
}

}  // namespace

IncidenceTable incidence_table(const FibrationEquation& f, const std::vector<KodairaFiber>& fibers,
                               const std::vector<SectionMap>& sections) {
    IncidenceTable table;
    size_t ns = sections.size();
    table.comp.assign(fibers.size(), std::vector<ComponentRef>(ns));
    table.contact.assign(fibers.size(),
                         std::vector<std::vector<int>>(ns, std::vector<int>(ns, 0)));
    for (size_t fi = 0; fi < fibers.size(); ++fi) {
        const KodairaFiber& fb = fibers[fi];
        if (fb.component_count() < 2) continue;
        ChartData c = chart_for(f, fb, sections);
        if (fb.type == KodairaType::In) {
            std::vector<std::pair<UniPoly, UniPoly>> finite;
            std::vector<size_t> idx;
            for (size_t si = 0; si < ns; ++si)
                if (c.present[si]) {
                    finite.push_back(c.coords[si]);
                    idx.push_back(si);
                }
            MultiplicativeLocal loc =
                analyze_multiplicative(fb.n, c.a1, c.a2, c.a3, c.place, finite);
            for (size_t a = 0; a < idx.size(); ++a) {
                int ci = loc.component[a];
                table.comp[fi][idx[a]] =
                    ci == 0 ? ComponentRef{ComponentRef::Kind::Identity, 0}
                            : ComponentRef{ComponentRef::Kind::Cycle, ci};
                for (size_t b = a + 1; b < idx.size(); ++b)
                    table.contact[fi][idx[a]][idx[b]] = table.contact[fi][idx[b]][idx[a]] =
                        loc.contact[a][b];
            }
            // sections meeting the identity component at the same smooth point
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t b = a + 1; b < idx.size(); ++b) {
                    if (loc.component[a] != 0 || loc.component[b] != 0) continue;
                    const auto& [ya, za] = finite[a];
                    const auto& [yb, zb] = finite[b];
                    if (ya.eval(c.place) != yb.eval(c.place) ||
                        za.eval(c.place) != zb.eval(c.place))
                        continue;
                    Rat z0 = za.eval(c.place);
                    UniPoly dy = ya - yb, dz = za - zb;
                    int v;
                    if (z0 != 0)
                        v = dy.is_zero() ? -1 : dy.valuation_at(c.place);
                    else
                        v = dz.is_zero() ? -1 : dz.valuation_at(c.place);
                    if (v < 0) throw std::logic_error("identical sections");
                    table.contact[fi][idx[a]][idx[b]] = table.contact[fi][idx[b]][idx[a]] = v;
                }
        } else if (fb.type == KodairaType::InStar) {
            std::vector<std::pair<UniPoly, UniPoly>> finite;
            std::vector<size_t> idx;
            for (size_t si = 0; si < ns; ++si)
                if (c.present[si]) {
                    finite.push_back(c.coords[si]);
                    idx.push_back(si);
                }
            auto res = analyze_star(fb.n, c.a1, c.a2, c.a3, c.place, finite);
            for (size_t a = 0; a < idx.size(); ++a) {
                ComponentRef r;
                switch (res[a]) {
                    case StarComponent::Identity: r = {ComponentRef::Kind::Identity, 0}; break;
                    case StarComponent::Near: r = {ComponentRef::Kind::Near, 0}; break;
                    case StarComponent::Far: r = {ComponentRef::Kind::Far, 0}; break;
                }
                table.comp[fi][idx[a]] = r;
            }
        } else if (fb.type == KodairaType::IVStar) {
            std::vector<std::pair<UniPoly, UniPoly>> finite;
            std::vector<size_t> idx;
            for (size_t si = 0; si < ns; ++si)
                if (c.present[si]) {
                    finite.push_back(c.coords[si]);
                    idx.push_back(si);
                }
            auto res = analyze_iv_star(c.a1, c.a2, c.a3, c.place, finite);
            for (size_t a = 0; a < idx.size(); ++a)
                table.comp[fi][idx[a]] = res[a] == IVStarComponent::Far
                                             ? ComponentRef{ComponentRef::Kind::Far, 0}
                                             : ComponentRef{ComponentRef::Kind::Identity, 0};
        } else {
            throw std::logic_error("incidence for fiber type " + fb.type_name() +
                                   " not implemented");
        }
    }
    return table;
}

std::vector<ComponentRef> section_incidence(const FibrationEquation& f,
                                            const std::vector<KodairaFiber>& fibers,
                                            const SectionMap& s) {
    IncidenceTable t = incidence_table(f, fibers, {s});
    std::vector<ComponentRef> out;
    for (size_t fi = 0; fi < fibers.size(); ++fi) out.push_back(t.comp[fi][0]);
    return out;
}

// ---------------------------------------------------------------------------
// birational maps (documentation + substitution self-check)

namespace {

MultiPoly MX() { return MultiPoly::term(Rat(1), 1, 0, 0); }   // x1
MultiPoly MY() { return MultiPoly::term(Rat(1), 0, 1, 0); }   // y1
MultiPoly MZ() { return MultiPoly::term(Rat(1), 0, 0, 1); }   // z1
MultiPoly MC(const Rat& r) { return MultiPoly::constant(r); }

}  // namespace

RationalMap3 birational_map(int k, const std::vector<Rat>& lambda) {
    if (k < 6 || k > 18) throw std::invalid_argument("birational_map: k in 6..18");
    auto l = [&](int i) { return lambda[size_t(i - 1)]; };
    MultiPoly x1 = MX(), y1 = MY(), z1 = MZ();
    MultiPoly one = MC(Rat(1));
    MultiPoly S = y1 * MC(Rat(1));  // placeholder
    RationalMap3 m;
    // common building blocks
    MultiPoly x1sq = x1 * x1, x1cb = x1 * x1 * x1;
    MultiPoly ypoly = x1 * y1 + x1sq * y1;  // (x1 + x1^2) y1
    switch (k) {
        case 6: {
            MultiPoly A = MC(l(2)) * y1 + ypoly + z1;
            m.num[0] = (y1 - MC(l(3)) * x1sq) * y1 * MC(Rat(2));
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * x1 * (y1 - MC(l(3)) * x1sq);
            break;
        }
        case 7: {
            MultiPoly A = MC(-l(3)) * x1cb + ypoly - z1;
            m.num[0] = MC(Rat(2)) * y1 * y1;
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * x1 * y1;
            break;
        }
        case 8: {
            MultiPoly A = MC(-l(2) * l(3)) * x1sq + MC(-l(3)) * x1cb + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * y1;
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * (MC(l(2)) + x1) * y1;
            break;
        }
        case 9: {
            MultiPoly A = MC(l(2)) * y1 + ypoly - z1;
            m.num[0] = MC(Rat(2)) * y1 * (y1 - MC(l(3)) * x1);
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = A;
            m.den[2] = MC(Rat(2)) * x1 * (MC(l(3)) * x1 - y1);
            break;
        }
        case 10: {
            MultiPoly A = MC(-l(3)) * x1sq + MC(l(1)) * y1 + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * y1;
            m.den[0] = x1 * A;
            m.num[1] = MC(Rat(-1)) * A;
            m.den[1] = MC(Rat(2)) * x1 * y1;
            m.num[2] = x1;
            m.den[2] = one;
            break;
        }
        case 11: {
            MultiPoly A = MC(-l(3)) * x1sq + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * y1;
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * x1 * y1;
            break;
        }
        case 12: {
            MultiPoly A = MC(-l(2) * l(3)) * x1sq + MC(-l(3)) * x1cb + MC(l(1)) * y1 + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * y1;
            m.den[0] = x1 * A;
            m.num[1] = MC(Rat(-1)) * A;
            m.den[1] = MC(Rat(2)) * (MC(l(2)) + x1) * y1;
            m.num[2] = x1;
            m.den[2] = one;
            break;
        }
        case 13: {
            MultiPoly B = MC(l(4)) * x1 + MC(l(3)) * x1sq;  // l4 x + l3 x^2
            MultiPoly A = MC(l(2)) * y1 + ypoly - z1;
            m.num[0] = MC(Rat(2)) * y1 * (y1 - B);
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = A;
            m.den[2] = MC(Rat(2)) * x1 * (B - y1);
            break;
        }
        case 14: {
            MultiPoly B = MC(l(4)) * x1 + MC(l(3)) * x1sq;
            MultiPoly A = MC(l(1)) * x1cb - MC(l(2)) * y1 - ypoly - z1;
            m.num[0] = MC(Rat(2)) * (B - y1) * y1;
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * x1 * (B - y1);
            break;
        }
        case 15: {
            MultiPoly B = MC(l(4)) * x1 + MC(l(3)) * x1sq;
            MultiPoly A = MC(-l(1) * l(4)) * x1sq + MC(-l(1) * l(3)) * x1cb + MC(l(2)) * y1 +
                          ypoly + z1;
            m.num[0] = (MC(l(4)) + MC(l(3)) * x1) * A;
            m.den[0] = MC(Rat(2)) * y1 * (y1 - B);
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = MC(Rat(-1)) * A;
            m.den[2] = MC(Rat(2)) * x1 * (y1 - B);
            break;
        }
        case 16: {
            MultiPoly B = MC(l(4)) * x1 + MC(l(3)) * x1sq;
            MultiPoly A = MC(-l(1)) * x1sq + MC(l(2)) * y1 + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * (y1 - B);
            m.den[0] = x1 * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = A;
            m.den[2] = MC(Rat(2)) * x1 * (B - y1);
            break;
        }
        case 17: {
            MultiPoly B = MC(l(2) * l(4)) * x1 + MC(l(2)) * x1sq + MC(l(4) * l(5)) * x1sq +
                          MC(l(5)) * x1cb;
            MultiPoly A = MC(l(3)) * y1 + ypoly + z1;
            m.num[0] = MC(Rat(2)) * y1 * (y1 - B);
            m.den[0] = (MC(l(4)) + x1) * A;
            m.num[1] = x1;
            m.den[1] = one;
            m.num[2] = A;
            m.den[2] = MC(Rat(2)) * x1 * (B - y1);
            break;
        }
        case 18: {
            m.num[0] = x1;
            m.den[0] = one;
            m.num[1] = MC(l(1) * l(5)) * x1cb + MC(l(1)) * x1sq * x1sq - MC(l(2)) * y1 - ypoly + z1;
            m.den[1] = MC(Rat(2)) * (MC(l(5)) + x1) * y1;
            m.num[2] = MC(-l(1)) * x1sq * (MC(l(5)) + x1);
            m.den[2] = y1;
            break;
        }
    }
    (void)S;
    return m;
}

MultiPoly hypersurface_polynomial(int k, const std::vector<Rat>& lambda) {
    if (k < 6 || k > 18) throw std::invalid_argument("hypersurface_polynomial: k in 6..18");
    auto verts = data::polytope_vertices(k);
    auto assign = data::lambda_assignment(k);
    MultiPoly p = MC(Rat(1)) + MultiPoly::term(Rat(1), 1, 0, 0) +
                  MultiPoly::term(Rat(1), 0, 1, 0) + MultiPoly::term(Rat(1), 0, 0, 1);
    for (size_t i = 3; i < verts.size(); ++i) {
        Rat coef = lambda[size_t(assign[i - 3] - 1)];
        p = p + MultiPoly::term(coef, int(verts[i][0]), int(verts[i][1]), int(verts[i][2]));
    }
    return p.cleared();
}

bool verify_birational_transform(int k, const std::vector<Rat>& lambda) {
    FibrationEquation f = build_fibration(k, lambda);
    RationalMap3 m = birational_map(k, lambda);
    MultiPoly eq = hypersurface_polynomial(k, lambda);
    // exponents present in eq per variable
    int maxe[3] = {0, 0, 0};
    for (const auto& [e, c] : eq.terms())
        for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], e[size_t(i)]);
    // common-denominator numerator of eq(x(..), y(..), z(..))
    MultiPoly total;
    for (const auto& [e, c] : eq.terms()) {
        MultiPoly t = MC(c);
        for (int i = 0; i < 3; ++i) {
            t = t * m.num[i].pow(e[size_t(i)]);
            t = t * m.den[i].pow(maxe[i] - e[size_t(i)]);
        }
        total = total + t;
    }
    // reduce modulo z1^2 - (4 y1^3 + a1 y1^2 + a2 y1 + a3): z1-degree reduction
    // with UniPoly coefficients per z1 power
    std::map<int, std::map<std::pair<int, int>, Rat>> by_z;
    for (const auto& [e, c] : total.terms()) by_z[e[2]][{e[0], e[1]}] = c;
    // rhs as MultiPoly
    auto to_multipoly_xy = [](const UniPoly& p, int ypow) {
        MultiPoly r;
        for (int i = 0; i <= (p.is_zero() ? -1 : p.degree()); ++i)
            if (p.coeff(i) != 0) r = r + MultiPoly::term(p.coeff(i), i, ypow, 0);
        return r;
    };
    MultiPoly rhs = to_multipoly_xy(UniPoly({}), 0);
    rhs = MultiPoly::term(Rat(4), 0, 3, 0) + to_multipoly_xy(f.a1, 2) + to_multipoly_xy(f.a2, 1) +
          to_multipoly_xy(f.a3, 0);
    MultiPoly acc;
    for (const auto& [zdeg, terms] : by_z) {
        MultiPoly part;
        for (const auto& [xy, c] : terms)
            part = part + MultiPoly::term(c, xy.first, xy.second, 0);
        // z1^zdeg = (z1^2)^(zdeg/2) * z1^(zdeg%2) -> rhs^(zdeg/2) * z1^(zdeg%2)
        MultiPoly repl = rhs.pow(zdeg / 2);
        if (zdeg % 2) repl = repl * MZ();
        acc = acc + part * repl;
    }
    return acc.is_zero();
}

GenericSpecialization draw_generic(int k, SplitMix64& rng, int max_tries) {
    int arity = data::vertex_count(k) - 3;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Rat> lambda;
        for (int i = 0; i < arity; ++i) lambda.push_back(rng.rational());
        try {
            FibrationEquation f = build_fibration(k, lambda);
            WeierstrassModel w = to_weierstrass(f);
            GenericSpecialization g;
            g.fibers = classify_fibers(w);
            g.lambda = std::move(lambda);
            return g;
        } catch (const DegenerateParameter&) {
            continue;
        }
    }
    throw DegenerateParameter("draw_generic: no generic specialization found");
}

}  // namespace fanok3
