#include "fanok3/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fanok3/paper_data.hpp"

namespace fanok3 {

Polytope reference_polytope(int k) { return Polytope{data::polytope_vertices(k), k}; }

namespace {

std::array<Int, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const std::array<Int, 3>& n, const std::array<long, 3>& v) {
    return n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
}

void check_3d(const Polytope& p) {
    // affine hull rank 3: some vertex triple plus a fourth point off the plane
    size_t n = p.vertices.size();
    if (n < 4) throw std::invalid_argument("polytope is not 3-dimensional");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::array<Int, 3> a, b;
                for (int t = 0; t < 3; ++t) {
                    a[size_t(t)] = p.vertices[j][size_t(t)] - p.vertices[i][size_t(t)];
                    b[size_t(t)] = p.vertices[k][size_t(t)] - p.vertices[i][size_t(t)];
                }
                std::array<Int, 3> nm = cross(a, b);
                if (nm[0] == 0 && nm[1] == 0 && nm[2] == 0) continue;
                for (size_t l = 0; l < n; ++l)
                    if (dot(nm, p.vertices[l]) != dot(nm, p.vertices[i])) return;
            }
    throw std::invalid_argument("polytope is not 3-dimensional");
}

}  // namespace

std::vector<Facet> facets(const Polytope& p) {
    check_3d(p);
    size_t n = p.vertices.size();
    std::map<std::pair<std::array<Int, 3>, Int>, std::vector<int>> seen;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::array<Int, 3> a, b;
                for (int t = 0; t < 3; ++t) {
                    a[size_t(t)] = p.vertices[j][size_t(t)] - p.vertices[i][size_t(t)];
                    b[size_t(t)] = p.vertices[k][size_t(t)] - p.vertices[i][size_t(t)];
                }
                std::array<Int, 3> nm = cross(a, b);
                if (nm[0] == 0 && nm[1] == 0 && nm[2] == 0) continue;
                Int lev = dot(nm, p.vertices[i]);
                bool all_ge = true, all_le = true;
                for (size_t l = 0; l < n; ++l) {
                    Int d = dot(nm, p.vertices[l]);
                    if (d < lev) all_ge = false;
                    if (d > lev) all_le = false;
                }
                if (!all_ge && !all_le) continue;
                if (!all_ge) {  // flip to make the normal inner
                    for (auto& c : nm) c = -c;
                    lev = -lev;
                }
                Int g(0);
                for (const auto& c : nm) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                for (auto& c : nm) c /= g;
                lev = dot(nm, p.vertices[i]);
                std::vector<int> on;
                for (size_t l = 0; l < n; ++l)
                    if (dot(nm, p.vertices[l]) == lev) on.push_back(int(l));
                seen[{nm, lev}] = on;
            }
    std::vector<Facet> out;
    for (auto& [key, on] : seen) out.push_back(Facet{on, key.first, key.second});
    return out;
}

namespace {

bool origin_interior(const std::vector<Facet>& fs) {
    for (const Facet& f : fs)
        if (f.level >= 0) return false;  // <n, 0> = 0 must be > level
    return true;
}

}  // namespace

RationalPolytope polar_dual(const Polytope& p) {
    std::vector<Facet> fs = facets(p);
    if (!origin_interior(fs)) throw std::invalid_argument("polar_dual: origin not interior");
    RationalPolytope d;
    for (const Facet& f : fs) {
        std::array<Rat, 3> v;
        for (int t = 0; t < 3; ++t) v[size_t(t)] = rat(f.inner_normal[size_t(t)], -f.level);
        d.vertices.push_back(v);
    }
    return d;
}

bool is_reflexive(const Polytope& p) {
    std::vector<Facet> fs = facets(p);
    if (!origin_interior(fs)) throw std::invalid_argument("is_reflexive: origin not interior");
    for (const Facet& f : fs)
        if (f.level != -1) return false;
    return true;
}

bool is_fano(const Polytope& p) {
    std::vector<Facet> fs = facets(p);
    if (!origin_interior(fs)) return false;
    for (const Facet& f : fs) {
        if (f.vertex_indices.size() != 3) return false;
        IntMat m(3, 3);
        for (int c = 0; c < 3; ++c)
            for (int r = 0; r < 3; ++r)
                m.at(r, c) = p.vertices[size_t(f.vertex_indices[size_t(c)])][size_t(r)];
        Int d = m.det();
        if (d != 1 && d != -1) return false;
    }
    return true;
}

GaleData gale_transform(const Polytope& p) {
    size_t l = p.vertices.size();
    static const std::array<long, 3> e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        if (p.vertices[size_t(i)] != e[i])
            throw std::invalid_argument("gale_transform: first three vertices must be e1,e2,e3");
    GaleData g;
    g.extended = IntMat(4, int(l) + 1);
    for (int c = 0; c <= int(l); ++c) g.extended.at(0, c) = 1;
    for (int c = 1; c <= int(l); ++c)
        for (int r = 0; r < 3; ++r) g.extended.at(r + 1, c) = p.vertices[size_t(c - 1)][size_t(r)];
    int cols = int(l) - 3;
    g.kernel = IntMat(int(l) + 1, cols);
    for (int i = 0; i < cols; ++i) {
        // normalization: row (i+4) carries the 1 (vertex i+4 in 1-based terms)
        g.kernel.at(i + 4, i) = 1;
        const auto& v = p.vertices[size_t(i + 3)];
        Int sum(1);
        for (int r = 0; r < 3; ++r) {
            g.kernel.at(r + 1, i) = -Int(v[size_t(r)]);
            sum += -Int(v[size_t(r)]);
        }
        g.kernel.at(0, i) = -sum;
    }
    // defining property
    IntMat prod = g.extended * g.kernel;
    for (int r = 0; r < prod.rows(); ++r)
        for (int c = 0; c < prod.cols(); ++c)
            if (prod.at(r, c) != 0) throw std::logic_error("gale_transform: kernel check failed");
    return g;
}

Polytope to_integral(const RationalPolytope& p) {
    Polytope out;
    for (const auto& v : p.vertices) {
        std::array<long, 3> iv;
        for (int t = 0; t < 3; ++t) {
            if (v[size_t(t)].get_den() != 1)
                throw std::invalid_argument("to_integral: non-integral vertex");
            iv[size_t(t)] = long(v[size_t(t)].get_num().get_si());
        }
        out.vertices.push_back(iv);
    }
    return out;
}

bool dual_involution_holds(const Polytope& p) {
    Polytope dd = to_integral(polar_dual(to_integral(polar_dual(p))));
    std::set<std::array<long, 3>> a(p.vertices.begin(), p.vertices.end());
    std::set<std::array<long, 3>> b(dd.vertices.begin(), dd.vertices.end());
    return a == b;
}

LaurentEquation anticanonical_equation(const Polytope& p) {
    if (p.label < 1 || p.label > 18)
        throw std::invalid_argument("anticanonical_equation: reference polytopes only");
    LaurentEquation eq;
    eq.terms.push_back({0, {0, 0, 0}});
    eq.terms.push_back({0, {1, 0, 0}});
    eq.terms.push_back({0, {0, 1, 0}});
    eq.terms.push_back({0, {0, 0, 1}});
    std::vector<int> assign = (p.label >= 6) ? data::lambda_assignment(p.label)
                                             : std::vector<int>{};
    if (assign.empty())
        for (int i = 1; i <= int(p.vertices.size()) - 3; ++i) assign.push_back(i);
    for (size_t i = 3; i < p.vertices.size(); ++i) {
        const auto& v = p.vertices[i];
        eq.terms.push_back({assign[i - 3], {int(v[0]), int(v[1]), int(v[2])}});
    }
    return eq;
}

namespace {

std::string render_terms(const std::vector<std::pair<int, std::array<int, 3>>>& terms) {
    // canonical form: the four unit-coefficient monomials grouped as
    // x*y*z*(x + y + z + 1) when they appear multiplied by xyz (cleared
    // form); otherwise plain sum. Rendering matches equation_string().
    static const std::array<std::string, 3> vars = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [tok, e] : terms) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream term;
        bool started = false;
        if (tok >= 1) {
            term << "l" << tok;
            started = true;
        }
        for (int i = 0; i < 3; ++i) {
            if (e[size_t(i)] == 0) continue;
            if (started) term << "*";
            started = true;
            term << vars[size_t(i)];
            if (e[size_t(i)] != 1) term << "^" << e[size_t(i)];
        }
        if (!started) term << "1";
        os << term.str();
    }
    return os.str();
}

}  // namespace

std::string LaurentEquation::laurent_str() const { return render_terms(terms); }

std::string LaurentEquation::cleared_str() const {
    std::array<int, 3> mn = {0, 0, 0};
    for (const auto& [tok, e] : terms)
        for (int i = 0; i < 3; ++i) mn[size_t(i)] = std::min(mn[size_t(i)], e[size_t(i)]);
    // cleared unit-coefficient part becomes x^a y^b z^c * (x + y + z + 1);
    // lambda terms are rendered individually in slot order.
    std::array<int, 3> sh = {-mn[0], -mn[1], -mn[2]};
    static const std::array<std::string, 3> vars = {"x", "y", "z"};
    std::ostringstream head;
    bool started = false;
    for (int i = 0; i < 3; ++i) {
        if (sh[size_t(i)] == 0) continue;
        if (started) head << "*";
        started = true;
        head << vars[size_t(i)];
        if (sh[size_t(i)] != 1) head << "^" << sh[size_t(i)];
    }
    std::ostringstream os;
    if (started)
        os << head.str() << "*(x + y + z + 1)";
    else
        os << "(x + y + z + 1)";
    // lambda terms sorted by token index
    std::vector<std::pair<int, std::array<int, 3>>> lam;
    for (const auto& [tok, e] : terms)
        if (tok >= 1) lam.push_back({tok, {e[0] + sh[0], e[1] + sh[1], e[2] + sh[2]}});
    std::sort(lam.begin(), lam.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    os.str("");
    if (started)
        os << head.str() << "*(x + y + z + 1)";
    else
        os << "(x + y + z + 1)";
    std::string out = os.str();
    for (const auto& [tok, e] : lam) {
        std::ostringstream term;
        term << " + l" << tok;
        for (int i = 0; i < 3; ++i) {
            if (e[size_t(i)] == 0) continue;
            term << "*" << vars[size_t(i)];
            if (e[size_t(i)] != 1) term << "^" << e[size_t(i)];
        }
        out += term.str();
    }
    return out;
}

}  // namespace fanok3
