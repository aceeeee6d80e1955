#include "fanok3/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace fanok3 {

namespace {
const Rat kZero(0);
}

UniPoly UniPoly::constant(const Rat& a) {
    UniPoly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

UniPoly UniPoly::monomial(const Rat& a, int deg) {
    UniPoly p;
    if (a != 0) {
        p.c_.assign(size_t(deg) + 1, Rat(0));
        p.c_[size_t(deg)] = a;
    }
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(int i) const {
    if (i < 0 || size_t(i) >= c_.size()) return kZero;
    return c_[size_t(i)];
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (Rat& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> r(c_);
    for (Rat& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator/(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("division by zero scalar");
    std::vector<Rat> r(c_);
    for (Rat& v : r) v /= s;
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1, Rat(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(long(i));
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::shift(const Rat& c) const {
    // Horner in (x + c)
    UniPoly acc;
    UniPoly lin({});  // x + c
    lin = UniPoly::var() + UniPoly::constant(c);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UniPoly::constant(c_[i]);
    return acc;
}

UniPoly UniPoly::reverse(int weight) const {
    if (is_zero()) return UniPoly();
    if (degree() > weight) throw std::invalid_argument("reverse: degree exceeds weight");
    std::vector<Rat> r(size_t(weight) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[size_t(weight) - i] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const { return *this / lc(); }

int UniPoly::valuation_at_zero() const {
    if (is_zero()) throw std::invalid_argument("valuation of zero polynomial");
    int v = 0;
    while (c_[size_t(v)] == 0) ++v;
    return v;
}

int UniPoly::valuation_at(const Rat& r) const {
    if (is_zero()) throw std::invalid_argument("valuation of zero polynomial");
    if (r == 0) return valuation_at_zero();
    UniPoly p = *this;
    int v = 0;
    while (p.eval(r) == 0) {
        p = p.deflate(r, 1);
        ++v;
    }
    return v;
}

UniPoly UniPoly::deflate(const Rat& r, int m) const {
    UniPoly p = *this;
    for (int k = 0; k < m; ++k) {
        // synthetic division by (x - r)
        std::vector<Rat> q(p.c_.size() > 0 ? p.c_.size() - 1 : 0, Rat(0));
        Rat carry(0);
        for (size_t i = p.c_.size(); i-- > 1;) {
            carry = p.c_[i] + carry * r;
            q[i - 1] = carry;
            if (i == 1) break;
        }
        // remainder must vanish
        Rat rem = p.c_.empty() ? Rat(0) : p.c_[0] + carry * r;
        if (rem != 0) throw std::invalid_argument("deflate: (x - r) does not divide");
        p = UniPoly(std::move(q));
    }
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly r = *this;
    std::vector<Rat> q;
    if (!is_zero() && degree() >= d.degree())
        q.assign(size_t(degree() - d.degree()) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int sh = r.degree() - d.degree();
        Rat f = r.lc() / d.lc();
        q[size_t(sh)] = f;
        r = r - d * UniPoly::monomial(f, sh);
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::invalid_argument("divexact: nonzero remainder");
    return q;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat abs_a = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (abs_a == 1);
        if (i == 0 || !unit) os << rat_str(abs_a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// integer-polynomial helpers for the subresultant PRS

namespace {

using ZPoly = std::vector<Int>;  // ascending, trimmed

ZPoly ztrim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// clear denominators and divide by integer content
ZPoly primitive_int(const UniPoly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    Int den(1);
    for (const Rat& a : p.coeffs()) {
        Int d = a.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    Int cont(0);
    for (const Rat& a : p.coeffs()) {
        Int v = a.get_num() * (den / a.get_den());
        out.push_back(v);
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    }
    for (Int& v : out) v /= cont;
    return ztrim(std::move(out));
}

Int zpow(const Int& b, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B
ZPoly prem(ZPoly A, const ZPoly& B) {
    int dB = int(B.size()) - 1;
    const Int& lb = B.back();
    while (int(A.size()) - 1 >= dB && !A.empty()) {
        int dA = int(A.size()) - 1;
        Int la = A.back();
        for (Int& v : A) v *= lb;
        for (int i = 0; i <= dB; ++i) A[size_t(dA - dB + i)] -= la * B[size_t(i)];
        A = ztrim(std::move(A));
    }
    return A;
}

UniPoly from_int(const ZPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (const Int& v : p) c.emplace_back(v);
    return UniPoly(std::move(c));
}

}  // namespace

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) return UniPoly();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    ZPoly A = primitive_int(f), B = primitive_int(g);
    if (int(A.size()) < int(B.size())) std::swap(A, B);
    Int gg(1), h(1);
    while (true) {
        int delta = (int(A.size()) - 1) - (int(B.size()) - 1);
        ZPoly R = prem(A, B);
        if (R.empty()) break;
        if (int(R.size()) == 1) {
            // constant gcd
            return UniPoly::constant(Rat(1));
        }
        Int divisor = gg * zpow(h, delta);
        for (Int& v : R) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
            if (r != 0) throw std::logic_error("subresultant PRS: inexact division");
            v = q;
        }
        A = std::move(B);
        B = std::move(R);
        gg = A.back();
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gg;
        } else {
            Int num = zpow(gg, delta);
            Int den = zpow(h, delta - 1);
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) throw std::logic_error("subresultant PRS: inexact h update");
            h = q;
        }
    }
    // B is (a constant multiple of) the gcd; return its primitive monic form
    Int cont(0);
    for (const Int& v : B) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    for (Int& v : B) v /= cont;
    return from_int(B).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decompose: zero input");
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() == 0) return out;
    // Yun
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly b = f.divexact(a).monic();
    UniPoly c = fp.divexact(a);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = poly_gcd(b, d);
        b = b.divexact(ai).monic();
        c = d.divexact(ai);
        d = c - b.derivative();
        if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
        ++i;
    }
    return out;
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    int m = f.degree(), n = g.degree();
    if (m == 0) return rat_pow(f.lc(), static_cast<unsigned long>(n));
    if (n == 0) return rat_pow(g.lc(), static_cast<unsigned long>(m));
    // Sylvester matrix over Q, determinant by fraction-free elimination after
    // scaling rows to integers (sizes here are tiny; O((m+n)^3) is fine).
    int N = m + n;
    std::vector<std::vector<Rat>> M(size_t(N), std::vector<Rat>(size_t(N), Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[size_t(r)][size_t(r + i)] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[size_t(n + r)][size_t(r + i)] = g.coeff(n - i);
    // Gaussian elimination over Q with exact arithmetic
    Rat det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (M[size_t(r)][size_t(col)] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(M[size_t(piv)], M[size_t(col)]);
            det = -det;
        }
        det *= M[size_t(col)][size_t(col)];
        Rat inv = Rat(1) / M[size_t(col)][size_t(col)];
        for (int r = col + 1; r < N; ++r) {
            if (M[size_t(r)][size_t(col)] == 0) continue;
            Rat fct = M[size_t(r)][size_t(col)] * inv;
            for (int cc = col; cc < N; ++cc)
                M[size_t(r)][size_t(cc)] -= fct * M[size_t(col)][size_t(cc)];
        }
    }
    return det;
}

UniPoly discriminant_wrt_y(const UniPoly& a, const UniPoly& b, const UniPoly& c,
                           const UniPoly& d) {
    if (a.is_zero()) throw std::invalid_argument("discriminant_wrt_y: not a cubic");
    UniPoly t1 = Rat(18) * a * b * c * d;
    UniPoly t2 = Rat(-4) * b * b * b * d;
    UniPoly t3 = b * b * c * c;
    UniPoly t4 = Rat(-4) * a * c * c * c;
    UniPoly t5 = Rat(-27) * a * a * d * d;
    return t1 + t2 + t3 + t4 + t5;
}

}  // namespace fanok3
