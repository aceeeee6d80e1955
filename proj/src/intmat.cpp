#include "fanok3/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanok3 {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
        }
    return p;
}

bool IntMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return Int(1);
    IntMat m = *this;
    Int sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return Int(0);
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Int num = m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c);
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss: inexact division");
                m.at(r, c) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

SmithResult smith_normal_form(const IntMat& mat) {
    int m = mat.rows(), n = mat.cols();
    SmithResult s{IntMat::identity(m), mat, IntMat::identity(n)};
    IntMat& A = s.d;
    IntMat& U = s.u;
    IntMat& V = s.v;

    auto row_swap = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < m; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < n; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto row_add = [&](int i, int j, const Int& c) {  // row i += c * row j
        for (int k = 0; k < n; ++k) A.at(i, k) += c * A.at(j, k);
        for (int k = 0; k < m; ++k) U.at(i, k) += c * U.at(j, k);
    };
    auto col_add = [&](int i, int j, const Int& c) {  // col i += c * col j
        for (int k = 0; k < m; ++k) A.at(k, i) += c * A.at(k, j);
        for (int k = 0; k < n; ++k) V.at(k, i) += c * V.at(k, j);
    };
    auto fdiv = [](const Int& a, const Int& b) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    };

    int t = 0;
    while (t < std::min(m, n)) {
        // pivot: nonzero entry of least absolute value in the trailing block
        int pr = -1, pc = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (A.at(i, j) == 0) continue;
                Int v = abs(A.at(i, j));
                if (pr < 0 || v < best) { best = v; pr = i; pc = j; }
            }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool done = false;
        while (!done) {
            done = true;
            for (int i = t + 1; i < m; ++i) {
                if (A.at(i, t) == 0) continue;
                Int q = fdiv(A.at(i, t), A.at(t, t));
                row_add(i, t, -q);
                if (A.at(i, t) != 0) { row_swap(i, t); done = false; }
            }
            for (int j = t + 1; j < n; ++j) {
                if (A.at(t, j) == 0) continue;
                Int q = fdiv(A.at(t, j), A.at(t, t));
                col_add(j, t, -q);
                if (A.at(t, j) != 0) { col_swap(j, t); done = false; }
            }
            if (!done) continue;
            // enforce divisibility of the trailing block by the pivot
            for (int i = t + 1; i < m && done; ++i)
                for (int j = t + 1; j < n && done; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        row_add(t, i, Int(1));
                        done = false;
                    }
        }
        ++t;
    }
    for (int i = 0; i < std::min(m, n); ++i)
        if (A.at(i, i) < 0) {
            for (int c = 0; c < n; ++c) A.at(i, c) = -A.at(i, c);
            for (int c = 0; c < m; ++c) U.at(i, c) = -U.at(i, c);
        }
    return s;
}

IntMat integer_kernel(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    int n = m.cols();
    int r = 0;
    for (int i = 0; i < std::min(m.rows(), n); ++i)
        if (s.d.at(i, i) != 0) ++r;
    IntMat ker(n, n - r);
    for (int j = r; j < n; ++j)
        for (int i = 0; i < n; ++i) ker.at(i, j - r) = s.v.at(i, j);
    return ker;
}

std::pair<int, int> symmetric_signature(const IntMat& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("signature of non-symmetric matrix");
    const size_t n = size_t(g.rows());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) a[r][c] = Rat(g.at(int(r), int(c)));
    int pos = 0, neg = 0;
    std::vector<int> live(n);
    for (size_t i = 0; i < n; ++i) live[i] = int(i);

    while (!live.empty()) {
        int m = int(live.size());
        int piv = -1;
        for (int i = 0; i < m; ++i)
            if (a[size_t(live[size_t(i)])][size_t(live[size_t(i)])] != 0) { piv = i; break; }
        if (piv >= 0) {
            int p = live[size_t(piv)];
            Rat d = a[size_t(p)][size_t(p)];
            (d > 0 ? pos : neg) += 1;
            live.erase(live.begin() + piv);
            for (int i : live)
                for (int j : live)
                    a[size_t(i)][size_t(j)] -= a[size_t(i)][size_t(p)] * a[size_t(p)][size_t(j)] / d;
            continue;
        }
        // all diagonal zero: hyperbolic split on any nonzero off-diagonal pair
        int bi = -1, bj = -1;
        for (int i = 0; i < m && bi < 0; ++i)
            for (int j = i + 1; j < m; ++j)
                if (a[size_t(live[size_t(i)])][size_t(live[size_t(j)])] != 0) {
                    bi = i; bj = j;
                    break;
                }
        if (bi < 0) break;  // zero block: degenerate remainder contributes nothing
        int p = live[size_t(bi)], q = live[size_t(bj)];
        Rat c = a[size_t(p)][size_t(q)];
        pos += 1;
        neg += 1;
        live.erase(live.begin() + bj);
        live.erase(live.begin() + bi);
        for (int i : live)
            for (int j : live)
                a[size_t(i)][size_t(j)] -=
                    (a[size_t(i)][size_t(p)] * a[size_t(q)][size_t(j)] +
                     a[size_t(i)][size_t(q)] * a[size_t(p)][size_t(j)]) / c;
    }
    return {pos, neg};
}

std::vector<std::vector<Rat>> rational_inverse(const IntMat& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = g.rows();
    std::vector<std::vector<Rat>> a(size_t(n), std::vector<Rat>(size_t(2 * n), Rat(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[size_t(r)][size_t(c)] = Rat(g.at(r, c));
        a[size_t(r)][size_t(n + r)] = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[size_t(r)][size_t(col)] != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("rational_inverse: singular matrix");
        std::swap(a[size_t(piv)], a[size_t(col)]);
        Rat inv = Rat(1) / a[size_t(col)][size_t(col)];
        for (int c = 0; c < 2 * n; ++c) a[size_t(col)][size_t(c)] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[size_t(r)][size_t(col)] == 0) continue;
            Rat f = a[size_t(r)][size_t(col)];
            for (int c = 0; c < 2 * n; ++c)
                a[size_t(r)][size_t(c)] -= f * a[size_t(col)][size_t(c)];
        }
    }
    std::vector<std::vector<Rat>> inv(size_t(n), std::vector<Rat>(size_t(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[size_t(r)][size_t(c)] = a[size_t(r)][size_t(n + c)];
    return inv;
}

}  // namespace fanok3
