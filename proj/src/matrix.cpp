#include "kummerlog/matrix.hpp"

#include "kummerlog/error.hpp"

#include <algorithm>

namespace kummerlog {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, mpz_class const& q)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, mpz_class const& q)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) += q * m(i, src);
}

} // namespace

SmithForm smith_normal_form(IntMatrix const& a)
{
    std::size_t const rows = a.rows(), cols = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    std::size_t const k = std::min(rows, cols);

    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block goes to (t, t)
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
                        found = true;
                        pi = i;
                        pj = j;
                    }
            if (!found)
                break;
            if (pi != t) {
                d.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if (pj != t) {
                d.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                mpz_class q = d(i, t) / d(t, t);
                add_row_multiple(d, i, t, -q);
                add_row_multiple(u, i, t, -q);
                dirty = dirty || d(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                mpz_class q = d(t, j) / d(t, t);
                add_col_multiple(d, j, t, -q);
                add_col_multiple(v, j, t, -q);
                dirty = dirty || d(t, j) != 0;
            }
            if (dirty)
                continue;

            // divisibility condition on the rest of the block
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row_multiple(d, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        fixed = false;
                        break;
                    }
            if (fixed)
                break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < rows; ++j)
                u(t, j) = -u(t, j);
        }
    }

    SmithForm out;
    out.diagonal.resize(k);
    for (std::size_t t = 0; t < k; ++t)
        out.diagonal[t] = d(t, t);
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

std::vector<std::vector<mpz_class>> lattice_basis(std::vector<std::vector<mpz_class>> rows)
{
    if (rows.empty())
        return rows;
    std::size_t const n = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < n && pivot_row < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])))
                    best = r;
            if (best == rows.size())
                break;
            std::swap(rows[best], rows[pivot_row]);
            bool more = false;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0)
                    continue;
                mpz_class q = rows[r][c] / rows[pivot_row][c];
                for (std::size_t j = 0; j < n; ++j)
                    rows[r][j] -= q * rows[pivot_row][j];
                more = more || rows[r][c] != 0;
            }
            if (!more)
                break;
        }
        if (rows[pivot_row][c] == 0)
            continue;
        if (rows[pivot_row][c] < 0)
            for (auto& x : rows[pivot_row])
                x = -x;
        for (std::size_t r = 0; r < pivot_row; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
            for (std::size_t j = 0; j < n; ++j)
                rows[r][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

RatMatrix inverse(RatMatrix const& m)
{
    std::size_t const n = m.rows();
    if (m.cols() != n)
        throw invalid_input("not_square", "inverse of a non-square matrix");
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw invalid_input("singular_matrix", "matrix is singular");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        mpq_class const piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            mpq_class const f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RatMatrix to_rational(IntMatrix const& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = mpq_class(m(i, j));
    return r;
}

} // namespace kummerlog
