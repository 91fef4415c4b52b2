#include "qres/snf.hpp"

#include <algorithm>

namespace qres {

namespace {

bool is_lone(const IntMatrix& d, long s) {
    for (long i = s + 1; i < d.rows(); ++i)
        if (d(i, s) != 0) return false;
    for (long j = s + 1; j < d.cols(); ++j)
        if (d(s, j) != 0) return false;
    return true;
}

// location of the smallest nonzero |entry| in the lower-right block, scan order fixed
bool locate_min(const IntMatrix& d, long s, long& irow, long& icol) {
    bool found = false;
    Int best;
    for (long i = s; i < d.rows(); ++i)
        for (long j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                irow = i;
                icol = j;
            }
        }
    return found;
}

bool find_nondivisible(const IntMatrix& d, long s, long& irow, long& icol) {
    for (long i = s + 1; i < d.rows(); ++i)
        for (long j = s + 1; j < d.cols(); ++j)
            if (!divides(d(s, s), d(i, j))) {
                irow = i;
                icol = j;
                return true;
            }
    return false;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const long nr = m.rows(), nc = m.cols();
    const long nmin = std::min(nr, nc);
    SmithResult r{m, IntMatrix::identity(nr), IntMatrix::identity(nc)};
    IntMatrix& d = r.d;

    for (long s = 0; s < nmin; ++s) {
        long irow = s, icol = s;
        while (true) {
            if (!locate_min(d, s, irow, icol)) break;  // block is zero
            d.swap_rows(s, irow);
            r.u.swap_rows(s, irow);
            d.swap_cols(s, icol);
            r.v.swap_cols(s, icol);

            for (long i = s + 1; i < nr; ++i) {
                if (d(i, s) == 0) continue;
                Int q = d(i, s) / d(s, s);
                d.add_row(i, s, -q);
                r.u.add_row(i, s, -q);
            }
            for (long j = s + 1; j < nc; ++j) {
                if (d(s, j) == 0) continue;
                Int q = d(s, j) / d(s, s);
                d.add_col(j, s, -q);
                r.v.add_col(j, s, -q);
            }
            if (!is_lone(d, s)) continue;

            long jr, jc;
            if (find_nondivisible(d, s, jr, jc)) {
                d.add_row(s, jr, 1);
                r.u.add_row(s, jr, 1);
                continue;
            }
            break;
        }
        if (d(s, s) < 0) {
            d.scale_row(s, -1);
            r.u.scale_row(s, -1);
        }
    }
    return r;
}

IntMatrix hermite_basis(const IntMatrix& rows) {
    const long n = rows.cols();
    IntMatrix w = rows;
    long row = 0;
    for (long col = 0; col < n; ++col) {
        // Euclidean reduction of column col below position row
        while (true) {
            long piv = -1;
            Int best;
            for (long i = row; i < w.rows(); ++i) {
                if (w(i, col) == 0) continue;
                Int v = abs(w(i, col));
                if (piv < 0 || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) throw std::domain_error("hermite_basis: rank-deficient input");
            w.swap_rows(row, piv);
            bool clean = true;
            for (long i = row + 1; i < w.rows(); ++i) {
                if (w(i, col) == 0) continue;
                Int q = w(i, col) / w(row, col);
                w.add_row(i, row, -q);
                if (w(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w(row, col) < 0) w.scale_row(row, -1);
        ++row;
    }
    IntMatrix h(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) h(i, j) = w(i, j);
    // reduce entries above each pivot into [0, pivot); ascending order keeps
    // already-reduced columns clean since row j vanishes left of column j
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            Int q = h(i, j) - pos_mod(h(i, j), h(j, j));
            if (q != 0) h.add_row(i, j, -divexact(q, h(j, j)));
        }
    return h;
}

Int bareiss_det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: square matrix required");
    const long n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: square matrix required");
    const long n = m.rows();
    Int det = bareiss_det(m);
    if (det != 1 && det != -1) throw std::domain_error("unimodular_inverse: determinant is not a unit");
    // adjugate via (n-1)x(n-1) determinants; n stays small in practice
    IntMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (long r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (long c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Int cof = bareiss_det(minor);
            if ((i + j) % 2) cof = -cof;
            inv(i, j) = det * cof;  // det is +-1
        }
    return inv;
}

}  // namespace qres
