#include "qres/linalg.hpp"

#include <algorithm>

namespace qres {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<long> echelon(RatMatrix& a) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
        long piv = -1;
        for (long i = row; i < a.rows(); ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(row, piv);
        Rat inv = 1 / a(row, col);
        for (long j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (long i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (long j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

long rat_rank(const RatMatrix& m) {
    RatMatrix a = m;
    return static_cast<long>(echelon(a).size());
}

KernelRank rat_kernel_rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<long> pivots = echelon(a);
    KernelRank out;
    out.rank = static_cast<long>(pivots.size());
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (long free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a(static_cast<long>(r), free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rat>> rat_solve(const RatMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<long>(b.size()) != m.rows()) throw std::invalid_argument("rat_solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    std::vector<long> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Rat> x(static_cast<size_t>(m.cols()), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug(static_cast<long>(r), m.cols());
    return x;
}

RatMatrix rat_solve_columns(const RatMatrix& m, const RatMatrix& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("rat_solve_columns: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + b.cols());
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (long j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
    }
    std::vector<long> pivots = echelon(aug);
    RatMatrix x(m.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= m.cols())
            throw std::domain_error("rat_solve_columns: inconsistent system");
        for (long j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(static_cast<long>(r), m.cols() + j);
    }
    return x;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rat_inverse: square matrix required");
    const long n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<long> pivots = echelon(aug);
    if (static_cast<long>(pivots.size()) != n || pivots.back() != n - 1)
        throw std::domain_error("rat_inverse: singular matrix");
    RatMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RatMatrix restricted_action(const RatMatrix& m, const RatMatrix& k) {
    try {
        return rat_solve_columns(k, m * k);
    } catch (const std::domain_error&) {
        throw std::domain_error("restricted_action: subspace not invariant");
    }
}

QuotientActionResult quotient_action(const RatMatrix& m, const RatMatrix& w) {
    const long n = m.rows();
    if (m.cols() != n || w.rows() != n) throw std::invalid_argument("quotient_action: shape mismatch");
    // standard basis vectors completing colspan(w): the identity-block pivot
    // columns of one echelon pass over [w | I]
    std::vector<long> complement;
    {
        RatMatrix aug(n, w.cols() + n);
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < w.cols(); ++j) aug(i, j) = w(i, j);
            aug(i, w.cols() + i) = 1;
        }
        for (long piv : echelon(aug))
            if (piv >= w.cols()) complement.push_back(piv - w.cols());
    }
    const long q = static_cast<long>(complement.size());
    RatMatrix basis(n, w.cols() + q);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < w.cols(); ++j) basis(i, j) = w(i, j);
    for (long c = 0; c < q; ++c) basis(complement[static_cast<size_t>(c)], w.cols() + c) = 1;
    RatMatrix rhs(n, q);
    for (long c = 0; c < q; ++c)
        for (long i = 0; i < n; ++i) rhs(i, c) = m(i, complement[static_cast<size_t>(c)]);
    RatMatrix sol;
    try {
        sol = rat_solve_columns(basis, rhs);
    } catch (const std::domain_error&) {
        throw std::domain_error("quotient_action: image leaves span");
    }
    QuotientActionResult out{RatMatrix(q, q), complement};
    for (long r = 0; r < q; ++r)
        for (long c = 0; c < q; ++c) out.action(r, c) = sol(w.cols() + r, c);
    return out;
}

Poly charpoly_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly_exact: square matrix required");
    const long n = m.rows();
    if (n == 0) return Poly(Rat(1));
    RatMatrix h = m;
    // similarity reduction to upper Hessenberg form
    for (long k = 0; k + 2 < n; ++k) {
        long piv = -1;
        for (long i = k + 1; i < n; ++i)
            if (h(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            h.swap_rows(k + 1, piv);
            h.swap_cols(k + 1, piv);
        }
        for (long i = k + 2; i < n; ++i) {
            if (h(i, k) == 0) continue;
            Rat f = h(i, k) / h(k + 1, k);
            h.add_row(i, k + 1, -f);  // rows: R_i -= f R_{k+1}
            h.add_col(k + 1, i, f);   // inverse similarity on columns
        }
    }
    // characteristic polynomials of leading principal minors
    std::vector<Poly> p(static_cast<size_t>(n) + 1);
    p[0] = Poly(Rat(1));
    for (long k = 1; k <= n; ++k) {
        Poly tk = Poly::t_power(1) - Poly(h(k - 1, k - 1));
        p[static_cast<size_t>(k)] = tk * p[static_cast<size_t>(k - 1)];
        Rat prod(1);
        for (long i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (h(i - 1, k - 1) == 0 || prod == 0) {
                if (prod == 0) break;
                continue;
            }
            p[static_cast<size_t>(k)] =
                p[static_cast<size_t>(k)] - Poly(h(i - 1, k - 1) * prod) * p[static_cast<size_t>(i - 1)];
        }
    }
    return p[static_cast<size_t>(n)];
}

}  // namespace qres
