#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isobaric/operators.hpp"
#include "isobaric/weights.hpp"

namespace isobaric {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> reduced_row_echelon(Matrix& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] *= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Matrix m, int cols) {
    return static_cast<int>(reduced_row_echelon(m, cols).size());
}

/// Basis of the exact nullspace of an m x cols rational matrix, one vector per
/// free column, each normalized so its first nonzero entry is 1. The zero
/// matrix yields the full standard basis; a full-column-rank matrix yields an
/// empty list.
inline std::vector<std::vector<Rational>> nullspace(Matrix m, int cols) {
    std::vector<int> pivots = reduced_row_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
        for (int c = 0; c < cols; ++c)
            if (!v[c].is_zero()) {
                Rational inv = Rational(1) / v[c];
                for (int d = c; d < cols; ++d) v[d] *= inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Linear system whose unknowns are the weights omega_1..omega_N and whose
/// rows state "the coefficient of each output monomial of
/// apply_operator(spec, wip(n, k, omega)) vanishes", for every degree
/// n = 2..N. Well-defined because wip is linear in omega; the matrix is
/// assembled by evaluating at the basis weight vectors. Weights omega_j with
/// j > k multiply no monomial of any degree, so those columns are
/// structurally zero and reported as unconstrained rather than as nullspace
/// directions.
struct KernelSystem {
    struct RowMeta {
        int n;
        ExponentVector out;
    };

    OperatorSpec spec;
    int k = 0;
    int N = 0;
    std::vector<RowMeta> row_meta;
    Matrix matrix;

    int active_columns() const noexcept { return std::min(k, N); }
    std::vector<int> unconstrained_columns() const {
        std::vector<int> u;
        for (int j = active_columns() + 1; j <= N; ++j) u.push_back(j);
        return u;
    }
};

/// Spec-independent pieces of the kernel system for one (k, N): the images of
/// the basis polynomials wip(n, k, e_j) under D_11, each t_l D_2l, and D_2.
/// Any operator's system is a linear assembly of these, which lets a grid
/// scan share the expensive part.
class KernelSystemTemplate {
public:
    KernelSystemTemplate(int k, int N) : k_(k), N_(N) {
        if (N < 3) throw std::invalid_argument("kernel system: N must be >= 3");
        if (k < 2) throw std::invalid_argument("kernel system: k must be >= 2");
        for (int n = 2; n <= N; ++n) {
            Block b;
            b.n = n;
            b.outs = enumerate_partitions(n - 2, k);
            for (int i = 0; i < static_cast<int>(b.outs.size()); ++i)
                b.out_index.emplace(b.outs[i], i);
            int cols = std::min(k, N);
            for (int j = 1; j <= cols; ++j) {
                Polynomial p = wip(n, k, WeightVector::basis(j, std::max(j, std::min(n, k))));
                b.d11.push_back(second_partial(p, 1, 1));
                std::vector<Polynomial> tds;
                for (int l = 1; l <= k; ++l)
                    tds.push_back(multiply_by_variable(second_partial(p, 2, l), l));
                b.t_d2.push_back(std::move(tds));
                b.d2.push_back(partial_derivative(p, 2));
            }
            blocks_.push_back(std::move(b));
        }
    }

    int k() const noexcept { return k_; }
    int N() const noexcept { return N_; }

    KernelSystem assemble(const OperatorSpec& spec) const {
        if (spec.var_count() != k_)
            throw std::invalid_argument("kernel system: operator variable count differs from k");
        KernelSystem sys{spec, k_, N_, {}, {}};
        int cols = std::min(k_, N_);
        for (const auto& b : blocks_) {
            std::size_t base = sys.matrix.size();
            for (const auto& out : b.outs) {
                sys.row_meta.push_back({b.n, out});
                sys.matrix.emplace_back(N_, Rational(0));
            }
            for (int j = 1; j <= cols; ++j) {
                Polynomial q = b.d11[j - 1];
                for (int l = 1; l <= k_; ++l) {
                    if (spec.a[l - 1].is_zero()) continue;
                    q = q - spec.a[l - 1] * b.t_d2[j - 1][l - 1];
                }
                if (!spec.m.is_zero()) q = q - spec.m * b.d2[j - 1];
                for (const auto& [alpha, c] : q.terms())
                    sys.matrix[base + b.out_index.at(alpha)][j - 1] = c;
            }
        }
        return sys;
    }

private:
    struct Block {
        int n;
        std::vector<ExponentVector> outs;
        std::map<ExponentVector, int, TermOrder> out_index;
        std::vector<Polynomial> d11;                 // per column j
        std::vector<std::vector<Polynomial>> t_d2;   // per column j, per l
        std::vector<Polynomial> d2;                  // per column j
    };

    int k_;
    int N_;
    std::vector<Block> blocks_;
};

inline KernelSystem build_kernel_system(const OperatorSpec& spec, int k, int N) {
    return KernelSystemTemplate(k, N).assemble(spec);
}

/// Basis of the weight vectors annihilated at every degree 2..N, as
/// length-N vectors. Computed on the active columns omega_1..omega_min(k,N)
/// and padded with zeros on the unconstrained columns.
inline std::vector<WeightVector> rational_nullspace(const KernelSystem& sys) {
    int active = sys.active_columns();
    Matrix m;
    m.reserve(sys.matrix.size());
    for (const auto& row : sys.matrix) m.emplace_back(row.begin(), row.begin() + active);
    std::vector<WeightVector> out;
    for (auto& v : nullspace(std::move(m), active)) {
        v.resize(sys.N, Rational(0));
        out.push_back(WeightVector(std::move(v)));
    }
    return out;
}

enum class KernelClass { trivial, line, codim1, other };

inline std::string to_string(KernelClass c) {
    switch (c) {
        case KernelClass::trivial: return "trivial";
        case KernelClass::line: return "line";
        case KernelClass::codim1: return "codim1";
        case KernelClass::other: return "other";
    }
    return "other";
}

struct KernelReport {
    OperatorSpec spec;
    int k = 0;
    int N = 0;
    std::vector<WeightVector> basis;
    KernelClass cls = KernelClass::trivial;
    std::vector<int> unconstrained;

    bool nontrivial() const noexcept { return !basis.empty(); }
};

/// Solves the kernel system and classifies the solution family over the
/// active weights. Every basis vector is re-verified by feeding it back
/// through wip and apply_operator at every degree up to N.
inline KernelReport classify(const OperatorSpec& spec, int k, int N,
                             const KernelSystemTemplate* shared = nullptr) {
    KernelSystem sys = shared ? shared->assemble(spec) : build_kernel_system(spec, k, N);
    KernelReport rep{spec, k, N, rational_nullspace(sys), KernelClass::trivial,
                     sys.unconstrained_columns()};
    int dim = static_cast<int>(rep.basis.size());
    int active = sys.active_columns();
    if (dim == 0)
        rep.cls = KernelClass::trivial;
    else if (dim == 1)
        rep.cls = KernelClass::line;
    else if (dim == active - 1)
        rep.cls = KernelClass::codim1;
    else
        rep.cls = KernelClass::other;
    for (const auto& w : rep.basis)
        for (int n = 2; n <= N; ++n)
            if (!is_in_kernel(spec, wip(n, k, w)))
                throw std::logic_error("classify: nullspace vector failed re-verification");
    return rep;
}

/// Classifies every operator on the Cartesian grid (one coefficient list per
/// coordinate of a, times the m grid, first coordinate slowest, m innermost)
/// and returns the reports with a nontrivial solution family, in grid order.
inline std::vector<KernelReport> scan(const std::vector<std::vector<Rational>>& a_grids,
                                      const std::vector<Rational>& m_grid, int k, int N) {
    if (static_cast<int>(a_grids.size()) != k)
        throw std::invalid_argument("scan: need one coefficient grid per variable");
    for (const auto& g : a_grids)
        if (g.empty()) throw std::invalid_argument("scan: empty coefficient grid");
    if (m_grid.empty()) throw std::invalid_argument("scan: empty m grid");
    KernelSystemTemplate tmpl(k, N);
    std::vector<KernelReport> hits;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        OperatorSpec spec;
        spec.a.reserve(k);
        for (int j = 0; j < k; ++j) spec.a.push_back(a_grids[j][idx[j]]);
        for (const auto& m : m_grid) {
            spec.m = m;
            KernelReport rep = classify(spec, k, N, &tmpl);
            if (rep.nontrivial()) hits.push_back(std::move(rep));
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == a_grids[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return hits;
}

}  // namespace isobaric
