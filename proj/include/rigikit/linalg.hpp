#ifndef RIGIKIT_LINALG_HPP
#define RIGIKIT_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "rigikit/fields.hpp"
#include "rigikit/rng.hpp"

namespace rigikit {

// Sparse matrix over an exact field (Fp61 or Rat). Entries are kept as a
// coordinate list with no duplicates and no stored zeros; elimination happens
// on a dense copy, which is what these desk-scale matrices amount to anyway.
template <class F>
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int r, c;
        F v;
    };
    std::vector<Entry> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    void add(int r, int c, F v) {
        if (field_is_zero(v)) return;
        entries.push_back({r, c, std::move(v)});
    }

    std::vector<std::vector<F>> dense() const {
        std::vector<std::vector<F>> m(rows, std::vector<F>(cols, F()));
        for (const auto& e : entries) m[e.r][e.c] = e.v;
        return m;
    }

    SparseMatrix<F> transposed() const {
        SparseMatrix<F> t(cols, rows);
        t.entries.reserve(entries.size());
        for (const auto& e : entries) t.entries.push_back({e.c, e.r, e.v});
        return t;
    }
};

// Row-echelon elimination over any exact field; returns the rank and leaves
// the matrix in echelon form. Pivot choice: first nonzero in column order.
template <class F>
int eliminate(std::vector<std::vector<F>>& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!field_is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        F inv = field_inverse(m[rank][col]);
        for (int c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || field_is_zero(m[r][col])) continue;
            F factor = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = m[r][c] - factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

template <class F>
int dense_rank(std::vector<std::vector<F>> m) {
    return eliminate(m);
}

// Fraction-free (Bareiss) elimination over the integers: intermediate entries
// stay minors of the input, which keeps growth polynomially bounded. Used for
// rational ranks after clearing row denominators.
int bareiss_rank(std::vector<std::vector<Int>> m);

int rank(const SparseMatrix<Fp61>& m);
int rank(const SparseMatrix<Rat>& m);

template <class F>
F unit_element();
template <>
inline Fp61 unit_element<Fp61>() {
    return Fp61(1);
}
template <>
inline Rat unit_element<Rat>() {
    return Rat(1);
}

// Basis of { v : M v = 0 }, one vector per free column (Gauss-Jordan).
template <class F>
std::vector<std::vector<F>> nullspace_basis(std::vector<std::vector<F>> m,
                                            int cols) {
    int rank = m.empty() ? 0 : eliminate(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    {
        int r = 0;
        for (int c = 0; c < cols && r < rank; ++c) {
            if (!field_is_zero(m[r][c])) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                ++r;
            }
        }
    }
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F());
        v[free] = unit_element<F>();
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Random nonzero kernel vector: uniform field coefficients over a nullspace
// basis (Fp61), or coefficients from a large integer box (Rat).
std::vector<Fp61> nullspace_sample(const SparseMatrix<Fp61>& m,
                                   std::uint64_t seed);
std::vector<Rat> nullspace_sample(const SparseMatrix<Rat>& m,
                                  std::uint64_t seed);

} // namespace rigikit

#endif
