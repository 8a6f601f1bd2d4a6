#include "rigikit/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rigikit {

int bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Int num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                m[r][c] = num / prev; // exact division (Bareiss identity)
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

int rank(const SparseMatrix<Fp61>& m) { return dense_rank(m.dense()); }

int rank(const SparseMatrix<Rat>& m) {
    // Clear denominators row by row (rank-invariant scaling), then run
    // fraction-free elimination on the integer matrix.
    std::vector<std::vector<Int>> im(m.rows, std::vector<Int>(m.cols, 0));
    std::vector<Int> scale(m.rows, 1);
    for (const auto& e : m.entries) {
        Int d = boost::multiprecision::denominator(e.v);
        scale[e.r] = boost::multiprecision::lcm(scale[e.r], d);
    }
    for (const auto& e : m.entries) {
        Rat scaled = e.v * Rat(scale[e.r]);
        im[e.r][e.c] = boost::multiprecision::numerator(scaled);
    }
    return bareiss_rank(std::move(im));
}

std::vector<Fp61> nullspace_sample(const SparseMatrix<Fp61>& m,
                                   std::uint64_t seed) {
    auto basis = nullspace_basis(m.dense(), m.cols);
    if (basis.empty())
        throw std::domain_error("nullspace_sample: trivial nullspace");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Fp61> v(m.cols, Fp61());
        for (const auto& b : basis) {
            Fp61 coeff = Fp61::random(rng);
            for (int c = 0; c < m.cols; ++c) v[c] += coeff * b[c];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return v;
    }
    // 64 uniform draws over a 2^61 field all hitting zero: unreachable.
    throw std::logic_error("nullspace_sample: could not draw nonzero vector");
}

std::vector<Rat> nullspace_sample(const SparseMatrix<Rat>& m,
                                  std::uint64_t seed) {
    auto basis = nullspace_basis(m.dense(), m.cols);
    if (basis.empty())
        throw std::domain_error("nullspace_sample: trivial nullspace");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rat> v(m.cols, Rat(0));
        for (const auto& b : basis) {
            // Coefficients from a large integer box.
            long long coeff =
                static_cast<long long>(rng.below(2000000001ull)) - 1000000000;
            for (int c = 0; c < m.cols; ++c) v[c] += Rat(coeff) * b[c];
        }
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || x != 0;
        if (nonzero) return v;
    }
    throw std::logic_error("nullspace_sample: could not draw nonzero vector");
}

} // namespace rigikit
