#pragma once
// Dense exact linear algebra over F2, bit-packed 64 per word.
// Everything downstream (resolutions, cup products, cobar complexes) reduces
// to the echelon forms computed here, so this file owns the only hot loops
// in the project. Row convention: vectors are rows, maps act on the right
// (x -> x*A); the column-convention helpers wrap the same kernel.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace coh2 {

using word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Bit vector of fixed length n. Unused high bits of the top word stay zero.
struct F2Vec {
    std::size_t n = 0;
    std::vector<word> w;

    F2Vec() = default;
    explicit F2Vec(std::size_t n_) : n(n_), w(words_for(n_), 0) {}

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        word m = word(1) << (i & 63);
        if (b) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w[i >> 6] ^= word(1) << (i & 63); }
    bool is_zero() const {
        for (word x : w) if (x) return false;
        return true;
    }
    void xor_in(const F2Vec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    std::size_t popcount() const;
    bool operator==(const F2Vec&) const = default;
};

struct F2Matrix {
    std::size_t rows = 0, cols = 0, wpr = 0; // wpr: words per row
    std::vector<word> a;

    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), wpr(words_for(c)), a(r * words_for(c), 0) {}

    word* row(std::size_t r) { return a.data() + r * wpr; }
    const word* row(std::size_t r) const { return a.data() + r * wpr; }

    bool get(std::size_t r, std::size_t c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool b) {
        word m = word(1) << (c & 63);
        if (b) row(r)[c >> 6] |= m; else row(r)[c >> 6] &= ~m;
    }
    void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= word(1) << (c & 63); }

    void xor_row(std::size_t dst, std::size_t src) {
        word* d = row(dst); const word* s = row(src);
        for (std::size_t k = 0; k < wpr; ++k) d[k] ^= s[k];
    }
    bool row_is_zero(std::size_t r) const {
        const word* p = row(r);
        for (std::size_t k = 0; k < wpr; ++k) if (p[k]) return false;
        return true;
    }
    F2Vec get_row(std::size_t r) const {
        F2Vec v(cols);
        const word* p = row(r);
        for (std::size_t k = 0; k < wpr; ++k) v.w[k] = p[k];
        return v;
    }
    void set_row(std::size_t r, const F2Vec& v) {
        word* p = row(r);
        for (std::size_t k = 0; k < wpr; ++k) p[k] = v.w[k];
    }

    static F2Matrix identity(std::size_t n);
    F2Matrix transposed() const;
    bool operator==(const F2Matrix&) const = default;
};

// C += A*B. A is n x k, B is k x m. Four-Russians over 8-row blocks of B;
// small batches fall back to the plain XOR loop (table build would dominate).
void addmul(F2Matrix& C, const F2Matrix& A, const F2Matrix& B);
F2Matrix mul(const F2Matrix& A, const F2Matrix& B);

// y*B for a single row vector y (length B.rows).
F2Vec mul_vec(const F2Vec& y, const F2Matrix& B);
// A*x for a column vector x (length A.cols); returns length A.rows.
F2Vec mul_mat_vec(const F2Matrix& A, const F2Vec& x);

// Reduced row echelon form of A with optional left transform.
//   R: rank rows, RREF, pivot columns strictly increasing, R[i][pivots[j]] = (i==j).
//   T: rank x A.rows with T*A = R (only when built with transform).
//   K: canonical basis (RREF rows) of the left null space {x : x*A = 0}.
struct EchelonForm {
    std::size_t src_rows = 0, src_cols = 0;
    F2Matrix R, T, K;
    std::vector<std::uint32_t> pivots;
    bool has_transform = false;

    std::size_t rank() const { return R.rows; }

    // Membership of y (length src_cols) in the row space.
    bool in_row_space(const F2Vec& y) const;

    // One solution of x*A = y with x = c*T, c the RREF reduction coefficients
    // (the canonical solution: coefficients are forced, T is fixed).
    std::optional<F2Vec> solve_row(const F2Vec& y) const;

    // Batched: solve x_i*A = y_i for every row of Y. Returns the X matrix, or
    // nullopt if any right-hand side is outside the row space (all-or-nothing;
    // use solvable() for per-row tests).
    std::optional<F2Matrix> solve_rows(const F2Matrix& Y) const;

    // coeffs such that Y = coeffs*R + residual; residual returned in place of Y.
    // Since R is reduced, the coefficients are just Y's bits at the pivot columns.
    F2Matrix reduce_rows(F2Matrix& Y) const;
};

EchelonForm echelonize(const F2Matrix& A, bool want_transform);

std::size_t rank(const F2Matrix& m);

// Canonical basis of a subspace of F2^ambient: RREF rows, unique per subspace.
struct SubspaceBasis {
    std::size_t ambient = 0;
    F2Matrix basis; // dim() rows in RREF
    std::vector<std::uint32_t> pivots;

    std::size_t dim() const { return basis.rows; }
    bool contains(const F2Vec& v) const;
    // Coordinates of v in the basis rows (= v's bits at the pivot columns),
    // or nullopt if v is outside the subspace.
    std::optional<F2Vec> coords_of(const F2Vec& v) const;
    bool operator==(const SubspaceBasis&) const = default;
};

SubspaceBasis row_space(const F2Matrix& gens);
SubspaceBasis full_space(std::size_t n);
SubspaceBasis zero_space(std::size_t n);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// Column-convention operations (the public face used by reports and tests).
// kernel_basis(m): canonical basis of {v : m*v = 0}, dim = cols - rank.
SubspaceBasis kernel_basis(const F2Matrix& m);
// image_basis(m): canonical basis of {m*v}, the column space.
SubspaceBasis image_basis(const F2Matrix& m);
// solve(m, b): some x with m*x = b, free variables forced to zero.
std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b);

} // namespace coh2
