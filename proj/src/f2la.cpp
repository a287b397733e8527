#include "coh2/f2la.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace coh2 {

std::size_t F2Vec::popcount() const {
    std::size_t c = 0;
    for (word x : w) c += std::popcount(x);
    return c;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const word* p = row(r);
        for (std::size_t k = 0; k < wpr; ++k) {
            word x = p[k];
            while (x) {
                int b = std::countr_zero(x);
                x &= x - 1;
                t.set(k * 64 + b, r, true);
            }
        }
    }
    return t;
}

namespace {

inline void xor_words(word* d, const word* s, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) d[k] ^= s[k];
}

// Byte at 8-aligned bit offset 8*b of a packed row. Blocks never straddle a
// word boundary since 8 divides 64.
inline unsigned byte_at(const word* p, std::size_t b) {
    return unsigned(p[b >> 3] >> ((b & 7) * 8)) & 0xffu;
}

// Gray-code subset table for 8 rows of width wn: table[s] = xor of rows in s.
// 256*wn words; built into `tab`, which the caller owns and reuses.
void build_table(std::vector<word>& tab, const word* const rows8[8], std::size_t wn) {
    tab.assign(256 * wn, 0);
    for (unsigned s = 1; s < 256; ++s) {
        unsigned prev = s & (s - 1);
        int bit = std::countr_zero(s);
        word* dst = tab.data() + s * wn;
        const word* a = tab.data() + prev * wn;
        const word* b = rows8[bit];
        for (std::size_t k = 0; k < wn; ++k) dst[k] = a[k] ^ b[k];
    }
}

} // namespace

void addmul(F2Matrix& C, const F2Matrix& A, const F2Matrix& B) {
    assert(A.cols == B.rows && C.rows == A.rows && C.cols == B.cols);
    std::size_t n = A.rows, k = A.cols, wn = B.wpr;
    if (n == 0 || k == 0 || B.cols == 0) return;
    if (n < 16) {
        // Table build would cost more than it saves.
        for (std::size_t i = 0; i < n; ++i) {
            const word* ar = A.row(i);
            word* cr = C.row(i);
            for (std::size_t j = 0; j < A.wpr; ++j) {
                word x = ar[j];
                while (x) {
                    int b = std::countr_zero(x);
                    x &= x - 1;
                    xor_words(cr, B.row(j * 64 + b), wn);
                }
            }
        }
        return;
    }
    std::vector<word> tab;
    std::size_t nblocks = (k + 7) / 8;
    std::vector<word> zero(wn, 0);
    for (std::size_t b = 0; b < nblocks; ++b) {
        const word* rows8[8];
        for (int j = 0; j < 8; ++j) {
            std::size_t r = b * 8 + j;
            rows8[j] = r < k ? B.row(r) : zero.data();
        }
        build_table(tab, rows8, wn);
        for (std::size_t i = 0; i < n; ++i) {
            unsigned idx = byte_at(A.row(i), b);
            if (idx) xor_words(C.row(i), tab.data() + idx * wn, wn);
        }
    }
}

F2Matrix mul(const F2Matrix& A, const F2Matrix& B) {
    F2Matrix C(A.rows, B.cols);
    addmul(C, A, B);
    return C;
}

F2Vec mul_vec(const F2Vec& y, const F2Matrix& B) {
    assert(y.n == B.rows);
    F2Vec r(B.cols);
    for (std::size_t k = 0; k < y.w.size(); ++k) {
        word x = y.w[k];
        while (x) {
            int b = std::countr_zero(x);
            x &= x - 1;
            xor_words(r.w.data(), B.row(k * 64 + b), B.wpr);
        }
    }
    return r;
}

F2Vec mul_mat_vec(const F2Matrix& A, const F2Vec& x) {
    assert(x.n == A.cols);
    F2Vec r(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        const word* p = A.row(i);
        word acc = 0;
        for (std::size_t k = 0; k < A.wpr; ++k) acc ^= p[k] & x.w[k];
        if (std::popcount(acc) & 1) r.set(i, true);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Echelonization. Working rows are stored augmented, [row bits | transform
// bits], so every elimination step updates both halves at once. Input rows
// are consumed in chunks; completed pivot blocks (8 rows with identity
// structure on their own lead columns) get a fresh subset table per chunk,
// which amortizes the table build over the chunk without keeping
// rank/8 tables alive at once.
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kChunk = 1024;

struct Elim {
    std::size_t wr;            // words of the row part
    std::size_t wt;            // words of the transform part (0 if none)
    std::size_t W;             // wr + wt
    std::vector<word> piv;     // pivot rows, creation order, stride W
    std::vector<std::uint32_t> leads;
    std::vector<word> nulls;   // transform parts of rows that reduced to zero

    word* prow(std::size_t i) { return piv.data() + i * W; }
    const word* prow(std::size_t i) const { return piv.data() + i * W; }

    bool bit(const word* r, std::size_t c) const { return (r[c >> 6] >> (c & 63)) & 1u; }

    // Identity structure on the 8 lead columns of a completed block.
    void delta_reduce_block(std::size_t base) {
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i)
                if (i != j && bit(prow(base + i), leads[base + j]))
                    xor_words(prow(base + i), prow(base + j), W);
    }

    int lead_of(const word* r) const {
        for (std::size_t k = 0; k < wr; ++k)
            if (r[k]) return int(k * 64 + std::countr_zero(r[k]));
        return -1;
    }
};

} // namespace

EchelonForm echelonize(const F2Matrix& A, bool want_transform) {
    Elim e;
    e.wr = A.wpr;
    e.wt = want_transform ? words_for(A.rows) : 0;
    e.W = e.wr + e.wt;

    std::vector<word> buf; // chunk rows, stride W
    std::vector<word> tab;
    std::vector<word> work(e.W);

    for (std::size_t start = 0; start < A.rows; start += kChunk) {
        std::size_t cnt = std::min(kChunk, A.rows - start);
        buf.assign(cnt * e.W, 0);
        for (std::size_t i = 0; i < cnt; ++i) {
            word* r = buf.data() + i * e.W;
            for (std::size_t k = 0; k < e.wr; ++k) r[k] = A.row(start + i)[k];
            if (e.wt) {
                std::size_t g = start + i;
                r[e.wr + (g >> 6)] |= word(1) << (g & 63);
            }
        }
        // Table pass over blocks completed before this chunk.
        std::size_t nblk = e.leads.size() / 8;
        for (std::size_t b = 0; b < nblk; ++b) {
            const word* rows8[8];
            for (int j = 0; j < 8; ++j) rows8[j] = e.prow(b * 8 + j);
            build_table(tab, rows8, e.W);
            for (std::size_t i = 0; i < cnt; ++i) {
                word* r = buf.data() + i * e.W;
                unsigned idx = 0;
                for (int j = 0; j < 8; ++j)
                    idx |= unsigned(e.bit(r, e.leads[b * 8 + j])) << j;
                if (idx) xor_words(r, tab.data() + idx * e.W, e.W);
            }
        }
        // Individual pass: tail pivots plus pivots created inside this chunk.
        for (std::size_t i = 0; i < cnt; ++i) {
            word* r = buf.data() + i * e.W;
            for (std::size_t p = nblk * 8; p < e.leads.size(); ++p)
                if (e.bit(r, e.leads[p])) xor_words(r, e.prow(p), e.W);
            int lc = e.lead_of(r);
            if (lc < 0) {
                if (e.wt) e.nulls.insert(e.nulls.end(), r + e.wr, r + e.W);
                continue;
            }
            e.piv.insert(e.piv.end(), r, r + e.W);
            e.leads.push_back(std::uint32_t(lc));
            if (e.leads.size() % 8 == 0) e.delta_reduce_block(e.leads.size() - 8);
        }
    }

    // Back-clean to full RREF: process pivots by descending lead column; a row
    // only needs its bits at strictly larger lead columns cleared (everything
    // below its own lead is already zero).
    std::size_t rk = e.leads.size();
    std::vector<std::uint32_t> order(rk);
    for (std::size_t i = 0; i < rk; ++i) order[i] = std::uint32_t(i);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return e.leads[a] > e.leads[b]; });

    std::vector<word> fin;               // finalized rows, stride W, desc lead order
    std::vector<std::uint32_t> finlead;
    fin.reserve(rk * e.W);
    for (std::size_t start = 0; start < rk; start += kChunk) {
        std::size_t cnt = std::min(kChunk, rk - start);
        // One table pass per completed finalized block over the whole chunk.
        std::size_t nblk = finlead.size() / 8;
        for (std::size_t b = 0; b < nblk; ++b) {
            const word* rows8[8];
            for (int j = 0; j < 8; ++j) rows8[j] = fin.data() + (b * 8 + j) * e.W;
            build_table(tab, rows8, e.W);
            for (std::size_t i = 0; i < cnt; ++i) {
                word* r = e.prow(order[start + i]);
                unsigned idx = 0;
                for (int j = 0; j < 8; ++j)
                    idx |= unsigned(e.bit(r, finlead[b * 8 + j])) << j;
                if (idx) xor_words(r, tab.data() + idx * e.W, e.W);
            }
        }
        for (std::size_t i = 0; i < cnt; ++i) {
            word* r = e.prow(order[start + i]);
            for (std::size_t p = nblk * 8; p < finlead.size(); ++p)
                if (e.bit(r, finlead[p])) xor_words(r, fin.data() + p * e.W, e.W);
            fin.insert(fin.end(), r, r + e.W);
            finlead.push_back(e.leads[order[start + i]]);
        }
    }

    EchelonForm out;
    out.src_rows = A.rows;
    out.src_cols = A.cols;
    out.has_transform = want_transform;
    out.R = F2Matrix(rk, A.cols);
    if (want_transform) out.T = F2Matrix(rk, A.rows);
    out.pivots.resize(rk);
    // fin holds rows in descending lead order; emit ascending.
    for (std::size_t i = 0; i < rk; ++i) {
        const word* r = fin.data() + (rk - 1 - i) * e.W;
        out.pivots[i] = finlead[rk - 1 - i];
        for (std::size_t k = 0; k < e.wr; ++k) out.R.row(i)[k] = r[k];
        if (want_transform)
            for (std::size_t k = 0; k < e.wt; ++k) out.T.row(i)[k] = r[e.wr + k];
    }
    if (want_transform) {
        std::size_t nn = e.nulls.size() / (e.wt ? e.wt : 1);
        F2Matrix nm(nn, A.rows);
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t k = 0; k < e.wt; ++k)
                nm.row(i)[k] = e.nulls[i * e.wt + k];
        out.K = echelonize(nm, false).R;
    }
    return out;
}

std::size_t rank(const F2Matrix& m) { return echelonize(m, false).rank(); }

namespace {

// Y's bits at the pivot columns, one row of C per row of Y. With R reduced,
// these are exactly the reduction coefficients: no pivot column of Y changes
// while other pivot rows are subtracted.
F2Matrix gather_pivot_bits(const F2Matrix& Y, const std::vector<std::uint32_t>& pivots) {
    F2Matrix C(Y.rows, pivots.size());
    for (std::size_t i = 0; i < Y.rows; ++i) {
        const word* y = Y.row(i);
        word* c = C.row(i);
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            std::uint32_t p = pivots[j];
            c[j >> 6] |= ((y[p >> 6] >> (p & 63)) & 1u) << (j & 63);
        }
    }
    return C;
}

} // namespace

F2Matrix EchelonForm::reduce_rows(F2Matrix& Y) const {
    assert(Y.cols == src_cols);
    F2Matrix C = gather_pivot_bits(Y, pivots);
    addmul(Y, C, R);
    return C;
}

bool EchelonForm::in_row_space(const F2Vec& y) const {
    F2Matrix Y(1, src_cols);
    Y.set_row(0, y);
    reduce_rows(Y);
    return Y.row_is_zero(0);
}

std::optional<F2Vec> EchelonForm::solve_row(const F2Vec& y) const {
    assert(has_transform);
    F2Matrix Y(1, src_cols);
    Y.set_row(0, y);
    F2Matrix C = reduce_rows(Y);
    if (!Y.row_is_zero(0)) return std::nullopt;
    return mul_vec(C.get_row(0), T);
}

std::optional<F2Matrix> EchelonForm::solve_rows(const F2Matrix& Y) const {
    assert(has_transform && Y.cols == src_cols);
    F2Matrix res = Y;
    F2Matrix C = reduce_rows(res);
    for (std::size_t i = 0; i < res.rows; ++i)
        if (!res.row_is_zero(i)) return std::nullopt;
    return mul(C, T);
}

// ---------------------------------------------------------------------------
// Subspaces.
// ---------------------------------------------------------------------------

SubspaceBasis row_space(const F2Matrix& gens) {
    EchelonForm e = echelonize(gens, false);
    SubspaceBasis s;
    s.ambient = gens.cols;
    s.basis = std::move(e.R);
    s.pivots = std::move(e.pivots);
    return s;
}

SubspaceBasis full_space(std::size_t n) { return row_space(F2Matrix::identity(n)); }

SubspaceBasis zero_space(std::size_t n) {
    SubspaceBasis s;
    s.ambient = n;
    s.basis = F2Matrix(0, n);
    return s;
}

bool SubspaceBasis::contains(const F2Vec& v) const {
    if (v.n != ambient) throw std::invalid_argument("subspace membership: dimension mismatch");
    return coords_of(v).has_value();
}

std::optional<F2Vec> SubspaceBasis::coords_of(const F2Vec& v) const {
    if (v.n != ambient) throw std::invalid_argument("subspace coords: dimension mismatch");
    F2Vec c(dim()), r = v;
    for (std::size_t j = 0; j < pivots.size(); ++j)
        if (r.get(pivots[j])) {
            c.set(j, true);
            const word* b = basis.row(j);
            for (std::size_t k = 0; k < basis.wpr; ++k) r.w[k] ^= b[k];
        }
    if (!r.is_zero()) return std::nullopt;
    return c;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subspace sum: ambient mismatch");
    F2Matrix m(a.dim() + b.dim(), a.ambient);
    for (std::size_t i = 0; i < a.dim(); ++i) m.set_row(i, a.basis.get_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) m.set_row(a.dim() + i, b.basis.get_row(i));
    return row_space(m);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subspace intersect: ambient mismatch");
    // x in both row spaces iff x = u*A = v*B for some (u, v) in the left null
    // space of the stacked matrix [A; B].
    F2Matrix m(a.dim() + b.dim(), a.ambient);
    for (std::size_t i = 0; i < a.dim(); ++i) m.set_row(i, a.basis.get_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) m.set_row(a.dim() + i, b.basis.get_row(i));
    EchelonForm e = echelonize(m, true);
    F2Matrix xs(e.K.rows, a.ambient);
    for (std::size_t i = 0; i < e.K.rows; ++i) {
        F2Vec uv = e.K.get_row(i);
        F2Vec u(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) u.set(j, uv.get(j));
        xs.set_row(i, mul_vec(u, a.basis));
    }
    return row_space(xs);
}

// ---------------------------------------------------------------------------
// Column-convention wrappers.
// ---------------------------------------------------------------------------

SubspaceBasis kernel_basis(const F2Matrix& m) {
    EchelonForm e = echelonize(m, false);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    F2Matrix gens(m.cols - e.rank(), m.cols);
    std::size_t r = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        gens.set(r, f, true);
        for (std::size_t i = 0; i < e.rank(); ++i)
            if (e.R.get(i, f)) gens.set(r, e.pivots[i], true);
        ++r;
    }
    return row_space(gens);
}

SubspaceBasis image_basis(const F2Matrix& m) { return row_space(m.transposed()); }

std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b) {
    if (b.n != m.rows) throw std::invalid_argument("solve: rhs length != rows");
    EchelonForm e = echelonize(m, true);
    if (!mul_mat_vec(e.K, b).is_zero()) return std::nullopt;
    F2Vec tb = mul_mat_vec(e.T, b);
    F2Vec x(m.cols);
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (tb.get(i)) x.set(e.pivots[i], true);
    return x;
}

} // namespace coh2
