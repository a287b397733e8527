#include "coh2/ring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace coh2 {

namespace {

void copy_row(const F2Matrix& src, std::size_t si, F2Matrix& dst, std::size_t di) {
    // same column count, hence same words per row
    std::copy(src.row(si), src.row(si) + src.wpr, dst.row(di));
}

void xor_row_into(F2Vec& acc, const F2Matrix& m, std::size_t r) {
    const word* p = m.row(r);
    for (std::size_t k = 0; k < m.wpr; ++k) acc.w[k] ^= p[k];
}

// Parity of the bit count of row bits [lo, hi).
bool range_parity(const word* p, std::size_t lo, std::size_t hi) {
    std::size_t wl = lo >> 6, wh = (hi - 1) >> 6;
    int par = 0;
    for (std::size_t w = wl; w <= wh; ++w) {
        word m = ~word(0);
        if (w == wl) m &= ~word(0) << (lo & 63);
        if (w == wh && (hi & 63)) m &= ~word(0) >> (64 - (hi & 63));
        par ^= std::popcount(p[w] & m) & 1;
    }
    return par != 0;
}

bool is_catalog_id(const std::string& id) {
    for (const auto& cid : catalog_ids())
        if (cid == id) return true;
    return false;
}

} // namespace

int RingTable::generator_count() const {
    int c = 0;
    for (const auto& v : generators) c += int(v.size());
    return c;
}

std::size_t RingTable::pair_index(int s, int t) const {
    if (s < 1 || t < 1 || s + t > max_degree)
        throw std::out_of_range("ring product pair out of range");
    std::size_t n = std::size_t(max_degree), s_ = std::size_t(s);
    return (s_ - 1) * n - s_ * (s_ - 1) / 2 + std::size_t(t) - 1;
}

CohomClass unit_class(const RingTable& tab) {
    CohomClass u{tab.group_id, 0, F2Vec(1)};
    u.coordinates.set(0, true);
    return u;
}

CohomClass zero_class(const RingTable& tab, int degree) {
    if (degree < 0 || degree > tab.max_degree)
        throw std::invalid_argument("zero_class: degree out of range");
    return {tab.group_id, degree, F2Vec(std::size_t(tab.dims[std::size_t(degree)]))};
}

CohomClass basis_class(const RingTable& tab, int degree, int index) {
    CohomClass u = zero_class(tab, degree);
    if (index < 0 || index >= tab.dims[std::size_t(degree)])
        throw std::invalid_argument("basis_class: index out of range");
    u.coordinates.set(std::size_t(index), true);
    return u;
}

CohomClass add(const CohomClass& u, const CohomClass& v) {
    if (u.group_id != v.group_id || u.degree != v.degree)
        throw std::invalid_argument("add: class degree/group mismatch");
    CohomClass out = u;
    out.coordinates.xor_in(v.coordinates);
    return out;
}

CohomClass cup(const RingTable& tab, const CohomClass& u, const CohomClass& v) {
    if (u.group_id != tab.group_id || v.group_id != tab.group_id)
        throw std::invalid_argument("cup: class does not belong to this table");
    int s = u.degree, t = v.degree;
    if (s < 0 || t < 0 || s + t > tab.max_degree)
        throw std::invalid_argument("cup: total degree exceeds the table");
    if (u.coordinates.n != std::size_t(tab.dims[std::size_t(s)]) ||
        v.coordinates.n != std::size_t(tab.dims[std::size_t(t)]))
        throw std::invalid_argument("cup: coordinate length mismatch");
    if (s == 0) return u.coordinates.get(0) ? v : zero_class(tab, t);
    if (t == 0) return v.coordinates.get(0) ? u : zero_class(tab, s);
    CohomClass out = zero_class(tab, s + t);
    const F2Matrix& p = tab.product(s, t);
    std::size_t bt = std::size_t(tab.dims[std::size_t(t)]);
    for (std::size_t m = 0; m < u.coordinates.n; ++m) {
        if (!u.coordinates.get(m)) continue;
        for (std::size_t k = 0; k < v.coordinates.n; ++k)
            if (v.coordinates.get(k)) xor_row_into(out.coordinates, p, m * bt + k);
    }
    return out;
}

CohomClass frobenius_power(const RingTable& tab, const CohomClass& u, int e) {
    if (e < 0) throw std::invalid_argument("frobenius_power: negative exponent");
    if (u.degree < 0 || (std::int64_t(u.degree) << e) > tab.max_degree)
        throw std::invalid_argument("frobenius_power: degree overflow beyond the table");
    CohomClass out = u;
    for (int i = 0; i < e; ++i) out = cup(tab, out, out);
    return out;
}

GradedRingMap compose_maps(const GradedRingMap& first, const GradedRingMap& second) {
    if (first.target_id != second.source_id)
        throw std::invalid_argument("compose_maps: target/source mismatch");
    GradedRingMap out;
    out.source_id = first.source_id;
    out.target_id = second.target_id;
    out.max_degree = std::min(first.max_degree, second.max_degree);
    out.degree.resize(std::size_t(out.max_degree) + 1);
    for (int t = 0; t <= out.max_degree; ++t)
        out.degree[std::size_t(t)] =
            mul(second.degree[std::size_t(t)], first.degree[std::size_t(t)]);
    return out;
}

GroupCohomology::GroupCohomology(Group g, int n,
                                 const std::optional<std::filesystem::path>& cache_dir,
                                 std::string* cache_note)
    : n_(n), solver_(std::move(g)) {
    if (n < 0) throw std::invalid_argument("GroupCohomology: negative truncation degree");
    if (cache_dir) {
        solver_.adopt(cached_minimal_resolution(solver_.group(), n, cache_dir, cache_note));
    } else {
        solver_.extend_to(n);
        if (cache_note) cache_note->clear();
    }
    build_table();
}

void GroupCohomology::build_table() {
    table_.group_id = group().id;
    table_.max_degree = n_;
    table_.dims.resize(std::size_t(n_) + 1);
    for (int t = 0; t <= n_; ++t) table_.dims[std::size_t(t)] = solver_.betti(t);
    table_.generators.assign(std::size_t(n_) + 1, {});
    table_.products_.assign(n_ >= 2 ? table_.pair_index(n_ - 1, 1) + 1 : 0, F2Matrix{});
    dec_.resize(std::size_t(n_) + 1);
    for (int s = 1; s <= n_; ++s) build_degree(s);
    for (int total = 2; total <= n_; ++total)
        for (int s = 1; s < total; ++s) build_products(s, total - s);
}

void GroupCohomology::build_degree(int s) {
    int bs = table_.dims[std::size_t(s)];
    DegreeDecomp dd;
    std::size_t nrows = 0;
    for (const GenInfo& gl : gens_) nrows += std::size_t(table_.dims[std::size_t(s - gl.degree)]);
    F2Matrix d(nrows, std::size_t(bs));
    dd.rows_meta.reserve(nrows);
    std::size_t r = 0;
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        const GenInfo& gl = gens_[gi];
        int i = s - gl.degree; // the right factor's degree, >= 1
        const F2Matrix& mt = gl.mul_by_t[std::size_t(i)]; // dims[i] x dims[s]
        for (int w = 0; w < table_.dims[std::size_t(i)]; ++w, ++r) {
            copy_row(mt, std::size_t(w), d, r);
            dd.rows_meta.push_back({int(gi), w});
        }
    }
    dd.ech = echelonize(d, true);
    dd.gen_of_basis.assign(std::size_t(bs), -1);
    dd.pivot_row.assign(std::size_t(bs), -1);
    for (std::size_t i = 0; i < dd.ech.pivots.size(); ++i)
        dd.pivot_row[dd.ech.pivots[i]] = int(i);
    for (int m = 0; m < bs; ++m) {
        if (dd.pivot_row[std::size_t(m)] >= 0) continue;
        // basis class outside the decomposable span: a new ring generator;
        // lift it once and keep only the induced multiplication matrices
        GenInfo info;
        info.degree = s;
        info.index = m;
        F2Vec u{std::size_t(bs)};
        u.set(std::size_t(m), true);
        auto f = lift_chain_map(solver_, u, s, n_ - s);
        info.mul_by.resize(f.size());
        info.mul_by_t.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            F2Matrix m2(std::size_t(table_.dims[s + i]), std::size_t(table_.dims[i]));
            for (int j = 0; j < f[i].source_rank; ++j)
                for (int k = 0; k < f[i].target_rank; ++k)
                    if (augmentation(f[i].at(j, k))) m2.set(std::size_t(j), std::size_t(k), true);
            info.mul_by_t[i] = m2.transposed();
            info.mul_by[i] = std::move(m2);
        }
        dd.gen_of_basis[std::size_t(m)] = int(gens_.size());
        table_.generators[std::size_t(s)].push_back(m);
        gens_.push_back(std::move(info));
    }
    dec_[std::size_t(s)] = std::move(dd);
}

void GroupCohomology::build_products(int s, int t) {
    int bs = table_.dims[std::size_t(s)];
    int bt = table_.dims[std::size_t(t)];
    int bst = table_.dims[std::size_t(s + t)];
    F2Matrix p(std::size_t(bs) * std::size_t(bt), std::size_t(bst));
    std::size_t idx = table_.pair_index(s, t);
    if (bs == 0 || bt == 0 || bst == 0) {
        table_.products_[idx] = std::move(p);
        return;
    }
    const DegreeDecomp& dd = dec_[std::size_t(s)];
    std::size_t nr = dd.rows_meta.size();

    // b[r]: the bt x bst block of products (decomposable row r) * (basis of
    // H^t), via row r = gen * w and gen * (w * e_k) at lower total degree.
    std::vector<F2Matrix> b(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        auto [gi, w] = dd.rows_meta[r];
        const GenInfo& gl = gens_[std::size_t(gi)];
        int i = s - gl.degree + t;
        const F2Matrix& lower = table_.product(s - gl.degree, t);
        F2Matrix wblock(std::size_t(bt), std::size_t(table_.dims[std::size_t(i)]));
        for (int k = 0; k < bt; ++k)
            copy_row(lower, std::size_t(w) * std::size_t(bt) + std::size_t(k), wblock,
                     std::size_t(k));
        b[r] = mul(wblock, gl.mul_by_t[std::size_t(i)]);
    }

    // e_m = (RREF row with pivot m, a combination of decomposable rows via
    // the transform) + (degree-s generators at the row's non-pivot support)
    F2Matrix c{std::size_t(bs), nr};
    F2Matrix u{std::size_t(bs), std::size_t(bs)};
    for (int m = 0; m < bs; ++m) {
        if (dd.gen_of_basis[std::size_t(m)] >= 0) {
            u.set(std::size_t(m), std::size_t(m), true);
            continue;
        }
        int i = dd.pivot_row[std::size_t(m)];
        copy_row(dd.ech.T, std::size_t(i), c, std::size_t(m));
        for (int j = 0; j < bs; ++j)
            if (j != m && dd.ech.R.get(std::size_t(i), std::size_t(j)))
                u.set(std::size_t(m), std::size_t(j), true);
    }

    F2Matrix bk{nr, std::size_t(bst)};
    F2Matrix vk{std::size_t(bs), std::size_t(bst)};
    for (int k = 0; k < bt; ++k) {
        for (std::size_t r = 0; r < nr; ++r) copy_row(b[r], std::size_t(k), bk, r);
        std::fill(vk.a.begin(), vk.a.end(), word(0));
        for (int m = 0; m < bs; ++m) {
            int gi = dd.gen_of_basis[std::size_t(m)];
            if (gi >= 0) copy_row(gens_[std::size_t(gi)].mul_by_t[std::size_t(t)],
                                  std::size_t(k), vk, std::size_t(m));
        }
        F2Matrix pk = mul(c, bk);
        addmul(pk, u, vk);
        for (int m = 0; m < bs; ++m)
            copy_row(pk, std::size_t(m), p, std::size_t(m) * std::size_t(bt) + std::size_t(k));
    }
    table_.products_[idx] = std::move(p);
}

const F2Matrix& GroupCohomology::degree1_characters() {
    if (chars_) return *chars_;
    if (n_ < 1) throw std::logic_error("degree1_characters: table truncated below degree 1");
    const Group& g = group();
    std::size_t n = std::size_t(g.order);
    int b1 = dim(1);

    // span of (x-1)(y-1): the square of the augmentation ideal
    F2Matrix j2(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t r = x * n + y;
            j2.flip(r, std::size_t(g.mul[x][y]));
            j2.flip(r, x);
            j2.flip(r, y);
            j2.flip(r, 0);
        }
    EchelonForm j2e = echelonize(j2, false);

    // the minimal generators of the augmentation ideal, reduced mod its square
    F2Matrix rho = generator_rows(g, res().d[1]);
    j2e.reduce_rows(rho);
    EchelonForm rech = echelonize(rho, true);

    F2Matrix chars(std::size_t(b1), n);
    F2Matrix one(1, n);
    for (std::size_t x = 1; x < n; ++x) {
        std::fill(one.a.begin(), one.a.end(), word(0));
        one.flip(0, x);
        one.flip(0, 0);
        j2e.reduce_rows(one);
        auto a = rech.solve_row(one.get_row(0));
        if (!a) throw std::logic_error("degree1_characters: generator images do not span J/J^2");
        for (int j = 0; j < b1; ++j)
            if (a->get(std::size_t(j))) chars.set(std::size_t(j), x, true);
    }
    chars_ = std::move(chars);
    return *chars_;
}

CohomologyStore::CohomologyStore(int n, std::optional<std::filesystem::path> cache_dir)
    : n_(n), cache_dir_(std::move(cache_dir)) {
    if (n < 0) throw std::invalid_argument("CohomologyStore: negative truncation degree");
}

GroupCohomology& CohomologyStore::of(const Group& g) {
    auto it = handles_.find(g.id);
    if (it != handles_.end()) {
        if (it->second->group().mul != g.mul)
            throw std::logic_error("CohomologyStore: two distinct groups share id " + g.id);
        return *it->second;
    }
    // subgroup models are cheap to resolve and would litter the cache
    // directory, so only catalog groups go to disk
    std::optional<std::filesystem::path> dir;
    if (cache_dir_ && is_catalog_id(g.id)) dir = cache_dir_;
    std::string note;
    auto h = std::make_unique<GroupCohomology>(g, n_, dir, &note);
    if (!note.empty()) cache_notes_.push_back(g.id + ": " + note);
    return *handles_.emplace(g.id, std::move(h)).first->second;
}

GroupCohomology& CohomologyStore::of_subgroup(const Group& parent, const Subgroup& s) {
    if (int(s.elements.size()) == parent.order) return of(parent);
    return of(rebuilt_subgroup(parent, s));
}

const GradedRingMap& CohomologyStore::induced_map(GroupCohomology& outer, GroupCohomology& inner,
                                                  const std::vector<int>& alpha) {
    const Group& a = outer.group();
    const Group& s = inner.group();
    std::string key = a.id;
    key += '\n';
    key += s.id;
    key += '\n';
    for (int x : alpha) {
        key += std::to_string(x);
        key += ',';
    }
    auto it = induced_cache_.find(key);
    if (it != induced_cache_.end()) return it->second;

    if (int(alpha.size()) != s.order)
        throw std::invalid_argument("induced_map: alpha length != inner group order");
    std::vector<char> seen(std::size_t(a.order), 0);
    for (int x : alpha) {
        if (x < 0 || x >= a.order) throw std::invalid_argument("induced_map: alpha out of range");
        if (seen[std::size_t(x)]) throw std::invalid_argument("induced_map: alpha not injective");
        seen[std::size_t(x)] = 1;
    }
    for (int i = 0; i < s.order; ++i)
        for (int j = 0; j < s.order; ++j)
            if (alpha[std::size_t(s.mul[i][j])] != a.mul[alpha[std::size_t(i)]][alpha[std::size_t(j)]])
                throw std::invalid_argument("induced_map: alpha is not a homomorphism");

    std::size_t ord = std::size_t(a.order);
    GradedRingMap map;
    map.source_id = a.id;
    map.target_id = s.id;
    map.max_degree = n_;
    map.degree.resize(std::size_t(n_) + 1);
    map.degree[0] = F2Matrix::identity(1);

    // x holds the chain map on inner generators in outer's flat coordinates;
    // degree 0 sends inner's generator to outer's (augmentation-compatible)
    F2Matrix x(1, ord);
    x.set(0, 0, true);
    for (int t = 1; t <= n_; ++t) {
        int bs = inner.solver().betti(t), bsm = inner.solver().betti(t - 1);
        int ba = outer.solver().betti(t), bam = outer.solver().betti(t - 1);

        // rows (l, y) = y * x_l: the inner-flat to outer-flat action table
        F2Matrix xflat(std::size_t(bsm) * ord, std::size_t(bam) * ord);
        for (int l = 0; l < bsm; ++l) {
            F2Vec xl = x.get_row(std::size_t(l));
            for (std::size_t y = 0; y < ord; ++y)
                xflat.set_row(std::size_t(l) * ord + y, act_flat(a, int(y), xl, bam));
        }
        // inner differential with blocks pushed through alpha
        F2Matrix push(std::size_t(bs), std::size_t(bsm) * ord);
        const FreeModuleMap& ds = inner.res().d[std::size_t(t)];
        for (int k = 0; k < bs; ++k)
            for (int l = 0; l < bsm; ++l) {
                AlgebraElement blk = ds.at(k, l);
                for (int e = 0; e < s.order; ++e)
                    if (blk >> e & 1)
                        push.flip(std::size_t(k), std::size_t(l) * ord + std::size_t(alpha[std::size_t(e)]));
            }
        F2Matrix rhs = mul(push, xflat);
        auto xn = outer.solver().ech(t).solve_rows(rhs);
        if (!xn) throw std::logic_error("induced_map: lift system unsolvable");
        F2Matrix m{std::size_t(bs), std::size_t(ba)};
        for (int k = 0; k < bs; ++k)
            for (int j = 0; j < ba; ++j)
                if (range_parity(xn->row(std::size_t(k)), std::size_t(j) * ord,
                                 std::size_t(j + 1) * ord))
                    m.set(std::size_t(k), std::size_t(j), true);
        map.degree[std::size_t(t)] = std::move(m);
        x = std::move(*xn);
    }
    return induced_cache_.emplace(std::move(key), std::move(map)).first->second;
}

const GradedRingMap& CohomologyStore::restriction(const Group& big, const Subgroup& sub) {
    GroupCohomology& outer = of(big);
    GroupCohomology& inner = of_subgroup(big, sub);
    return induced_map(outer, inner, sub.elements);
}

const GradedRingMap& CohomologyStore::conjugation_map(const Group& g, const Subgroup& sub, int x) {
    if (x < 0 || x >= g.order) throw std::invalid_argument("conjugation_map: element out of range");
    Subgroup csub = conjugate_subgroup(g, sub, x);
    GroupCohomology& tmod = of_subgroup(g, csub);
    GroupCohomology& smod = of_subgroup(g, sub);
    std::vector<int> alpha(sub.elements.size());
    for (std::size_t i = 0; i < sub.elements.size(); ++i) {
        int y = g.conj(x, sub.elements[i]);
        auto pos = std::lower_bound(csub.elements.begin(), csub.elements.end(), y);
        alpha[i] = int(pos - csub.elements.begin());
    }
    return induced_map(tmod, smod, alpha);
}

RingTable ring_table(const Group& g, int n) {
    GroupCohomology h(g, n, std::nullopt);
    return h.table();
}

GradedRingMap restriction(const Group& big, const Subgroup& sub, int n) {
    CohomologyStore store(n);
    return store.restriction(big, sub);
}

GradedRingMap conjugation_map(const Group& g, const Subgroup& sub, int x, int n) {
    CohomologyStore store(n);
    return store.conjugation_map(g, sub, x);
}

} // namespace coh2
