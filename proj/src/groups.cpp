#include "coh2/groups.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coh2 {

namespace {

void check_table(const Group& g) {
    int n = g.order;
    if (n < 1 || n > 64) throw std::invalid_argument("group order out of range (1..64)");
    if (int(g.mul.size()) != n) throw std::invalid_argument("multiplication table size mismatch");
    for (auto& row : g.mul) {
        if (int(row.size()) != n) throw std::invalid_argument("multiplication table row size mismatch");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (g.mul[0][a] != a || g.mul[a][0] != a)
            throw std::invalid_argument("element 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                    throw std::invalid_argument("multiplication table is not associative");
}

void fill_inverses(Group& g) {
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] == 0 && g.mul[b][a] == 0) { g.inv[a] = b; break; }
        if (g.inv[a] < 0) throw std::invalid_argument("element without inverse");
    }
}

Group from_table(std::vector<std::vector<int>> mul, const std::string& id) {
    Group g;
    g.id = id;
    g.order = int(mul.size());
    g.mul = std::move(mul);
    check_table(g);
    fill_inverses(g);
    return g;
}

Group build_cyclic(int n, const std::string& id) {
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return from_table(std::move(mul), id);
}

Group build_direct(const std::vector<Group>& fs, const std::string& id) {
    int n = 1;
    for (auto& f : fs) n *= f.order;
    if (n > 64) throw std::invalid_argument("direct product order exceeds 64");
    // mixed-radix index, leftmost factor slowest
    auto decode = [&](int x) {
        std::vector<int> d(fs.size());
        for (std::size_t i = fs.size(); i-- > 0;) {
            d[i] = x % fs[i].order;
            x /= fs[i].order;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int x = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) x = x * fs[i].order + d[i];
        return x;
    };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        auto da = decode(a);
        for (int b = 0; b < n; ++b) {
            auto db = decode(b);
            std::vector<int> dc(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i) dc[i] = fs[i].mul[da[i]][db[i]];
            mul[a][b] = encode(dc);
        }
    }
    return from_table(std::move(mul), id);
}

Group build_semidirect(int m, int k, int e, const std::string& id) {
    if (m < 1 || k < 1 || m * k > 64) throw std::invalid_argument("semidirect parameters out of range");
    e = ((e % m) + m) % m;
    if (std::gcd(e, m) != 1) throw std::invalid_argument("automorphism exponent not invertible mod m");
    int ek = 1;
    for (int i = 0; i < k; ++i) ek = (ek * e) % m;
    if (ek != 1 % m) throw std::invalid_argument("automorphism exponent order does not divide k");
    std::vector<int> epow(k);
    epow[0] = 1 % m;
    for (int j = 1; j < k; ++j) epow[j] = (epow[j - 1] * e) % m;
    // (i,j)(i',j') = (i + i'*e^j, j + j'), element index i*k + j
    int n = m * k;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < k; ++j2)
                    mul[i * k + j][i2 * k + j2] =
                        ((i + i2 * epow[j]) % m) * k + (j + j2) % k;
    return from_table(std::move(mul), id);
}

Group build_dicyclic(int m, const std::string& id) {
    // <a, b | a^m = 1, b^2 = a^(m/2), b a b^-1 = a^-1>, order 2m
    if (m < 2 || m % 2 || 2 * m > 64) throw std::invalid_argument("dicyclic parameter out of range");
    int n = 2 * m;
    auto idx = [&](int i, int j) { return 2 * ((i % m + m) % m) + j; };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int r;
                    if (j == 0) r = idx(i + i2, j2);
                    else if (j2 == 0) r = idx(i - i2, 1);
                    else r = idx(i - i2 + m / 2, 0);
                    mul[idx(i, j)][idx(i2, j2)] = r;
                }
    return from_table(std::move(mul), id);
}

Group build_central_product(const Group& a, const Group& b, int za, int zb, const std::string& id) {
    auto central = [](const Group& g, int z) {
        if (z < 0 || z >= g.order || g.mul[z][z] != 0 || z == 0) return false;
        for (int x = 0; x < g.order; ++x)
            if (g.mul[x][z] != g.mul[z][x]) return false;
        return true;
    };
    if (!central(a, za) || !central(b, zb))
        throw std::invalid_argument("central product identification is not a central involution");
    int N = a.order * b.order;
    auto pidx = [&](int x, int y) { return x * b.order + y; };
    // cosets {p, p*z}, canonical representative = smaller product index
    std::vector<int> rep(N);
    std::vector<int> reps;
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y) {
            int p = pidx(x, y);
            int q = pidx(a.mul[x][za], b.mul[y][zb]);
            rep[p] = std::min(p, q);
            if (rep[p] == p) reps.push_back(p);
        }
    std::sort(reps.begin(), reps.end());
    std::vector<int> pos(N, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = int(i);
    int n = int(reps.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int x1 = reps[i] / b.order, y1 = reps[i] % b.order;
            int x2 = reps[j] / b.order, y2 = reps[j] % b.order;
            mul[i][j] = pos[rep[pidx(a.mul[x1][x2], b.mul[y1][y2])]];
        }
    return from_table(std::move(mul), id);
}

} // namespace

std::string GroupSpec::describe() const {
    std::ostringstream s;
    switch (kind) {
    case Kind::cyclic: s << "cyclic(" << n << ")"; break;
    case Kind::direct_product: {
        s << "direct(";
        for (std::size_t i = 0; i < factors.size(); ++i)
            s << (i ? " x " : "") << factors[i].describe();
        s << ")";
        break;
    }
    case Kind::semidirect:
        s << "semidirect(C" << m << " by C" << k << ", a -> a^" << e << ")";
        break;
    case Kind::dicyclic: s << "dicyclic(" << 2 * m << ")"; break;
    case Kind::central_product:
        s << "central_product(" << factors[0].describe() << ", " << factors[1].describe() << ")";
        break;
    case Kind::table: s << "table(" << table.size() << ")"; break;
    }
    return s.str();
}

Group build_group(const GroupSpec& spec, const std::string& id) {
    switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return build_cyclic(spec.n, id);
    case GroupSpec::Kind::direct_product: {
        std::vector<Group> fs;
        for (auto& f : spec.factors) fs.push_back(build_group(f, "factor"));
        return build_direct(fs, id);
    }
    case GroupSpec::Kind::semidirect: return build_semidirect(spec.m, spec.k, spec.e, id);
    case GroupSpec::Kind::dicyclic: return build_dicyclic(spec.m, id);
    case GroupSpec::Kind::central_product: {
        if (spec.factors.size() != 2)
            throw std::invalid_argument("central product takes two factors");
        Group a = build_group(spec.factors[0], "factor");
        Group b = build_group(spec.factors[1], "factor");
        return build_central_product(a, b, spec.ident_a, spec.ident_b, id);
    }
    case GroupSpec::Kind::table: return from_table(spec.table, id);
    }
    throw std::invalid_argument("unknown group spec kind");
}

namespace {

std::uint64_t closure_mask(const Group& g, std::uint64_t m) {
    m |= 1;
    for (;;) {
        std::uint64_t next = m;
        for (int a = 0; a < g.order; ++a) {
            if (!(m >> a & 1)) continue;
            for (int b = 0; b < g.order; ++b)
                if (m >> b & 1) next |= std::uint64_t(1) << g.mul[a][b];
        }
        if (next == m) return m;
        m = next;
    }
}

std::vector<int> mask_elements(std::uint64_t m) {
    std::vector<int> v;
    for (int x = 0; x < 64; ++x)
        if (m >> x & 1) v.push_back(x);
    return v;
}

} // namespace

Subgroup generated_subgroup(const Group& g, const std::vector<int>& gens) {
    std::uint64_t m = 1;
    for (int x : gens) m |= std::uint64_t(1) << x;
    Subgroup s;
    s.elements = mask_elements(closure_mask(g, m));
    return s;
}

std::vector<Subgroup> subgroups(const Group& g) {
    std::set<std::uint64_t> found;
    std::vector<std::uint64_t> queue{closure_mask(g, 1)};
    found.insert(queue[0]);
    while (!queue.empty()) {
        std::uint64_t h = queue.back();
        queue.pop_back();
        for (int x = 1; x < g.order; ++x) {
            if (h >> x & 1) continue;
            std::uint64_t c = closure_mask(g, h | std::uint64_t(1) << x);
            if (found.insert(c).second) queue.push_back(c);
        }
    }
    std::vector<Subgroup> out;
    for (std::uint64_t m : found) {
        Subgroup s;
        s.elements = mask_elements(m);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Subgroup> elementary_abelian_subgroups(const Group& g) {
    std::vector<Subgroup> out;
    for (Subgroup& s : subgroups(g)) {
        bool ea = true;
        for (int x : s.elements)
            if (x && g.mul[x][x] != 0) { ea = false; break; }
        if (ea)
            for (int x : s.elements) {
                for (int y : s.elements)
                    if (g.mul[x][y] != g.mul[y][x]) { ea = false; break; }
                if (!ea) break;
            }
        if (!ea) continue;
        int r = 0;
        while ((std::size_t(1) << r) < s.elements.size()) ++r;
        if ((std::size_t(1) << r) != s.elements.size())
            throw std::logic_error("elementary abelian subgroup of non-2-power size");
        s.rank_if_elementary_abelian = r;
        out.push_back(std::move(s));
    }
    return out;
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& s, int x) {
    Subgroup out;
    for (int a : s.elements) out.elements.push_back(g.conj(x, a));
    std::sort(out.elements.begin(), out.elements.end());
    out.rank_if_elementary_abelian = s.rank_if_elementary_abelian;
    return out;
}

int element_order(const Group& g, int x) {
    int n = 1, y = x;
    while (y != 0) {
        y = g.mul[y][x];
        ++n;
    }
    return n;
}

std::map<int, int> order_census(const Group& g) {
    std::map<int, int> c;
    for (int x = 0; x < g.order; ++x) ++c[element_order(g, x)];
    return c;
}

std::vector<int> center_elements(const Group& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool c = true;
        for (int a = 0; a < g.order; ++a)
            if (g.mul[x][a] != g.mul[a][x]) { c = false; break; }
        if (c) z.push_back(x);
    }
    return z;
}

std::vector<int> derived_subgroup_elements(const Group& g) {
    std::uint64_t m = 1;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            int c = g.mul[g.mul[g.mul[a][b]][g.inv[a]]][g.inv[b]];
            m |= std::uint64_t(1) << c;
        }
    return mask_elements(closure_mask(g, m));
}

std::vector<int> small_generating_set(const Group& g) {
    // Frattini subgroup of a 2-group: G' together with all squares.
    std::uint64_t phi = 1;
    for (int x : derived_subgroup_elements(g)) phi |= std::uint64_t(1) << x;
    for (int x = 0; x < g.order; ++x) phi |= std::uint64_t(1) << g.mul[x][x];
    phi = closure_mask(g, phi);

    std::vector<int> gens;
    std::uint64_t have = phi;
    std::uint64_t all = g.order == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.order) - 1;
    for (int x = 1; x < g.order && have != all; ++x) {
        if (have >> x & 1) continue;
        gens.push_back(x);
        have = closure_mask(g, have | std::uint64_t(1) << x);
    }
    return gens;
}

Group rebuilt_subgroup(const Group& g, const Subgroup& s) {
    int n = int(s.elements.size());
    std::vector<int> pos(g.order, -1);
    for (int i = 0; i < n; ++i) pos[s.elements[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = g.mul[s.elements[i]][s.elements[j]];
            if (pos[p] < 0) throw std::invalid_argument("element set is not closed under multiplication");
            mul[i][j] = pos[p];
        }
    std::ostringstream id;
    id << g.id << "/" << std::hex << s.mask();
    return from_table(std::move(mul), id.str());
}

Group quotient_group(const Group& g, const Subgroup& n) {
    std::uint64_t nm = n.mask();
    for (int x = 0; x < g.order; ++x) {
        std::uint64_t c = 0;
        for (int a : n.elements) c |= std::uint64_t(1) << g.conj(x, a);
        if (c != nm) throw std::invalid_argument("quotient by non-normal subgroup");
    }
    std::vector<int> rep(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        int r = x;
        for (int a : n.elements) r = std::min(r, g.mul[x][a]);
        rep[x] = r;
        if (r == x) reps.push_back(x);
    }
    std::vector<int> pos(g.order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = int(i);
    int q = int(reps.size());
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) mul[i][j] = pos[rep[g.mul[reps[i]][reps[j]]]];
    return from_table(std::move(mul), g.id + " quotient");
}

namespace {

bool extend_iso(const Group& a, const Group& b, std::vector<int>& phi, std::uint64_t& used) {
    // Propagate products through the partial map; fail on any clash.
    for (;;) {
        bool grew = false;
        for (int u = 0; u < a.order; ++u) {
            if (phi[u] < 0) continue;
            for (int v = 0; v < a.order; ++v) {
                if (phi[v] < 0) continue;
                int w = a.mul[u][v], fw = b.mul[phi[u]][phi[v]];
                if (phi[w] < 0) {
                    if (used >> fw & 1) return false;
                    phi[w] = fw;
                    used |= std::uint64_t(1) << fw;
                    grew = true;
                } else if (phi[w] != fw) {
                    return false;
                }
            }
        }
        if (!grew) return true;
    }
}

bool search_iso(const Group& a, const Group& b, const std::vector<int>& gens, std::size_t d,
                std::vector<int>& phi, std::uint64_t used) {
    if (d == gens.size()) {
        for (int x = 0; x < a.order; ++x)
            if (phi[x] < 0) return false;
        return true;
    }
    int gsrc = gens[d];
    if (phi[gsrc] >= 0) return search_iso(a, b, gens, d + 1, phi, used);
    int og = element_order(a, gsrc);
    for (int y = 0; y < b.order; ++y) {
        if (used >> y & 1) continue;
        if (element_order(b, y) != og) continue;
        std::vector<int> phi2 = phi;
        std::uint64_t used2 = used | std::uint64_t(1) << y;
        phi2[gsrc] = y;
        if (extend_iso(a, b, phi2, used2) && search_iso(a, b, gens, d + 1, phi2, used2)) {
            phi = phi2;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
    if (a.order != b.order) return std::nullopt;
    std::vector<int> phi(a.order, -1);
    phi[0] = 0;
    std::uint64_t used = 1;
    auto gens = small_generating_set(a);
    if (!search_iso(a, b, gens, 0, phi, used)) return std::nullopt;
    return phi;
}

F2Matrix characters(const Group& g) {
    int n = g.order;
    F2Matrix constraints(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t r = std::size_t(a) * n + b;
            constraints.flip(r, a);
            constraints.flip(r, b);
            constraints.flip(r, g.mul[a][b]);
        }
    return kernel_basis(constraints).basis;
}

namespace {

GroupSpec cyc(int n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::cyclic;
    s.n = n;
    return s;
}
GroupSpec dp(std::vector<GroupSpec> fs) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::direct_product;
    s.factors = std::move(fs);
    return s;
}
GroupSpec sd(int m, int k, int e) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::semidirect;
    s.m = m;
    s.k = k;
    s.e = e;
    return s;
}
GroupSpec dic(int m) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::dicyclic;
    s.m = m;
    return s;
}

// (C4 x C2) x| C2 with the complement acting by a -> a*s, s -> s.
// Elements are triples (i,j,k) with i in Z4 and j,k in Z2, at index 4i+2j+k.
GroupSpec group_16_3() {
    GroupSpec s;
    s.kind = GroupSpec::Kind::table;
    auto idx = [](int i, int j, int k) { return i * 4 + j * 2 + k; };
    s.table.assign(16, std::vector<int>(16));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int i2 = 0; i2 < 4; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int k2 = 0; k2 < 2; ++k2)
                            s.table[idx(i, j, k)][idx(i2, j2, k2)] =
                                idx((i + i2) % 4, (j + j2 + k * i2) % 2, (k + k2) % 2);
    return s;
}

GroupSpec d8cpc4() {
    GroupSpec s;
    s.kind = GroupSpec::Kind::central_product;
    s.factors = {sd(4, 2, 3), cyc(4)};
    s.ident_a = 4; // r^2, the central involution (i,j) = (2,0) at index i*2+j
    s.ident_b = 2; // c^2
    return s;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        auto add = [&](const std::string& id, GroupSpec spec) {
            int order = build_group(spec, id).order;
            v.push_back({id, std::move(spec), order});
        };
        add("e", cyc(1));
        add("C2", cyc(2));
        add("C2xC2", dp({cyc(2), cyc(2)}));
        add("C4", cyc(4));
        add("C2xC2xC2", dp({cyc(2), cyc(2), cyc(2)}));
        add("C2xC4", dp({cyc(2), cyc(4)}));
        add("C8", cyc(8));
        add("D8", sd(4, 2, 3));
        add("Q8", dic(4));
        add("C2xC2xC2xC2", dp({cyc(2), cyc(2), cyc(2), cyc(2)}));
        add("C2xC2xC4", dp({cyc(2), cyc(2), cyc(4)}));
        add("C4xC4", dp({cyc(4), cyc(4)}));
        add("C8xC2", dp({cyc(8), cyc(2)}));
        add("C16", cyc(16));
        add("D16", sd(8, 2, 7));
        add("Q16", dic(8));
        add("SD16", sd(8, 2, 3));
        add("M16", sd(8, 2, 5));
        add("D8*C4", d8cpc4());
        add("C4:C4", sd(4, 4, 3));
        add("C4xC2:C2", group_16_3());
        add("Q8xC2", dp({dic(4), cyc(2)}));
        add("D8xC2", dp({sd(4, 2, 3), cyc(2)}));
        return v;
    }();
    return entries;
}

const Group& catalog_group(const std::string& id) {
    static std::map<std::string, Group> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    for (auto& entry : catalog())
        if (entry.id == id)
            return cache.emplace(id, build_group(entry.spec, id)).first->second;
    throw std::invalid_argument("unknown catalog group: " + id);
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> v;
    for (auto& entry : catalog()) v.push_back(entry.id);
    return v;
}

} // namespace coh2
