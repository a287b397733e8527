#include "coh2/resolve.hpp"

#include "json.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

namespace coh2 {

AlgebraElement algebra_mul(const Group& g, AlgebraElement a, AlgebraElement b) {
    AlgebraElement out = 0;
    for (int x = 0; x < g.order; ++x) {
        if (!(a >> x & 1)) continue;
        for (int y = 0; y < g.order; ++y)
            if (b >> y & 1) out ^= AlgebraElement(1) << g.mul[x][y];
    }
    return out;
}

int augmentation(AlgebraElement a) { return std::popcount(a) & 1; }

F2Vec act_flat(const Group& g, int x, const F2Vec& v, int rank) {
    F2Vec out(v.n);
    int n = g.order;
    for (int j = 0; j < rank; ++j) {
        std::size_t base = std::size_t(j) * n;
        for (int h = 0; h < n; ++h)
            if (v.get(base + h)) out.flip(base + g.mul[x][h]);
    }
    return out;
}

F2Vec algebra_act_flat(const Group& g, AlgebraElement a, const F2Vec& v, int rank) {
    F2Vec out(v.n);
    for (int x = 0; x < g.order; ++x)
        if (a >> x & 1) out.xor_in(act_flat(g, x, v, rank));
    return out;
}

FreeModuleMap compose(const Group& g, const FreeModuleMap& first, const FreeModuleMap& second) {
    if (first.target_rank != second.source_rank)
        throw std::invalid_argument("module map composition rank mismatch");
    FreeModuleMap out(first.source_rank, second.target_rank);
    for (int j = 0; j < first.source_rank; ++j)
        for (int i = 0; i < first.target_rank; ++i) {
            AlgebraElement a = first.at(j, i);
            if (!a) continue;
            for (int k = 0; k < second.target_rank; ++k)
                out.at(j, k) ^= algebra_mul(g, a, second.at(i, k));
        }
    return out;
}

F2Matrix flatten(const Group& g, const FreeModuleMap& m) {
    int n = g.order;
    F2Matrix f(std::size_t(m.source_rank) * n, std::size_t(m.target_rank) * n);
    for (int j = 0; j < m.source_rank; ++j)
        for (int i = 0; i < m.target_rank; ++i) {
            AlgebraElement a = m.at(j, i);
            if (!a) continue;
            for (int s = 0; s < n; ++s) {
                if (!(a >> s & 1)) continue;
                for (int x = 0; x < n; ++x)
                    f.flip(std::size_t(j) * n + x, std::size_t(i) * n + g.mul[x][s]);
            }
        }
    return f;
}

F2Matrix generator_rows(const Group& g, const FreeModuleMap& m) {
    int n = g.order;
    F2Matrix f(m.source_rank, std::size_t(m.target_rank) * n);
    for (int j = 0; j < m.source_rank; ++j)
        for (int i = 0; i < m.target_rank; ++i) {
            AlgebraElement a = m.at(j, i);
            for (int s = 0; s < n; ++s)
                if (a >> s & 1) f.flip(j, std::size_t(i) * n + s);
        }
    return f;
}

FreeModuleMap map_from_generator_rows(const Group& g, const F2Matrix& rows) {
    int n = g.order;
    if (rows.cols % n) throw std::invalid_argument("flattened width is not a multiple of |G|");
    FreeModuleMap m(int(rows.rows), int(rows.cols / n));
    for (int j = 0; j < m.source_rank; ++j)
        for (int i = 0; i < m.target_rank; ++i) {
            AlgebraElement a = 0;
            for (int s = 0; s < n; ++s)
                if (rows.get(j, std::size_t(i) * n + s)) a |= AlgebraElement(1) << s;
            m.at(j, i) = a;
        }
    return m;
}

void validate_resolution(const Resolution& r) {
    int nd = r.max_degree;
    if (nd < 0 || int(r.betti.size()) != nd + 1 || int(r.d.size()) != nd + 1 || r.betti[0] != 1)
        throw std::invalid_argument("resolution shape mismatch");
    for (int t = 1; t <= nd; ++t) {
        const FreeModuleMap& m = r.d[t];
        if (m.source_rank != r.betti[t] || m.target_rank != r.betti[t - 1])
            throw std::invalid_argument("differential rank mismatch");
        for (AlgebraElement a : m.blocks)
            if (augmentation(a))
                throw std::invalid_argument("differential entry outside the augmentation ideal");
    }
    // d o d vanishes on generator rows, hence as a module map
    for (int t = 2; t <= nd; ++t) {
        if (!r.betti[t]) continue;
        F2Matrix y = mul(generator_rows(r.group, r.d[t]), flatten(r.group, r.d[t - 1]));
        for (std::size_t i = 0; i < y.rows; ++i)
            if (!y.row_is_zero(i)) throw std::invalid_argument("d composed with d is nonzero");
    }
}

namespace {

SubspaceBasis subspace_from_rref(const F2Matrix& rows, std::size_t ambient) {
    SubspaceBasis s;
    s.ambient = ambient;
    s.basis = rows;
    s.pivots.reserve(rows.rows);
    for (std::size_t i = 0; i < rows.rows; ++i) {
        const word* p = rows.row(i);
        for (std::size_t k = 0; k < rows.wpr; ++k)
            if (p[k]) {
                s.pivots.push_back(std::uint32_t(k * 64 + std::countr_zero(p[k])));
                break;
            }
    }
    return s;
}

// Reduction-only echelon wrapper around an existing RREF basis.
EchelonForm reducer_for(const SubspaceBasis& k) {
    EchelonForm e;
    e.src_rows = k.basis.rows;
    e.src_cols = k.ambient;
    e.R = k.basis;
    e.pivots = k.pivots;
    e.has_transform = false;
    return e;
}

} // namespace

std::vector<F2Vec> minimal_generators(const Group& g, int rank, const SubspaceBasis& k) {
    std::size_t ambient = std::size_t(rank) * g.order;
    if (k.ambient != ambient) throw std::invalid_argument("subspace ambient dimension mismatch");
    std::size_t dim = k.dim();
    if (dim == 0) return {};

    // J*K = span of (s - 1)*kappa over algebra generators s and basis rows
    // kappa; generators suffice since (gh - 1)k = (g - 1)(hk) + (h - 1)k and
    // K is G-stable.
    auto gens = small_generating_set(g);
    F2Matrix jk(gens.size() * dim, ambient);
    for (std::size_t si = 0; si < gens.size(); ++si)
        for (std::size_t ki = 0; ki < dim; ++ki) {
            F2Vec row = act_flat(g, gens[si], k.basis.get_row(ki), rank);
            row.xor_in(k.basis.get_row(ki));
            jk.set_row(si * dim + ki, row);
        }

    // Rewrite J*K in K-coordinates; a nonzero residual is a G-stability failure.
    EchelonForm red = reducer_for(k);
    F2Matrix coords = red.reduce_rows(jk);
    for (std::size_t i = 0; i < jk.rows; ++i)
        if (!jk.row_is_zero(i))
            throw std::invalid_argument("subspace is not closed under the group action");

    // Rows of K at coordinates missing from the J*K pivot set project onto a
    // basis of K/(J*K).
    EchelonForm sub = echelonize(coords, false);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : sub.pivots) is_pivot[p] = true;
    std::vector<F2Vec> out;
    out.reserve(dim - sub.rank());
    for (std::size_t i = 0; i < dim; ++i)
        if (!is_pivot[i]) out.push_back(k.basis.get_row(i));
    return out;
}

ResolutionSolver::ResolutionSolver(Group g) {
    res_.group = std::move(g);
    res_.max_degree = 0;
    res_.betti = {1};
    res_.d.resize(1);
    flats_.resize(1);
    echs_.resize(1);
}

const EchelonForm& ResolutionSolver::ech0() {
    if (!ech0_) {
        F2Matrix aug(res_.group.order, 1);
        for (int x = 0; x < res_.group.order; ++x) aug.set(std::size_t(x), 0, true);
        ech0_ = echelonize(aug, true);
    }
    return *ech0_;
}

const F2Matrix& ResolutionSolver::flat(int t) {
    if (t < 1 || t > res_.max_degree) throw std::invalid_argument("degree out of range");
    if (!flats_[std::size_t(t)]) flats_[std::size_t(t)] = flatten(res_.group, res_.d[std::size_t(t)]);
    return *flats_[std::size_t(t)];
}

const EchelonForm& ResolutionSolver::ech(int t) {
    if (t < 1 || t > res_.max_degree) throw std::invalid_argument("degree out of range");
    if (!echs_[std::size_t(t)]) echs_[std::size_t(t)] = echelonize(flat(t), true);
    return *echs_[std::size_t(t)];
}

void ResolutionSolver::extend_to(int n) {
    if (n > res_.max_degree && res_.group.order > 64)
        throw std::invalid_argument("group order exceeds 64");
    for (int t = res_.max_degree + 1; t <= n; ++t) {
        const F2Matrix& kmat = (t == 1) ? ech0().K : ech(t - 1).K;
        SubspaceBasis kernel =
            subspace_from_rref(kmat, std::size_t(res_.betti[std::size_t(t) - 1]) * res_.group.order);
        std::vector<F2Vec> gens = minimal_generators(res_.group, res_.betti[std::size_t(t) - 1], kernel);

        F2Matrix rows(gens.size(), kernel.ambient);
        for (std::size_t i = 0; i < gens.size(); ++i) rows.set_row(i, gens[i]);
        FreeModuleMap d = map_from_generator_rows(res_.group, rows);
        for (AlgebraElement a : d.blocks)
            if (augmentation(a)) throw std::logic_error("minimal generator outside the radical");

        res_.betti.push_back(int(gens.size()));
        res_.d.push_back(std::move(d));
        res_.max_degree = t;
        flats_.emplace_back();
        echs_.emplace_back();
    }
}

void ResolutionSolver::adopt(Resolution r) {
    validate_resolution(r);
    if (r.group.id != res_.group.id || r.group.mul != res_.group.mul)
        throw std::invalid_argument("adopted resolution is for a different group");
    res_ = std::move(r);
    flats_.assign(std::size_t(res_.max_degree) + 1, std::nullopt);
    echs_.assign(std::size_t(res_.max_degree) + 1, std::nullopt);
    ech0_.reset();
}

Resolution minimal_resolution(const Group& g, int n) {
    ResolutionSolver s(g);
    s.extend_to(n);
    return s.res();
}

std::vector<FreeModuleMap> lift_chain_map(ResolutionSolver& solver, const F2Vec& u, int s,
                                          int upto) {
    const Resolution& r = solver.res();
    if (s < 0 || upto < 0 || s + upto > r.max_degree)
        throw std::invalid_argument("lift range outside the resolution");
    if (u.n != std::size_t(r.betti[std::size_t(s)]))
        throw std::invalid_argument("class coordinate length mismatch");

    std::vector<FreeModuleMap> f;
    f.reserve(std::size_t(upto) + 1);
    FreeModuleMap f0(r.betti[std::size_t(s)], 1);
    for (int j = 0; j < f0.source_rank; ++j)
        if (u.get(std::size_t(j))) f0.at(j, 0) = 1; // the identity of F2[G]
    f.push_back(std::move(f0));

    for (int i = 1; i <= upto; ++i) {
        F2Matrix rhs = mul(generator_rows(r.group, r.d[std::size_t(s + i)]),
                           flatten(r.group, f.back()));
        auto x = solver.ech(i).solve_rows(rhs);
        if (!x) throw std::logic_error("chain-map lift system unsolvable");
        f.push_back(map_from_generator_rows(r.group, *x));
    }
    return f;
}

namespace {

constexpr const char* kCacheFormat = "coh2-res";
constexpr int kCacheVersion = 1;

std::string hex_of(AlgebraElement a, int order) {
    int width = (order + 3) / 4;
    char buf[20];
    std::snprintf(buf, sizeof buf, "%0*llx", width, static_cast<unsigned long long>(a));
    return buf;
}

AlgebraElement hex_to_element(const std::string& s, int order) {
    if (s.empty() || s.size() > 16) throw std::runtime_error("bad block hex");
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw std::runtime_error("bad block hex");
    AlgebraElement mask = order == 64 ? ~AlgebraElement(0)
                                      : (AlgebraElement(1) << order) - 1;
    if (v & ~mask) throw std::runtime_error("block has coefficients outside the group");
    return v;
}

} // namespace

std::filesystem::path resolution_cache_file(const std::filesystem::path& dir,
                                            const std::string& group_id) {
    std::string safe;
    for (char c : group_id)
        safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return dir / (safe + "-res-v" + std::to_string(kCacheVersion) + ".json");
}

void save_resolution(const Resolution& r, const std::filesystem::path& file) {
    nlohmann::ordered_json j;
    j["format"] = kCacheFormat;
    j["version"] = kCacheVersion;
    j["group"] = r.group.id;
    j["order"] = r.group.order;
    j["max_degree"] = r.max_degree;
    j["betti"] = r.betti;
    auto& diffs = j["differentials"] = nlohmann::ordered_json::array();
    for (int t = 1; t <= r.max_degree; ++t) {
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (AlgebraElement a : r.d[std::size_t(t)].blocks)
            blocks.push_back(hex_of(a, r.group.order));
        diffs.push_back(std::move(blocks));
    }

    std::filesystem::path tmp = file;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump() << '\n';
        if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<Resolution> load_resolution(const std::filesystem::path& file,
                                          const Group& expected) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("format") != kCacheFormat || j.at("version") != kCacheVersion)
            throw std::runtime_error("cache format mismatch");
        if (j.at("group") != expected.id || j.at("order") != expected.order)
            throw std::runtime_error("cache is for a different group");
        Resolution r;
        r.group = expected;
        r.max_degree = j.at("max_degree").get<int>();
        r.betti = j.at("betti").get<std::vector<int>>();
        auto& diffs = j.at("differentials");
        if (r.max_degree < 0 || int(r.betti.size()) != r.max_degree + 1 ||
            int(diffs.size()) != r.max_degree)
            throw std::runtime_error("cache shape mismatch");
        r.d.resize(std::size_t(r.max_degree) + 1);
        for (int t = 1; t <= r.max_degree; ++t) {
            FreeModuleMap m(r.betti[std::size_t(t)], r.betti[std::size_t(t) - 1]);
            auto& blocks = diffs[std::size_t(t) - 1];
            if (blocks.size() != m.blocks.size()) throw std::runtime_error("cache block count mismatch");
            for (std::size_t i = 0; i < m.blocks.size(); ++i)
                m.blocks[i] = hex_to_element(blocks[i].get<std::string>(), expected.order);
            r.d[std::size_t(t)] = std::move(m);
        }
        validate_resolution(r);
        return r;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("cache file unreadable: ") + e.what());
    }
}

Resolution cached_minimal_resolution(const Group& g, int n,
                                     const std::optional<std::filesystem::path>& dir,
                                     std::string* cache_note) {
    auto note = [&](const std::string& s) {
        if (cache_note) *cache_note = s;
    };
    if (cache_note) cache_note->clear();
    if (!dir) {
        note("cache disabled");
        return minimal_resolution(g, n);
    }
    std::filesystem::path file = resolution_cache_file(*dir, g.id);
    std::optional<Resolution> loaded;
    try {
        loaded = load_resolution(file, g);
    } catch (const std::runtime_error& e) {
        note(std::string("cache discarded: ") + e.what());
        loaded.reset();
    }
    if (loaded && loaded->max_degree >= n) {
        note("cache hit (depth " + std::to_string(loaded->max_degree) + ")");
        return std::move(*loaded);
    }

    ResolutionSolver solver(g);
    if (loaded) {
        int had = loaded->max_degree;
        solver.adopt(std::move(*loaded));
        if (cache_note && cache_note->empty())
            note("cache extended from depth " + std::to_string(had));
    } else if (cache_note && cache_note->empty()) {
        note("cache miss");
    }
    solver.extend_to(n);
    try {
        std::filesystem::create_directories(*dir);
        save_resolution(solver.res(), file);
    } catch (const std::exception& e) {
        note(std::string("cache write failed: ") + e.what());
    }
    return solver.res();
}

} // namespace coh2
