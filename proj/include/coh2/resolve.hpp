#pragma once
// Minimal free resolutions of the trivial module F2 over F2[G] for a
// 2-group G, chain-map lifts along them, and the on-disk resolution cache.
//
// Module elements are row vectors: a free module F2[G]^r flattens to F2
// coordinates (generator j, group element x) -> j*|G| + x, and a module map
// acts on the right of flattened rows. All kernels, lifts, and minimal
// generators below are phrased in these coordinates.

#include "coh2/f2la.hpp"
#include "coh2/groups.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace coh2 {

// An element of F2[G], |G| <= 64: bit x is the coefficient of group element x.
using AlgebraElement = std::uint64_t;

AlgebraElement algebra_mul(const Group& g, AlgebraElement a, AlgebraElement b);
int augmentation(AlgebraElement a); // coefficient sum in F2

// Left action of the group element x (resp. the algebra element a) on the
// flattened coordinates of F2[G]^rank.
F2Vec act_flat(const Group& g, int x, const F2Vec& v, int rank);
F2Vec algebra_act_flat(const Group& g, AlgebraElement a, const F2Vec& v, int rank);

// Map of free left F2[G]-modules: source generator j goes to
// sum_i blocks[j][i] * (target generator i).
struct FreeModuleMap {
    int source_rank = 0, target_rank = 0;
    std::vector<AlgebraElement> blocks; // row-major, source index slow

    FreeModuleMap() = default;
    FreeModuleMap(int src, int dst)
        : source_rank(src), target_rank(dst),
          blocks(std::size_t(src) * std::size_t(dst), 0) {}

    AlgebraElement& at(int j, int i) { return blocks[std::size_t(j) * target_rank + i]; }
    AlgebraElement at(int j, int i) const { return blocks[std::size_t(j) * target_rank + i]; }
};

// Composite "first, then second"; defined when ranks match.
FreeModuleMap compose(const Group& g, const FreeModuleMap& first, const FreeModuleMap& second);

// The induced F2-matrix of size (source_rank*|G|) x (target_rank*|G|).
F2Matrix flatten(const Group& g, const FreeModuleMap& m);
// Only the rows (j, identity): source_rank x (target_rank*|G|). Flattened
// module maps are determined by these rows through the left action.
F2Matrix generator_rows(const Group& g, const FreeModuleMap& m);
// Inverse of the row slicing: read a map off its generator rows.
FreeModuleMap map_from_generator_rows(const Group& g, const F2Matrix& rows);

struct Resolution {
    Group group;
    int max_degree = 0;
    std::vector<int> betti;       // betti[t] = rank of P_t, 0 <= t <= max_degree
    std::vector<FreeModuleMap> d; // d[t]: P_t -> P_{t-1} for t >= 1; d[0] unused
    // The augmentation P_0 -> F2 is the coefficient sum on the single
    // degree-0 generator; betti[0] == 1 always.
};

// Throws std::invalid_argument unless: betti/d shapes are consistent,
// betti[0] == 1, every block lies in the augmentation ideal (minimality),
// and d_t of d_{t+1} is zero on generator rows (hence everywhere).
void validate_resolution(const Resolution& r);

// Minimal generators of a G-stable subspace K of the flattened F2[G]^rank,
// per Nakayama: rows of K projecting to a basis of K/(J*K), J the
// augmentation ideal. Deterministic: J*K is reduced into K-coordinates and
// the returned rows are the canonical-basis rows of K at the non-pivot
// coordinates. Throws std::invalid_argument if K is not G-stable.
std::vector<F2Vec> minimal_generators(const Group& g, int rank, const SubspaceBasis& k);

// Owns a resolution plus the echelon forms of its flattened differentials.
// The same echelons drive the minimal-resolution loop and every chain-map
// lift, so they are built once per degree and kept. Not thread-safe; use one
// solver per group and parallelize across groups.
class ResolutionSolver {
public:
    explicit ResolutionSolver(Group g);

    const Resolution& res() const { return res_; }
    const Group& group() const { return res_.group; }
    int max_degree() const { return res_.max_degree; }
    int betti(int t) const { return res_.betti[std::size_t(t)]; }

    // Extends the resolution through degree n (no-op if already there).
    void extend_to(int n);

    // Replaces the resolution with a precomputed (e.g. cached) one; validates.
    void adopt(Resolution r);

    // Flattened d_t and its echelon form (with transform), 1 <= t <= max_degree.
    const F2Matrix& flat(int t);
    const EchelonForm& ech(int t);

private:
    Resolution res_;
    std::vector<std::optional<F2Matrix>> flats_;
    std::vector<std::optional<EchelonForm>> echs_;

    const EchelonForm& ech0(); // echelon of the augmentation column
    std::optional<EchelonForm> ech0_;
};

// The resolution of g through degree n (runs the solver and discards it).
Resolution minimal_resolution(const Group& g, int n);

// Chain-map lift of a degree-s class u (coordinates in the dual basis of
// P_s generators): returns f[0..upto] with f[i]: P_{s+i} -> P_i, where f[0]
// is the constant section with augmentation u and d o f[i] = f[i-1] o d.
// Requires s + upto <= max_degree. Throws std::logic_error if a lift system
// is unsolvable (breaks the exactness precondition).
std::vector<FreeModuleMap> lift_chain_map(ResolutionSolver& solver, const F2Vec& u, int s,
                                          int upto);

// On-disk cache: one JSON file per group id (format-versioned name), betti
// numbers plus differential blocks hex-encoded, written atomically. A file
// holding a deeper resolution than requested is a hit; a shallower one is
// extended and rewritten.
std::filesystem::path resolution_cache_file(const std::filesystem::path& dir,
                                            const std::string& group_id);
void save_resolution(const Resolution& r, const std::filesystem::path& file);
// nullopt when the file is missing; throws std::runtime_error on a present
// but unreadable/mismatched file (corruption is the caller's signal to warn
// and recompute).
std::optional<Resolution> load_resolution(const std::filesystem::path& file,
                                          const Group& expected);

// minimal_resolution with read-through cache; dir == nullopt disables it.
// Corrupt cache entries are discarded and recomputed.
Resolution cached_minimal_resolution(const Group& g, int n,
                                     const std::optional<std::filesystem::path>& dir,
                                     std::string* cache_note = nullptr);

} // namespace coh2
