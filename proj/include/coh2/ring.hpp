#pragma once
// The graded ring H^*(G;F2) read off a minimal resolution: by minimality the
// dual basis of the degree-t generators IS a basis of H^t, so classes are
// plain coordinate vectors. Cup products come from chain-map lifts of ring
// generators plus decomposition of everything else; restriction and
// conjugation come from lifts along a subgroup's resolution into the big
// complex viewed over the subgroup algebra.

#include "coh2/f2la.hpp"
#include "coh2/groups.hpp"
#include "coh2/resolve.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coh2 {

struct CohomClass {
    std::string group_id;
    int degree = 0;
    F2Vec coordinates; // length dim H^degree

    bool is_zero() const { return coordinates.is_zero(); }
    bool operator==(const CohomClass&) const = default;
};

struct RingTable {
    std::string group_id;
    int max_degree = 0;
    std::vector<int> dims;                    // dims[t] = dim H^t, t <= max_degree
    std::vector<std::vector<int>> generators; // generators[s]: basis indices that are
                                              // ring generators (basis of H^s mod decomposables)

    // product(s, t) for s, t >= 1 with s + t <= max_degree: row m*dims[t] + k
    // holds the coordinates of (basis m of H^s) * (basis k of H^t).
    const F2Matrix& product(int s, int t) const { return products_.at(pair_index(s, t)); }

    int generator_count() const;
    std::size_t pair_index(int s, int t) const;
    std::vector<F2Matrix> products_;
};

CohomClass unit_class(const RingTable& tab);
CohomClass zero_class(const RingTable& tab, int degree);
CohomClass basis_class(const RingTable& tab, int degree, int index);
// Bilinear extension of the table; degree-0 factors act as scalars.
// Throws std::invalid_argument on mismatched group ids or total degree > N.
CohomClass cup(const RingTable& tab, const CohomClass& u, const CohomClass& v);
CohomClass add(const CohomClass& u, const CohomClass& v);
// u^(2^e) by e repeated squarings; additive in u over F2.
CohomClass frobenius_power(const RingTable& tab, const CohomClass& u, int e);

// A degreewise map phi: H^*(source) -> H^*(target) (for restrictions the
// source is the BIG group). degree[t] has dim H^t(target) rows and
// dim H^t(source) columns; apply is matrix-times-coordinates.
struct GradedRingMap {
    std::string source_id, target_id;
    int max_degree = 0;
    std::vector<F2Matrix> degree;

    F2Vec apply(const F2Vec& u, int t) const { return mul_mat_vec(degree[std::size_t(t)], u); }
    CohomClass apply(const CohomClass& u) const {
        return {target_id, u.degree, apply(u.coordinates, u.degree)};
    }
};

// first: A -> B, then second: B -> C, composite A -> C.
GradedRingMap compose_maps(const GradedRingMap& first, const GradedRingMap& second);

// Everything the artifact knows about one group's cohomology: the resolution
// solver, the multiplication table, ring generators with their chain-lift
// multiplication matrices, and the degree-1 character dictionary.
class GroupCohomology {
public:
    // cache_dir feeds the resolution disk cache (catalog groups only).
    GroupCohomology(Group g, int n, const std::optional<std::filesystem::path>& cache_dir,
                    std::string* cache_note = nullptr);

    const Group& group() const { return solver_.group(); }
    int max_degree() const { return n_; }
    int dim(int t) const { return t <= n_ ? table_.dims[std::size_t(t)] : 0; }
    const RingTable& table() const { return table_; }
    ResolutionSolver& solver() { return solver_; }
    const Resolution& res() const { return solver_.res(); }

    // For the ring generator with global index gi: the matrix of
    // "multiply by that generator" from H^i to H^(deg+i), and its transpose.
    struct GenInfo {
        int degree = 0;
        int index = 0; // basis index within its degree
        std::vector<F2Matrix> mul_by;   // mul_by[i]: dims[deg+i] x dims[i]
        std::vector<F2Matrix> mul_by_t; // transposes
    };
    const std::vector<GenInfo>& gens() const { return gens_; }

    // Row j = the homomorphism G -> F2 identified with the degree-1 dual
    // basis vector e_j: chi_j(x) = coordinate of (x - 1) at the j-th minimal
    // generator of the augmentation ideal, modulo its square.
    const F2Matrix& degree1_characters();

private:
    void build_table();
    void build_degree(int s);
    void build_products(int s, int t);

    int n_;
    ResolutionSolver solver_;
    RingTable table_;
    std::vector<GenInfo> gens_;

    // Per degree s: the decomposable subspace of H^s spanned by
    // (earlier generator) * (lower-degree basis) rows, echelonized with
    // transform for decompositions.
    struct DegreeDecomp {
        std::vector<std::pair<int, int>> rows_meta; // (generator index, basis index)
        EchelonForm ech;
        std::vector<int> gen_of_basis; // basis index -> gens_ index, or -1
        std::vector<int> pivot_row;    // basis index -> row of ech.R, or -1
    };
    std::vector<DegreeDecomp> dec_;

    std::optional<F2Matrix> chars_;
};

// Handles keyed by group id, so each subgroup model is resolved exactly once
// per run. All handles share one truncation degree. Not thread-safe; build
// one store per worker.
class CohomologyStore {
public:
    explicit CohomologyStore(int n,
                             std::optional<std::filesystem::path> cache_dir = std::nullopt);

    int max_degree() const { return n_; }
    GroupCohomology& of(const Group& g);
    // The abstract model of a subgroup: rebuilt on its own multiplication
    // table (sorted-element relabeling). The whole group maps to of(parent).
    GroupCohomology& of_subgroup(const Group& parent, const Subgroup& s);

    // The map H^*(outer) -> H^*(inner) induced by the injective homomorphism
    // alpha: inner -> outer (alpha[i] = image of inner's element i), computed
    // by lifting inner's resolution into outer's complex restricted along
    // alpha. Results are memoized. Throws std::invalid_argument unless alpha
    // is an injective homomorphism.
    const GradedRingMap& induced_map(GroupCohomology& outer, GroupCohomology& inner,
                                     const std::vector<int>& alpha);

    // Restriction H^*(big) -> H^*(sub model).
    const GradedRingMap& restriction(const Group& big, const Subgroup& sub);
    // The isomorphism H^*(model of x.sub.x^-1) -> H^*(model of sub) induced
    // by s |-> x s x^-1.
    const GradedRingMap& conjugation_map(const Group& g, const Subgroup& sub, int x);

    const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
    // "id: note" lines for resolutions loaded or written through the disk cache.
    const std::vector<std::string>& cache_notes() const { return cache_notes_; }

private:
    int n_;
    std::optional<std::filesystem::path> cache_dir_;
    std::map<std::string, std::unique_ptr<GroupCohomology>> handles_;
    std::map<std::string, GradedRingMap> induced_cache_;
    std::vector<std::string> cache_notes_;
};

// Convenience one-shot forms (fresh store, no disk cache).
RingTable ring_table(const Group& g, int n);
GradedRingMap restriction(const Group& big, const Subgroup& sub, int n);
GradedRingMap conjugation_map(const Group& g, const Subgroup& sub, int x, int n);

} // namespace coh2
