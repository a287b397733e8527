#pragma once
// The elementary-abelian family inside the orbit category, diagrams of
// cohomology rings over it, and their limits: the equalizer lim^0, the edge
// map from H^*(G) with its kernel ideal, nilpotence and power-in-image
// verdicts, and higher limits lim^s from a normalized cosimplicial (cobar)
// replacement.

#include "coh2/f2la.hpp"
#include "coh2/groups.hpp"
#include "coh2/ring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh2 {

// A morphism H -> K of the family category: the coset (rep)K, stored by its
// least representative, subject to rep^-1 H rep <= K. Composition of
// (a)K: H -> K and (b)L: K -> L is (ab)L: H -> L.
struct FamilyMorphism {
    int source = 0, target = 0; // object indices
    int rep = 0;                // least element of the coset

    bool operator==(const FamilyMorphism&) const = default;
};

struct FamilyCategory {
    std::string group_id;
    std::vector<Subgroup> objects; // all elementary abelian subgroups, catalog order
    std::vector<FamilyMorphism> morphisms;
    // hom[h][k]: indices into morphisms, ascending by coset representative
    std::vector<std::vector<std::vector<int>>> hom;
    std::vector<int> identity;          // identity[obj] = morphism index of (e)obj
    std::vector<std::vector<int>> comp; // comp[f][g] = index of (g after f), -1 if types clash

    int object_count() const { return int(objects.size()); }
    int morphism_count() const { return int(morphisms.size()); }
    bool is_identity(int m) const {
        return morphisms[std::size_t(m)].rep == 0 &&
               morphisms[std::size_t(m)].source == morphisms[std::size_t(m)].target;
    }
    int compose(int f, int g) const; // throws unless target(f) == source(g)
};

// Objects, morphism sets by the fixed-coset criterion, and the composition
// table (verified associative and unital at build time).
FamilyCategory family_category(const Group& g);

// One degree of the diagram: contravariant values H^t(H) per object and one
// matrix H^t(target) -> H^t(source) per morphism (column convention).
struct CoefficientSystem {
    std::shared_ptr<const FamilyCategory> category;
    int degree = 0;
    std::vector<int> value_dims;
    std::vector<F2Matrix> matrices; // parallel to category->morphisms
};

// The full diagram of a group over its family category: per-morphism graded
// ring maps assembled as (restriction to rep^-1 H rep) followed by the
// conjugation isomorphism, all resolved through the shared store. One
// instance per group; not thread-safe.
class FamilyDiagram {
public:
    FamilyDiagram(CohomologyStore& store, Group g);

    const Group& group() const { return g_; }
    CohomologyStore& store() { return *store_; }
    const FamilyCategory& category() const { return *cat_; }
    int max_degree() const { return store_->max_degree(); }

    GroupCohomology& model(int obj);                  // the object's abstract group model
    const GradedRingMap& restriction_to(int obj);     // res: H^*(G) -> H^*(object)
    const GradedRingMap& morphism_map(int m);         // assembled composite route
    GradedRingMap morphism_map_direct(int m);         // one-homomorphism route (for cross-checks)

    // Slice of degree t, with identity and functoriality checks; throws
    // std::logic_error on violation (signals an upstream bug).
    CoefficientSystem coefficient_system(int t);

private:
    CohomologyStore* store_;
    Group g_;
    std::shared_ptr<FamilyCategory> cat_;
    std::vector<std::optional<GradedRingMap>> maps_;
};

// Canonical basis of {(x_H) : M(phi) x_K = x_H for every morphism phi},
// inside the direct sum ordered by object (offsets = partial sums of dims).
SubspaceBasis limit0(const CoefficientSystem& cs);

struct EdgeMap {
    int degree = 0;
    std::vector<int> offsets;  // object -> first coordinate in the direct sum
    std::size_t sum_dim = 0;   // dim of the direct sum
    F2Matrix full;             // sum_dim x dim H^t(G), stacked restrictions
    SubspaceBasis limit;       // limit0 of the degree-t system
    F2Matrix in_limit_coords;  // dim lim^0 x dim H^t(G)
    SubspaceBasis kernel;      // subspace of H^t(G): the degree-t kernel ideal
};

// The comparison map H^t(G) -> lim^0; its image is verified to land in the
// equalizer (std::logic_error otherwise).
EdgeMap edge_map(FamilyDiagram& diagram, int t);

struct NilpotenceWitness {
    int k = 0, max_degree = 0;
    bool verdict = false;
    // stage_dims[i-1][d] = dim of the i-th power subspace in degree d, i <= k
    std::vector<std::vector<std::size_t>> stage_dims;
};

// True iff every product of k homogeneous kernel-ideal elements of total
// degree <= n vanishes: iterates K^(i+1)_d = span of (kernel basis) * K^(i).
// Throws std::invalid_argument if k < 1 or k > n.
NilpotenceWitness nilpotence_check(FamilyDiagram& diagram, int k, int n);

struct PowerWitness {
    int e = 0, max_degree = 0;
    bool verdict = false;
    std::vector<int> degrees_checked;   // every t with t*2^e <= max_degree
    std::vector<bool> degree_passed;
};

// True iff for every degree t with t*2^e <= n, every canonical basis vector
// of lim^0 in degree t has its componentwise 2^e-th power inside the image
// of the degree t*2^e edge map. Frobenius additivity (which upgrades the
// basis check to every element) is re-verified on random elements first.
// Throws std::invalid_argument unless 2^e <= n.
PowerWitness power_in_image_check(FamilyDiagram& diagram, int e, int n);

struct LimitsBudget {
    std::size_t max_cochain_dim = 10'000'000;          // per cochain level
    std::size_t max_matrix_bits = std::size_t(1) << 28; // per differential
};

// Raised when a cobar level would exceed the budget; `level` names the
// offending cochain degree.
struct BudgetExceeded : std::runtime_error {
    int level;
    std::size_t attempted;
    BudgetExceeded(int level_, std::size_t attempted_, const std::string& what_)
        : std::runtime_error(what_), level(level_), attempted(attempted_) {}
};

struct HigherLimits {
    int s_max = 0;
    std::vector<std::size_t> dims;         // dims[s] = dim lim^s, s <= s_max
    std::vector<std::size_t> cochain_dims; // dim of the normalized level s <= s_max+1
};

// Cohomology of the normalized cosimplicial replacement: level-s cochains
// are tuples over composable strings of s non-identity morphisms
// H_0 -> ... -> H_s with values in the system at H_0. Requires s_max <= 6.
// Throws BudgetExceeded per the budget, std::invalid_argument on bad s_max.
HigherLimits higher_limits(const CoefficientSystem& cs, int s_max,
                           const LimitsBudget& budget = {});

// Everything the `quillen` report needs for one group, degree by degree.
struct LimitReport {
    std::string group_id;
    int max_degree = 0;
    std::vector<int> h_dims;       // dim H^t(G)
    std::vector<int> lim0_dims;
    std::vector<int> kernel_dims;  // dim ker(edge) per degree
    std::vector<F2Matrix> edge;    // in lim^0 coordinates per degree
    NilpotenceWitness nilpotence;
    PowerWitness power;
    // higher limits of the degree-t system; empty optional = budget skip
    int s_max = 0;
    std::vector<std::optional<HigherLimits>> e2;
    std::vector<std::string> skip_notes; // one per skipped degree, "t=..: .."
};

LimitReport limit_report(FamilyDiagram& diagram, int n, int k, int e, int s_max,
                         const LimitsBudget& budget = {});

} // namespace coh2
