#pragma once
// 2-groups of order <= 64 as explicit multiplication tables, the catalog of
// all 2-groups of order <= 16, and subgroup-lattice utilities. Element 0 is
// always the identity; element orderings are fixed by the constructors so
// every downstream basis is reproducible.

#include "coh2/f2la.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coh2 {

struct Group {
    std::string id;
    int order = 1;
    std::vector<std::vector<int>> mul; // mul[a][b] = a*b
    std::vector<int> inv;

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int x, int a) const { return mul[mul[x][a]][inv[x]]; } // x a x^-1
};

struct Subgroup {
    std::vector<int> elements; // sorted, includes 0
    std::optional<int> rank_if_elementary_abelian;

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int x : elements) m |= std::uint64_t(1) << x;
        return m;
    }
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

struct GroupSpec {
    enum class Kind { cyclic, direct_product, semidirect, dicyclic, central_product, table };
    Kind kind = Kind::cyclic;
    int n = 1;               // cyclic order
    int m = 0, k = 0, e = 0; // semidirect C_m x| C_k with a -> a^e; dicyclic uses m
    std::vector<GroupSpec> factors;         // direct_product, central_product (two)
    int ident_a = -1, ident_b = -1;         // central_product: generator of the identified C2
    std::vector<std::vector<int>> table;    // explicit

    std::string describe() const;
};

// Constructs the table, checks identity/associativity/inverses exhaustively.
// Throws std::invalid_argument on bad parameters (exponent not invertible,
// non-central identification, order > 64).
Group build_group(const GroupSpec& spec, const std::string& id);

// Every subgroup, sorted by size then lexicographically by element list.
std::vector<Subgroup> subgroups(const Group& g);

// All H with every non-identity element of order 2 and H abelian, including
// the trivial subgroup; each carries its rank. Same ordering as subgroups().
std::vector<Subgroup> elementary_abelian_subgroups(const Group& g);

Subgroup conjugate_subgroup(const Group& g, const Subgroup& s, int x);

// Closure of a generating set.
Subgroup generated_subgroup(const Group& g, const std::vector<int>& gens);

int element_order(const Group& g, int x);
// order -> count over all elements
std::map<int, int> order_census(const Group& g);
std::vector<int> center_elements(const Group& g);
std::vector<int> derived_subgroup_elements(const Group& g);

// Minimal generating sequence, least elements first: the i-th entry is the
// least element outside <earlier entries> * Phi(g), so the length is
// dim g/Phi(g) (Burnside basis).
std::vector<int> small_generating_set(const Group& g);

// The subgroup relabeled as a group in its own right: element i of the result
// is elements[i] of the parent (elements are sorted, so the relabeling is the
// unique monotone one).
Group rebuilt_subgroup(const Group& g, const Subgroup& s);

// Quotient by a normal subgroup; elements are cosets ordered by least
// representative. Throws if n is not normal.
Group quotient_group(const Group& g, const Subgroup& n);

// Deterministic isomorphism a -> b if one exists: images of a's least
// generating sequence are chosen minimal in b's element order, backtracking.
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);

// Basis of Hom(G, F2) as rows of characters (row r, column x = chi_r(x)),
// canonical via kernel_basis of the homomorphism constraints.
F2Matrix characters(const Group& g);

struct CatalogEntry {
    std::string id;
    GroupSpec spec;
    int order;
};

// All 2-groups of order <= 16, one per isomorphism class, in order of
// appearance: e, C2, the two of order 4, the five of order 8, the fourteen
// of order 16.
const std::vector<CatalogEntry>& catalog();
const Group& catalog_group(const std::string& id); // cached; throws on unknown id
std::vector<std::string> catalog_ids();

} // namespace coh2
