#pragma once

#include "mackeyss/homalg.hpp"
#include "mackeyss/mackey.hpp"
#include "mackeyss/reps.hpp"

#include <map>
#include <string>
#include <vector>

namespace mss {

// Product coefficient * [u^-] a_A u_U * monomial, with A and U kept as
// representations so that a_V a_W = a_{V+W} and u_V u_W = u_{V+W} hold by
// construction. For a twisted label A and U live on the index two subgroup.
struct GeneratorLabel {
    Integer coefficient{1};
    RepSum a, u;
    bool twisted = false;
    std::string monomial;  // norm classes, restrictions and the like

    std::string str() const;
    friend bool operator==(const GeneratorLabel& x, const GeneratorLabel& y);
    friend bool operator<(const GeneratorLabel& x, const GeneratorLabel& y);
};

// a_{2σ} u_{λ'} -> 2 a_{λ'} u_{2σ} when both factors are present.
GeneratorLabel gold_rewrite(const GeneratorLabel& x);

struct HomologyEntry {
    MackeyFunctor functor;
    GeneratorLabel label;
    std::string name;  // base name used by the extension machinery: "Z", "B(2,1)", "Z^-", ...
};

// Nonzero homology only; degree -> summands.
using HomologyTable = std::map<int, std::vector<HomologyEntry>>;

// H_*(S^W; Z) from the decompositions of W. Trivial summands shift degrees.
HomologyTable homology_closed_form(const RepSum& w);

// Reduced cellular chains of a based G-CW complex: cells[d] is the G-set of
// d-cells, boundary[d] the matrix Z[cells[d]] -> Z[cells[d-1]] (boundary[0] is
// unused).
struct CellComplex {
    int n = 0;
    std::vector<PermutationSet> cells;
    std::vector<IntMatrix> boundary;

    int top() const { return static_cast<int>(cells.size()) - 1; }
    // d^2 = 0 and gamma-equivariance of every boundary.
    std::vector<std::string> check() const;
};

// S^{count σ}, S^{count λ(2^l)} and S^{count} with their periodic cell structures.
CellComplex sigma_cells(int n, int count);
CellComplex lambda_cells(int n, int l, int count);
CellComplex trivial_cells(int n, int count);
// Smash product with the diagonal action.
CellComplex smash(const CellComplex& x, const CellComplex& y);
// One block per isotypic summand of W, smashed together.
CellComplex sphere_cells(const RepSum& w);
// Homology of the chain complex of fixed point functors, one functor per degree.
std::vector<MackeyFunctor> cellular_homology(const CellComplex& c);

// Independent computation through sphere_cells; each entry is labelled by its
// degree only.
HomologyTable homology_cellular_oracle(const RepSum& w);

// Direct sum of the entries in one degree (zero functor when absent).
MackeyFunctor degree_functor(const HomologyTable& t, int degree, int n);
// Degrees where the two tables are not isomorphic, with a description.
std::vector<std::string> compare_tables(const HomologyTable& a, const HomologyTable& b, int n);

// Orbit C_{2^n}/C_{2^k} of slice cells of dimension m rho_k.
struct SliceCell {
    int k = 0;
    int m = 1;
};

struct SliceTerm {
    int stem = 0, s = 0, t = 0;
    InducedFunctor functor;  // induced from level k
    GeneratorLabel label;
};

// Ind_k H_*(S^{m rho_k}) at t = m 2^k, s = t - degree.
std::vector<SliceTerm> slice_homotopy(const SliceCell& cell, int n);

}  // namespace mss
