#pragma once

#include "mackeyss/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mss {

// Mackey functor for C_{2^n} as a Lewis diagram. level[k] is the value on
// C_{2^n}/C_{2^k}; res[k] and tr[k] connect levels k+1 and k; weyl[k] is the
// action of the chosen generator gamma on level k.
struct MackeyFunctor {
    int n = 0;
    std::vector<FGAbGroup> level;
    std::vector<GroupHom> res;   // level[k+1] -> level[k]
    std::vector<GroupHom> tr;    // level[k] -> level[k+1]
    std::vector<GroupHom> weyl;  // level[k] -> level[k]

    static MackeyFunctor zero(int n);
    bool is_zero() const;
    Integer order(int k) const { return level[k].order(); }

    friend bool operator==(const MackeyFunctor& a, const MackeyFunctor& b);
    friend bool operator!=(const MackeyFunctor& a, const MackeyFunctor& b) { return !(a == b); }
};

// Natural transformation, one component per level.
struct MackeyHom {
    std::vector<GroupHom> component;

    static MackeyHom identity(const MackeyFunctor& m);
    static MackeyHom zero(const MackeyFunctor& s, const MackeyFunctor& t);
    bool is_zero() const;
    bool is_iso() const;
    friend MackeyHom operator*(const MackeyHom& g, const MackeyHom& f);  // g after f
    friend MackeyHom operator+(const MackeyHom& a, const MackeyHom& b);
    friend MackeyHom operator-(const MackeyHom& a, const MackeyHom& b);
    friend bool operator==(const MackeyHom& a, const MackeyHom& b) { return a.component == b.component; }
};

// Violated axioms, empty when M is a Mackey functor (and a Z-module when
// cohomological is set).
std::vector<std::string> validate(const MackeyFunctor& m, bool cohomological = true);
std::vector<std::string> validate_hom(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f);

// Named functors. B(j, k) has Z/2^{min(j, i-k)} at levels i > k, res 1 and tr 2;
// Bstar(k) has Z/2 at levels above k, res 0 and tr 1; Zstar is Z with res 2, tr 1.
MackeyFunctor make_Z(int n);
MackeyFunctor make_Zstar(int n);
MackeyFunctor make_B(int j, int k, int n);
MackeyFunctor make_Bstar(int k, int n);
// "Z", "Z*", "B(j,k)", "Bstar(1,k)" (also "B*(1,k)").
MackeyFunctor make_named(const std::string& name, int n);

MackeyFunctor induce(const MackeyFunctor& m, int n);
MackeyHom induce(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f, int n);
MackeyFunctor restrict(const MackeyFunctor& m, int k);
// Pullback along C_{2^n} -> C_{2^n}/C_{2^j} of a functor for the quotient.
MackeyFunctor inflate(const MackeyFunctor& m, int j, int n);
// Image of 1 - gamma on the induction of m from index 2. Requires trivial Weyl action.
MackeyFunctor signed_induce(const MackeyFunctor& m);

struct MackeySum {
    MackeyFunctor functor;
    std::vector<MackeyHom> inclusion, projection;
};
MackeySum direct_sum(const std::vector<MackeyFunctor>& parts);
MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);

struct SubFunctor {
    MackeyFunctor functor;
    MackeyHom inclusion;
};
struct QuotientFunctor {
    MackeyFunctor functor;
    MackeyHom projection;
};

SubFunctor kernel(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f);
SubFunctor image(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f);
QuotientFunctor cokernel(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f);
// ker g / im f for A -f-> B -g-> C.
MackeyFunctor homology(const MackeyFunctor& b, const MackeyHom& f, const MackeyHom& g);
// Smallest subfunctor containing the given elements (per level, ambient coordinates).
SubFunctor generated_subfunctor(const MackeyFunctor& m, const std::vector<std::vector<IntVector>>& gens);
QuotientFunctor quotient(const MackeyFunctor& m, const std::vector<std::vector<IntVector>>& gens);
bool is_ses(const MackeyHom& f, const MackeyHom& g);

// Hom(M, N) as the kernel of the commuting-square conditions.
class MackeyHomGroup {
public:
    MackeyHomGroup(const MackeyFunctor& s, const MackeyFunctor& t);

    const FGAbGroup& group() const { return quotient_->group(); }
    std::vector<MackeyHom> basis() const;
    MackeyHom element(const IntVector& coords) const;
    IntVector coords(const MackeyHom& f) const;

private:
    std::vector<FGAbGroup> src_, dst_;
    std::vector<HomGroup> levels_;
    std::vector<std::size_t> offset_;
    std::optional<LatticeQuotient> quotient_;
};

FGAbGroup hom_mackey(const MackeyFunctor& s, const MackeyFunctor& t);

// An isomorphism s -> t if one is found. A finite Hom group is searched
// exhaustively up to a size limit; otherwise small combinations of the basis
// are tried, so a negative answer there is not a proof.
std::optional<MackeyHom> find_isomorphism(const MackeyFunctor& s, const MackeyFunctor& t);
bool isomorphic(const MackeyFunctor& s, const MackeyFunctor& t);

// Finite G-set given by the permutation gamma, with orbits of every C_{2^k}.
class PermutationSet {
public:
    PermutationSet(int n, std::vector<std::size_t> gamma);

    int n() const { return n_; }
    std::size_t size() const { return gamma_.size(); }
    const std::vector<std::size_t>& gamma() const { return gamma_; }
    std::size_t orbit_count(int k) const { return orbits_[k].size(); }
    std::size_t orbit_of(int k, std::size_t x) const { return orbit_index_[k][x]; }
    const std::vector<std::size_t>& orbit(int k, std::size_t o) const { return orbits_[k][o]; }

private:
    int n_;
    std::vector<std::size_t> gamma_;
    std::vector<std::vector<std::vector<std::size_t>>> orbits_;
    std::vector<std::vector<std::size_t>> orbit_index_;
};

// Fixed point functor of the permutation module (Z/modulus)[X] (modulus 0 for Z)
// in the basis of orbit sums.
MackeyFunctor fixed_point_functor(const PermutationSet& x, const Integer& modulus = 0);
// Components on orbit sums of an equivariant map Z[X] -> Z[Y] given as a matrix.
IntMatrix fixed_point_matrix(const PermutationSet& x, const PermutationSet& y, const IntMatrix& d, int k);

// ASCII Lewis diagram, top level first.
std::string lewis_diagram(const MackeyFunctor& m);
// One line summary, e.g. "Z/4 | Z/2 | 0" from the top level down.
std::string level_summary(const MackeyFunctor& m);

}  // namespace mss
