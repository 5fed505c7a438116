#pragma once

#include "mackeyss/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mss {

struct MalformedHom : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finitely generated abelian group Z/d1 + ... + Z/dt + Z^r with d1 | d2 | ... | dt, di >= 2.
// Elements are coordinate vectors: torsion coordinates first, then free ones.
class FGAbGroup {
public:
    FGAbGroup() = default;
    FGAbGroup(std::size_t free_rank, IntVector torsion);

    static FGAbGroup zero() { return {}; }
    static FGAbGroup integers(std::size_t r = 1) { return FGAbGroup(r, {}); }
    static FGAbGroup cyclic(const Integer& d);
    // Canonical form of an arbitrary direct sum of cyclic groups (order 0 means Z).
    static FGAbGroup from_orders(const IntVector& orders);

    std::size_t free_rank() const { return free_; }
    const IntVector& torsion() const { return torsion_; }
    std::size_t ngens() const { return torsion_.size() + free_; }
    bool is_zero() const { return ngens() == 0; }
    bool is_finite() const { return free_ == 0; }
    // Order of generator i; 0 for a free generator.
    Integer gen_order(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Integer(0); }
    // Group order; 0 when infinite.
    Integer order() const;
    // Largest torsion invariant factor (1 for a torsion-free group).
    Integer exponent() const;

    IntVector reduce(IntVector v) const;
    bool is_zero_element(const IntVector& v) const;
    // Relation lattice as columns: di * e_i for torsion coordinates.
    IntMatrix relations() const;

    std::string str() const;
    friend bool operator==(const FGAbGroup& a, const FGAbGroup& b) { return a.free_ == b.free_ && a.torsion_ == b.torsion_; }
    friend bool operator!=(const FGAbGroup& a, const FGAbGroup& b) { return !(a == b); }

private:
    std::size_t free_ = 0;
    IntVector torsion_;
};

FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b);

// Homomorphism given by the images of the source generators (one column each).
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix);

    static GroupHom zero(const FGAbGroup& s, const FGAbGroup& t);
    static GroupHom identity(const FGAbGroup& g);
    static GroupHom scalar(const FGAbGroup& g, const Integer& k);

    const FGAbGroup& source() const { return source_; }
    const FGAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& v) const { return target_.reduce(matrix_.apply(v)); }
    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_iso() const { return is_injective() && is_surjective(); }

    friend GroupHom operator*(const GroupHom& g, const GroupHom& f);  // g after f
    friend GroupHom operator+(const GroupHom& a, const GroupHom& b);
    friend GroupHom operator-(const GroupHom& a, const GroupHom& b);
    friend bool operator==(const GroupHom& a, const GroupHom& b);
    friend bool operator!=(const GroupHom& a, const GroupHom& b) { return !(a == b); }

private:
    FGAbGroup source_, target_;
    IntMatrix matrix_;
};

// Raises MalformedHom when some torsion generator is sent outside the allowed subgroup.
void check_well_defined(const FGAbGroup& s, const FGAbGroup& t, const IntMatrix& m);

// Subquotient L / R of Z^a for lattices R <= L, in canonical form.
class LatticeQuotient {
public:
    LatticeQuotient(const IntMatrix& gens, const IntMatrix& rels);

    const FGAbGroup& group() const { return group_; }
    std::size_t ambient() const { return ambient_; }
    // Canonical coordinates of a vector of L.
    IntVector coords(const IntVector& v) const;
    // Representative in Z^a of canonical generator i.
    IntVector representative(std::size_t i) const;
    // Ambient representatives as columns.
    IntMatrix embedding() const;
    bool contains(const IntVector& v) const;

private:
    std::size_t ambient_ = 0;
    std::size_t rank_ = 0;
    IntVector d_;           // nonzero SNF entries of the generator lattice
    IntMatrix U_;           // rows used to express a lattice vector in basis coordinates
    IntMatrix basis_;       // basis of L as columns
    IntMatrix U2_, U2inv_;  // coordinate change for the relation module
    std::vector<std::size_t> keep_;
    FGAbGroup group_;
};

struct Subgroup {
    FGAbGroup group;
    GroupHom inclusion;
};

struct Quotient {
    FGAbGroup group;
    GroupHom projection;
};

Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
Quotient cokernel(const GroupHom& f);
// Subgroup of g generated by the given elements.
Subgroup generated_subgroup(const FGAbGroup& g, const std::vector<IntVector>& gens);
// g / <gens> with the projection.
Quotient quotient_by(const FGAbGroup& g, const std::vector<IntVector>& gens);

// Exactness at the middle of A -f-> B -g-> C.
bool is_exact(const GroupHom& f, const GroupHom& g);

// Kernel of the map Z^a/RA -> Z^b/RB induced by F, inside Z^a.
LatticeQuotient presented_kernel(const IntMatrix& F, const IntMatrix& RA, const IntMatrix& RB);

// Generators of {x in Z^a : F x in span(RB)}.
IntMatrix kernel_lattice(const IntMatrix& F, const IntMatrix& RB);

// Presentations in the ambient coordinates of the relevant group, for building
// structure maps on subquotients.
LatticeQuotient image_lattice(const GroupHom& f);
LatticeQuotient cokernel_lattice(const GroupHom& f);
// ker g / im f for A -f-> B -g-> C with g f = 0.
LatticeQuotient homology_lattice(const GroupHom& f, const GroupHom& g);

// Canonical form of a direct sum together with the coordinate change. When the
// concatenated coordinates are already canonical up to order, only perm is
// filled: perm[i] is the canonical index of concatenated coordinate i.
struct DirectSum {
    FGAbGroup group;
    bool is_permutation = false;
    std::vector<std::size_t> perm;
    IntMatrix to_canonical;    // concatenated coordinates -> canonical
    IntMatrix from_canonical;  // canonical -> concatenated coordinates

    IntMatrix to_canonical_matrix() const;
    IntMatrix from_canonical_matrix() const;
};
DirectSum direct_sum_data(const std::vector<FGAbGroup>& parts);

// Hom(A, B) parametrised by pairs (source generator, target generator).
struct HomPair {
    std::size_t src, dst;
    Integer scale;  // the basic hom sends src to scale * dst
    Integer order;  // 0 when infinite
};

class HomGroup {
public:
    HomGroup(const FGAbGroup& a, const FGAbGroup& b);

    const FGAbGroup& group() const { return quotient_.group(); }
    const std::vector<HomPair>& pairs() const { return pairs_; }
    std::vector<GroupHom> basis() const;
    GroupHom element(const IntVector& canonical) const;
    IntVector coords(const GroupHom& f) const;
    // Pair coordinates of a well-defined matrix A -> B.
    IntVector pair_coords(const IntMatrix& m) const;
    IntMatrix matrix_from_pairs(const IntVector& p) const;
    IntVector pair_orders() const;

private:
    FGAbGroup a_, b_;
    std::vector<HomPair> pairs_;
    LatticeQuotient quotient_;
};

FGAbGroup hom_group(const FGAbGroup& a, const FGAbGroup& b);

}  // namespace mss
