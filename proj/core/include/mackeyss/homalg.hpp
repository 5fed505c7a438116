#pragma once

#include "mackeyss/mackey.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mss {

struct ExtensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The map Ind_k Z -> N sending the generator at level k to x in N(C_{2^n}/C_{2^k}).
MackeyHom yoneda_map(int k, const MackeyFunctor& target, const IntVector& x);
// Ind_k Z for C_{2^n}.
MackeyFunctor free_functor(int k, int n);

// P_i -> ... -> P_1 -> P_0 -> target. maps[0] is the augmentation P_0 -> target
// and maps[i] : P_i -> P_{i-1}.
struct Resolution {
    MackeyFunctor target;
    std::vector<MackeyFunctor> modules;
    std::vector<MackeyHom> maps;

    // Problems found: composites that do not vanish, failures of exactness, a
    // non-surjective augmentation. Empty for a valid resolution.
    std::vector<std::string> check() const;
};

// Z -> Ind_{k-1}Z -(1-gamma)-> Ind_{k-1}Z -> Z -> B(1,k-1) over C_{2^k}, induced
// up to C_{2^n}; it resolves Ind_k B(1,k-1).
Resolution resolution_B(int k, int n);
// Ind_{k-2}Z + Ind_{k-1}Z -[1, 1+gamma]-> Ind_{k-1}Z -> Bstar(1,k-2) over C_{2^k},
// induced up to C_{2^n}. Two stages only.
Resolution resolution_Bstar(int k, int n);
// Two stages P_1 -> P_0 -> m from sums of the Ind_j Z.
Resolution projective_cover(const MackeyFunctor& m);
// resolution_B, resolution_Bstar or the trivial resolution of Ind_k Z when m is
// literally one of their targets.
std::optional<Resolution> registered_resolution(const MackeyFunctor& m);

struct ExtResult {
    int degree = 0;
    FGAbGroup group;
};

// Ext^i(r.target, n) for i <= max_degree <= 1, from Hom(r, n).
std::vector<ExtResult> ext(const Resolution& r, const MackeyFunctor& n, int max_degree = 1);
// Uses a registered resolution when there is one, projective_cover otherwise.
std::vector<ExtResult> ext(const MackeyFunctor& m, const MackeyFunctor& n, int max_degree = 1);

struct ShortExactSequence {
    MackeyFunctor sub, middle, quotient;
    MackeyHom f, g;  // sub -> middle -> quotient
};

// 0 -> Bstar(1,n-2) -> B(2,n-2) -> B(1,n-1) -> 0.
ShortExactSequence ses_B2(int n);
ShortExactSequence induce(const ShortExactSequence& s, int n);
// True when g has no section, decided inside Hom(quotient, middle).
bool is_nonsplit(const ShortExactSequence& s);

// Ind_level^n of a functor base for C_{2^level}, with a name for the base.
struct InducedFunctor {
    int level = 0;
    MackeyFunctor base;
    std::string name;

    MackeyFunctor value(int n) const { return induce(base, n); }
    std::string str(int n) const;
};

InducedFunctor induced_named(const std::string& name, int level);

// The extension 0 -> Ind_k Bstar(1,k-2) -> Ind_k B(2,k-2) -> Ind_k B(1,k-1) -> 0
// between the entries at filtrations sub_s and quotient_s.
struct ForcedExtension {
    int level = 0;
    int quotient_s = 0, sub_s = 0;
    InducedFunctor quotient, sub, middle;
    ShortExactSequence ses;  // over C_{2^level}
};
ForcedExtension forced_B2(int k, int quotient_s, int sub_s);

struct ColumnEntry {
    int s = 0;
    InducedFunctor functor;
};

struct ColumnResolution {
    MackeyFunctor total;
    std::vector<InducedFunctor> summands;  // total is their direct sum
    std::vector<std::string> log;          // one line per justified pair
};

// Ext^1(Ind_q.level q.base, Ind_t.level t.base) computed through the smaller
// group, with the restriction shortcut when one side vanishes on the other's
// inducing subgroup. Results are memoised in cache.
class ExtCache {
public:
    // Empty when Ext^1 vanishes, otherwise the group.
    FGAbGroup ext1(const InducedFunctor& q, const InducedFunctor& t, int n, std::string* why = nullptr);

private:
    std::map<std::string, FGAbGroup> memo_;
};

// Rebuilds the total functor of a column from its filtration quotients, adding
// entries in order of decreasing s. Every pair (lower quotient, higher entry)
// either has vanishing Ext^1 or is covered by a forced extension; anything else
// raises ExtensionError.
ColumnResolution resolve_column(int n, const std::vector<ColumnEntry>& entries,
                                const std::vector<ForcedExtension>& forced);

}  // namespace mss
