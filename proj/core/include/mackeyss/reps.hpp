#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mss {

struct RepError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class IrrepKind { Trivial, Sign, TwoDim };

// Irreducible real representation of C_{2^level}. TwoDim(k, m) is rotation by
// 2*pi*m/2^k of the plane, 1 <= m < 2^{k-1}; only m = 2^l is stored.
class Irrep {
public:
    static Irrep trivial(int level);
    static Irrep sign(int level);
    // m must already be a power of two below 2^{level-1}.
    static Irrep two_dim(int level, std::uint64_t m);

    IrrepKind kind() const { return kind_; }
    int level() const { return level_; }
    std::uint64_t rotation() const { return m_; }
    int dim() const { return kind_ == IrrepKind::TwoDim ? 2 : 1; }
    // e with kernel C_{2^e}.
    int kernel_exponent() const;
    std::string str() const;

    friend bool operator==(const Irrep& a, const Irrep& b) = default;
    // Larger kernels sort first; this is the display order.
    friend bool operator<(const Irrep& a, const Irrep& b);

private:
    Irrep(IrrepKind k, int level, std::uint64_t m) : kind_(k), level_(level), m_(m) {}
    IrrepKind kind_;
    int level_;
    std::uint64_t m_;
};

// Nonnegative combination of irreducibles of C_{2^n}, kept in JO-normal form.
class RepSum {
public:
    RepSum() = default;
    explicit RepSum(int n);

    static RepSum trivial(int n, int count = 1);
    static RepSum sigma(int n, int count = 1);
    // lambda(m) for a raw rotation index m; may split into trivials or signs.
    static RepSum lambda(int n, std::int64_t m, int count = 1);
    static RepSum lambda_prime(int n);  // lambda(2^{n-2})
    static RepSum rho(int n);
    static RepSum rho_bar(int n);
    // Grammar: terms joined by '+', each an optional multiplicity followed by
    // s, l, l<m>, 1, rho, rhobar or lambda'.
    static RepSum parse(int n, const std::string& text);

    int n() const { return n_; }
    const std::map<Irrep, int>& terms() const { return mult_; }
    int count(const Irrep& x) const;
    int dim() const;
    bool is_zero() const { return mult_.empty(); }
    int sign_count() const;
    int trivial_count() const;
    // Irreducible summands with repetition, largest kernel first.
    std::vector<Irrep> expand() const;

    RepSum& add(const Irrep& x, int count = 1);
    RepSum& operator+=(const RepSum& o);
    friend RepSum operator+(RepSum a, const RepSum& b) { return a += b; }
    // o must be a sub-representation.
    RepSum& operator-=(const RepSum& o);
    friend RepSum operator-(RepSum a, const RepSum& b) { return a -= b; }
    friend RepSum operator*(int k, const RepSum& w);
    friend bool operator==(const RepSum& a, const RepSum& b) = default;
    friend bool operator<(const RepSum& a, const RepSum& b);

    // e.g. "2σ+λ(2)+λ(1)"; "0" for the zero representation.
    std::string str() const;
    // ASCII form accepted by parse.
    std::string ascii() const;

private:
    int n_ = 0;
    std::map<Irrep, int> mult_;
};

RepSum restrict(const RepSum& w, int k);
int fixed_dim(const RepSum& w, int k);
RepSum jo_normal_form(const RepSum& w);
bool is_orientable(const RepSum& w);
// Largest m with W^{C_{2^m}} nonzero; n for W = 0.
int max_fixed_level(const RepSum& w);

struct Decomposition {
    RepSum v_prime;
    RepSum v_double_prime;
    int m_of_v_prime = 0;
};

// The decompositions W = V' + V'' with V'' orientable and every subgroup fixing
// a vector of V'' fixing V' pointwise; one per even dim V'', sorted by dim V''
// descending. Throws RepError when W has fixed points.
std::vector<Decomposition> decompositions(const RepSum& w);

// Decompositions indexing the Bredon homology of an orientable fixed point free
// W: V'' collects the summands with the largest kernels, so that every group
// fixing a vector of V' fixes V''.
std::vector<Decomposition> homology_decompositions(const RepSum& w);

// Every nonzero fixed point free W of dimension at most max_dim, in RepSum order.
std::vector<RepSum> fixed_point_free_reps(int n, int max_dim);

}  // namespace mss
