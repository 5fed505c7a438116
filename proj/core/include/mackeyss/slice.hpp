#pragma once

#include "mackeyss/bredon.hpp"
#include "mackeyss/homalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mss {

// Monomial in the classes gamma^j r_i, 0 <= j < 2^{n-1}, for i in a fixed list
// of generator indices. gamma^{2^{n-1}} acts trivially modulo 2, so the action
// of C_{2^n} factors through the cyclic shift of j.
class Monomial {
public:
    Monomial() = default;
    Monomial(int n, std::vector<int> gens);

    int n() const { return n_; }
    const std::vector<int>& gens() const { return gens_; }
    int half() const { return 1 << (n_ - 1); }
    int exponent(std::size_t g, int j) const { return e_[g * half() + j]; }
    void set_exponent(std::size_t g, int j, int e) { e_[g * half() + j] = static_cast<std::uint8_t>(e); }
    const std::vector<std::uint8_t>& exponents() const { return e_; }

    // Underlying degree, sum of 2 i e(i, j).
    int degree() const;
    // gamma^shift applied.
    Monomial translate(int shift) const;
    bool fixed_by(int k) const;
    // Largest k with C_{2^k} fixing the monomial.
    int stabilizer() const;
    Monomial operator*(const Monomial& o) const;
    bool is_one() const;

    // Product of the norm classes gamma^c N_1^k r_i for k the stabilizer level,
    // e.g. "(N_1^2r_1)^2" or "r_1·(γr_1)^2".
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    int n_ = 1;
    std::vector<int> gens_;
    std::vector<std::uint8_t> e_;
};

// Default generator set {r_1, r_3}.
std::vector<int> reduced_generators();
// r_1, ..., r_max: every generator that can appear up to a given weight.
std::vector<int> all_generators(int max_weight);

// gamma^c N_1^k r_i.
Monomial norm_class(int n, int k, int i, int c, const std::vector<int>& gens = reduced_generators());

// Monomials in the 2^{n-k} translates of the N_1^k r_i of norm weight at most
// max_weight (N_1^k r_i has weight i), including 1.
std::vector<Monomial> fixed_monomials(int n, int k, int max_weight, const std::vector<int>& gens = reduced_generators());
// P_{n,m}(C_{2^k}): weight m, fixed by C_{2^k}, not fixed by C_{2^{k+1}} when k < n.
std::vector<Monomial> stratum(int n, int m, int k, const std::vector<int>& gens = reduced_generators());
// Canonical representatives (largest translate) of the C_{2^n}-orbits of stratum(n, m, k).
std::vector<Monomial> orbit_representatives(int n, int m, int k, const std::vector<int>& gens = reduced_generators());
std::size_t orbit_count(int n, int m, int k, const std::vector<int>& gens = reduced_generators());
// |P_{n,3}(C_{2^k})/C_{2^n}| - |P_{n,2}(C_{2^k})/C_{2^n}| - 1.
long b_count(int n, int k, const std::vector<int>& gens = reduced_generators());

// Independent counting path: every monomial of the given underlying degree,
// enumerated over all exponent vectors.
std::vector<Monomial> monomials_of_degree(int n, int degree, const std::vector<int>& gens = reduced_generators());
// Orbit count of the stratum by Burnside's lemma over C_{2^n}/C_{2^k}, with the
// fixed-point counts from partition counting rather than enumeration.
std::size_t orbit_count_burnside(int n, int m, int k, const std::vector<int>& gens = reduced_generators());

// ---------------------------------------------------------------- pages

struct PageEntry {
    int stem = 0, s = 0;
    InducedFunctor functor;
    GeneratorLabel label;
    std::string cell;  // "(k,m)" of the slice it comes from, or the rule that produced it

    int t() const { return stem + s; }
};

struct DifferentialRecord {
    std::string rule;
    int r = 0;  // page of the differential
    int source_stem = 0, source_s = 0, target_stem = 0, target_s = 0;
    int level = 0;  // inducing level K of the targets
    std::string description;
    std::vector<std::string> checks;
};

struct Page {
    int n = 0;
    int min_stem = 1, max_stem = 4;
    bool twisted_by_lambda_prime = false;  // the page of S^{λ'} smashed with the tower
    bool infinity = false;
    std::vector<PageEntry> entries;  // sorted by (stem, s, level, name, label)
    std::vector<DifferentialRecord> differentials;
    std::vector<ForcedExtension> forced;
    std::vector<std::string> log;

    std::vector<PageEntry> at(int stem, int s) const;
    std::vector<PageEntry> stem_entries(int stem) const;
    MackeyFunctor functor_at(int stem, int s) const;
    void normalize();
};

struct DifferentialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Slice E2 in stems [1, 4] from slice_homotopy over every orbit of cells.
Page assemble_E2(int n, const std::vector<int>& gens = reduced_generators());
// The same page written down from the closed formulas for each stem.
Page closed_form_E2(int n, const std::vector<int>& gens = reduced_generators());
// Stems 1 and 2 of S^{λ'} smashed with the slice tower (n >= 2).
Page assemble_lambda_prime_E2(int n, const std::vector<int>& gens = reduced_generators());

// Entries of a and b that do not pair up, as readable lines.
std::vector<std::string> compare_pages(const Page& a, const Page& b);

// Applies the differential rules and returns the E-infinity page in the window;
// stem 3 is complete.
Page apply_differentials(const Page& e2);

struct Pi3Result {
    int n = 0;
    std::vector<ColumnEntry> column;
    std::vector<ForcedExtension> forced;
    ColumnResolution resolution;
    Page einf;
};

Pi3Result pi3_report(int n);
MackeyFunctor pi3(int n);

// Text and SVG renderings.
std::string page_text(const Page& p);
std::string page_svg(const Page& p);

}  // namespace mss
