#include "mackeyss/slice.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace mss {

// ---------------------------------------------------------------- monomials

Monomial::Monomial(int n, std::vector<int> gens) : n_(n), gens_(std::move(gens))
{
    if (n < 1 || n > 12)
        throw std::invalid_argument("monomials need 1 <= n <= 12");
    e_.assign(gens_.size() * static_cast<std::size_t>(half()), 0);
}

int Monomial::degree() const
{
    int d = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        for (int j = 0; j < half(); ++j)
            d += 2 * gens_[g] * exponent(g, j);
    return d;
}

Monomial Monomial::translate(int shift) const
{
    Monomial out(n_, gens_);
    int h = half();
    shift = ((shift % h) + h) % h;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        for (int j = 0; j < h; ++j)
            out.set_exponent(g, (j + shift) % h, exponent(g, j));
    return out;
}

bool Monomial::fixed_by(int k) const
{
    if (k <= 1)
        return true;
    return translate(1 << (n_ - k)) == *this;
}

int Monomial::stabilizer() const
{
    int k = 1;
    while (k < n_ && fixed_by(k + 1))
        ++k;
    return k;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    if (o.n_ != n_ || o.gens_ != gens_)
        throw std::invalid_argument("product of monomials in different rings");
    Monomial out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
    return out;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x == 0; });
}

std::string Monomial::str() const
{
    if (is_one())
        return "1";
    int k = stabilizer();
    int classes = 1 << (n_ - k);
    std::vector<std::string> factors;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        for (int c = 0; c < classes; ++c) {
            int e = exponent(g, c);
            if (e == 0)
                continue;
            std::string base = fmt::format("r_{}", gens_[g]);
            if (k > 1)
                base = fmt::format("N_1^{}", k) + base;
            if (c == 1)
                base = "γ" + base;
            else if (c > 1)
                base = fmt::format("γ^{}", c) + base;
            bool bare = c == 0 && k == 1;
            if (e > 1)
                base = bare ? fmt::format("{}^{}", base, e) : fmt::format("({})^{}", base, e);
            factors.push_back(base);
        }
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        out += (i ? "·" : "") + factors[i];
    return out;
}

bool operator<(const Monomial& a, const Monomial& b)
{
    return std::tie(a.n_, a.gens_, a.e_) < std::tie(b.n_, b.gens_, b.e_);
}

std::vector<int> reduced_generators()
{
    return {1, 3};
}

std::vector<int> all_generators(int max_weight)
{
    std::vector<int> g;
    for (int i = 1; i <= max_weight; ++i)
        g.push_back(i);
    return g;
}

namespace {

void check_nk(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument(fmt::format("need 1 <= k <= n, got n={} k={}", n, k));
}

// Fixed monomials of exactly the given norm weight (or at most, when exact is false).
std::vector<Monomial> norm_monomials(int n, int k, int weight, bool exact, const std::vector<int>& gens)
{
    check_nk(n, k);
    int classes = 1 << (n - k);
    std::vector<std::pair<std::size_t, int>> vars;  // (generator, translate class)
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int c = 0; c < classes; ++c)
            vars.emplace_back(g, c);
    std::vector<Monomial> out;
    Monomial cur(n, gens);
    auto rec = [&](auto&& self, std::size_t v, int room) -> void {
        if (v == vars.size()) {
            if (!exact || room == 0)
                out.push_back(cur);
            return;
        }
        auto [g, c] = vars[v];
        int w = gens[g];
        for (int e = 0; e * w <= room; ++e) {
            for (int j = c; j < cur.half(); j += classes)
                cur.set_exponent(g, j, e);
            self(self, v + 1, room - e * w);
        }
        for (int j = c; j < cur.half(); j += classes)
            cur.set_exponent(g, j, 0);
    };
    rec(rec, 0, weight);
    std::sort(out.begin(), out.end());
    return out;
}

Monomial canonical(const Monomial& p)
{
    Monomial best = p;
    for (int s = 1; s < p.half(); ++s) {
        Monomial q = p.translate(s);
        if (best < q)
            best = q;
    }
    return best;
}

}  // namespace

Monomial norm_class(int n, int k, int i, int c, const std::vector<int>& gens)
{
    check_nk(n, k);
    auto it = std::find(gens.begin(), gens.end(), i);
    if (it == gens.end())
        throw std::invalid_argument(fmt::format("r_{} is not among the generators", i));
    auto g = static_cast<std::size_t>(it - gens.begin());
    int classes = 1 << (n - k);
    Monomial m(n, gens);
    for (int j = ((c % classes) + classes) % classes; j < m.half(); j += classes)
        m.set_exponent(g, j, 1);
    return m;
}

std::vector<Monomial> fixed_monomials(int n, int k, int max_weight, const std::vector<int>& gens)
{
    return norm_monomials(n, k, max_weight, false, gens);
}

std::vector<Monomial> stratum(int n, int m, int k, const std::vector<int>& gens)
{
    std::vector<Monomial> out;
    for (auto& p : norm_monomials(n, k, m, true, gens))
        if (k == n || !p.fixed_by(k + 1))
            out.push_back(std::move(p));
    return out;
}

std::vector<Monomial> orbit_representatives(int n, int m, int k, const std::vector<int>& gens)
{
    std::set<Monomial> reps;
    for (const auto& p : stratum(n, m, k, gens))
        reps.insert(canonical(p));
    // largest first, so that N_1^k r_i itself leads its orbit
    return {reps.rbegin(), reps.rend()};
}

std::size_t orbit_count(int n, int m, int k, const std::vector<int>& gens)
{
    return orbit_representatives(n, m, k, gens).size();
}

long b_count(int n, int k, const std::vector<int>& gens)
{
    return static_cast<long>(orbit_count(n, 3, k, gens)) - static_cast<long>(orbit_count(n, 2, k, gens)) - 1;
}

std::vector<Monomial> monomials_of_degree(int n, int degree, const std::vector<int>& gens)
{
    std::vector<Monomial> out;
    Monomial cur(n, gens);
    std::size_t vars = gens.size() * static_cast<std::size_t>(cur.half());
    auto rec = [&](auto&& self, std::size_t v, int room) -> void {
        if (v == vars) {
            if (room == 0)
                out.push_back(cur);
            return;
        }
        std::size_t g = v / static_cast<std::size_t>(cur.half());
        int j = static_cast<int>(v % static_cast<std::size_t>(cur.half()));
        int w = 2 * gens[g];
        for (int e = 0; e * w <= room; ++e) {
            cur.set_exponent(g, j, e);
            self(self, v + 1, room - e * w);
        }
        cur.set_exponent(g, j, 0);
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Number of C_{2^j}-fixed monomials of the given norm weight: solutions of
// sum i e(i, c) = weight over the 2^{n-j} translate classes, by partition counting.
std::uint64_t fixed_count(int n, int j, int weight, const std::vector<int>& gens)
{
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(weight) + 1, 0);
    ways[0] = 1;
    int classes = 1 << (n - j);
    for (int g : gens)
        for (int c = 0; c < classes; ++c)
            for (int w = g; w <= weight; ++w)
                ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - g)];
    return ways[static_cast<std::size_t>(weight)];
}

// Monomials of underlying degree m 2^k fixed by C_{2^j}, j <= n.
std::uint64_t fixed_at_degree(int n, int j, int m, int k, const std::vector<int>& gens)
{
    int degree = m << k;
    int j_eff = std::max(j, 1);
    if (degree % (1 << j_eff) != 0)
        return 0;
    return fixed_count(n, j_eff, degree >> j_eff, gens);
}

}  // namespace

std::size_t orbit_count_burnside(int n, int m, int k, const std::vector<int>& gens)
{
    check_nk(n, k);
    // |S| for S the monomials with stabilizer exactly C_{2^k}
    std::uint64_t exact = fixed_at_degree(n, k, m, k, gens) - (k < n ? fixed_at_degree(n, k + 1, m, k, gens) : 0);
    // gamma^a generates C_{2^{n - v(a)}}; it fixes p in S exactly when that subgroup lies in C_{2^k}
    std::uint64_t order = std::uint64_t{1} << (n - k), total = 0;
    for (std::uint64_t a = 0; a < order; ++a) {
        int level = a == 0 ? 0 : n - __builtin_ctzll(a);
        if (level <= k)
            total += exact;
    }
    if (total % order != 0)
        throw std::logic_error("Burnside count is not an integer");
    return static_cast<std::size_t>(total / order);
}

// ---------------------------------------------------------------- pages

namespace {

auto entry_key(const PageEntry& e)
{
    return std::make_tuple(e.stem, e.s, e.functor.level, e.functor.name, e.label.str(), e.cell);
}

std::string res_of(int k, const Monomial& p)
{
    return fmt::format("res_{}({})", k, p.str());
}

GeneratorLabel label_of(const RepSum& a, const RepSum& u, bool twisted, std::string monomial)
{
    return GeneratorLabel{1, a, u, twisted, std::move(monomial)};
}

InducedFunctor induced(int level, MackeyFunctor base, std::string name)
{
    return InducedFunctor{level, std::move(base), std::move(name)};
}

InducedFunctor signed_named(int level, const MackeyFunctor& inner, const std::string& inner_name)
{
    return induced(level, signed_induce(inner), inner_name + "^-");
}

}  // namespace

std::vector<PageEntry> Page::at(int stem, int s) const
{
    std::vector<PageEntry> out;
    for (const auto& e : entries)
        if (e.stem == stem && e.s == s)
            out.push_back(e);
    return out;
}

std::vector<PageEntry> Page::stem_entries(int stem) const
{
    std::vector<PageEntry> out;
    for (const auto& e : entries)
        if (e.stem == stem)
            out.push_back(e);
    return out;
}

MackeyFunctor Page::functor_at(int stem, int s) const
{
    std::vector<MackeyFunctor> parts;
    for (const auto& e : at(stem, s))
        parts.push_back(e.functor.value(n));
    if (parts.empty())
        return MackeyFunctor::zero(n);
    return parts.size() == 1 ? parts.front() : direct_sum(parts).functor;
}

void Page::normalize()
{
    std::sort(entries.begin(), entries.end(),
              [](const PageEntry& a, const PageEntry& b) { return entry_key(a) < entry_key(b); });
}

Page assemble_E2(int n, const std::vector<int>& gens)
{
    if (n < 1)
        throw std::invalid_argument("the slice tower needs n >= 1");
    Page page;
    page.n = n;
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= 4; ++m) {
            auto reps = orbit_representatives(n, m, k, gens);
            if (reps.empty())
                continue;
            for (const auto& term : slice_homotopy({k, m}, n)) {
                if (term.stem < page.min_stem || term.stem > page.max_stem)
                    continue;
                for (const auto& p : reps) {
                    GeneratorLabel label = term.label;
                    label.monomial = label.twisted ? res_of(k - 1, p) : p.str();
                    page.entries.push_back({term.stem, term.s, term.functor, label, fmt::format("({},{})", k, m)});
                }
            }
        }
    page.normalize();
    return page;
}

Page closed_form_E2(int n, const std::vector<int>& gens)
{
    if (n < 1)
        throw std::invalid_argument("the slice tower needs n >= 1");
    Page page;
    page.n = n;
    auto rb = [](int k, int c) { return c * RepSum::rho_bar(k); };
    auto zero = [](int k) { return RepSum(k); };
    auto norm = [&](int k) { return norm_class(n, k, 1, 0, gens); };
    auto add = [&](int stem, int s, InducedFunctor f, GeneratorLabel l, int k, int m) {
        page.entries.push_back({stem, s, std::move(f), std::move(l), fmt::format("({},{})", k, m)});
    };
    auto b1 = [](int k) { return induced_named(fmt::format("B(1,{})", k - 1), k); };

    // t - s = 1
    for (int k = 1; k <= n; ++k)
        add(1, (1 << k) - 1, b1(k), label_of(rb(k, 1), zero(k), false, norm(k).str()), k, 1);

    // t - s = 2
    add(2, 0, signed_named(1, make_Z(0), "Z"), label_of(zero(0), zero(0), true, res_of(0, norm(1))), 1, 1);
    for (int k = 1; k <= n; ++k) {
        int s = (1 << (k + 1)) - 2;
        for (const auto& p : orbit_representatives(n, 2, k, gens))
            add(2, s, b1(k), label_of(rb(k, 2), zero(k), false, p.str()), k, 2);
        if (k + 1 <= n)
            add(2, s, signed_named(k + 1, make_B(1, k - 1, k), fmt::format("B(1,{})", k - 1)),
                label_of(rb(k, 2), zero(k), true, res_of(k, norm(k + 1))), k + 1, 1);
    }

    // t - s = 3
    for (int k = 2; k <= n; ++k) {
        RepSum lp = RepSum::lambda_prime(k);
        add(3, (1 << k) - 3, b1(k), label_of(rb(k, 1) - lp, lp, false, norm(k).str()), k, 1);
    }
    for (int k = 1; k <= n; ++k)
        for (const auto& p : orbit_representatives(n, 3, k, gens))
            add(3, 3 * (1 << k) - 3, b1(k), label_of(rb(k, 3), zero(k), false, p.str()), k, 3);

    // t - s = 4
    for (int K = 2; K <= n; ++K) {
        RepSum two_sigma = RepSum::sigma(K - 1, 2);
        InducedFunctor f = K == 2 ? signed_named(K, make_Z(K - 1), "Z")
                                  : signed_named(K, make_B(2, K - 3, K - 1), fmt::format("B(2,{})", K - 3));
        add(4, (1 << K) - 4, f, label_of(rb(K - 1, 2) - two_sigma, two_sigma, true, res_of(K - 1, norm(K))), K, 1);
    }
    for (int k = 1; k <= n; ++k) {
        RepSum two_sigma = RepSum::sigma(k, 2);
        InducedFunctor f = k == 1 ? induced_named("Z", 1) : induced_named(fmt::format("B(2,{})", k - 2), k);
        for (const auto& p : orbit_representatives(n, 2, k, gens))
            add(4, (1 << (k + 1)) - 4, f, label_of(rb(k, 2) - two_sigma, two_sigma, false, p.str()), k, 2);
        for (const auto& p : orbit_representatives(n, 4, k, gens))
            add(4, (1 << (k + 2)) - 4, b1(k), label_of(rb(k, 4), zero(k), false, p.str()), k, 4);
    }
    page.normalize();
    return page;
}

Page assemble_lambda_prime_E2(int n, const std::vector<int>& gens)
{
    if (n < 2)
        throw std::invalid_argument("λ' needs n >= 2");
    Page page;
    page.n = n;
    page.min_stem = 1;
    page.max_stem = 2;
    page.twisted_by_lambda_prime = true;
    RepSum lp = RepSum::lambda_prime(n);
    auto place = [&](int k, int m, const std::vector<Monomial>& reps) {
        RepSum w = restrict(lp, k) + m * RepSum::rho(k);
        int t = (m << k) + 2;
        for (const auto& [deg, list] : homology_closed_form(w))
            for (const auto& e : list) {
                if (deg < page.min_stem || deg > page.max_stem)
                    continue;
                for (const auto& p : reps) {
                    GeneratorLabel label = e.label;
                    std::string mono = p.is_one() ? "" : p.str();
                    label.monomial = label.twisted ? res_of(k - 1, p) : mono;
                    page.entries.push_back({deg, t - deg, InducedFunctor{k, e.functor, e.name}, label,
                                            fmt::format("({},{})", k, m)});
                }
            }
    };
    place(n, 0, {Monomial(n, gens)});
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= 2; ++m) {
            auto reps = orbit_representatives(n, m, k, gens);
            if (!reps.empty())
                place(k, m, reps);
        }
    page.normalize();
    return page;
}

std::vector<std::string> compare_pages(const Page& a, const Page& b)
{
    std::vector<std::string> out;
    std::multimap<std::tuple<int, int, int, std::string, std::string>, const PageEntry*> left, right;
    auto key = [](const PageEntry& e) {
        return std::make_tuple(e.stem, e.s, e.functor.level, e.functor.name, e.label.str());
    };
    for (const auto& e : a.entries)
        left.emplace(key(e), &e);
    for (const auto& e : b.entries)
        right.emplace(key(e), &e);
    auto describe = [](const PageEntry& e, int n) {
        return fmt::format("(stem {}, s {}) {} · {}", e.stem, e.s, e.functor.str(n), e.label.str());
    };
    for (auto it = left.begin(); it != left.end();) {
        auto range = left.equal_range(it->first);
        auto rr = right.equal_range(it->first);
        std::size_t nl = static_cast<std::size_t>(std::distance(range.first, range.second));
        std::size_t nr = static_cast<std::size_t>(std::distance(rr.first, rr.second));
        if (nl != nr)
            out.push_back(fmt::format("{}: {} against {}", describe(*range.first->second, a.n), nl, nr));
        else if (range.first->second->functor.base != rr.first->second->functor.base)
            out.push_back(fmt::format("{}: base functors differ", describe(*range.first->second, a.n)));
        it = range.second;
    }
    for (const auto& [k, e] : right)
        if (!left.count(k))
            out.push_back(fmt::format("{}: only in the second page", describe(*e, b.n)));
    return out;
}

// ---------------------------------------------------------------- differentials

namespace {

// Vectors over F_2 with incremental elimination.
class F2Span {
public:
    explicit F2Span(std::size_t dim) : words_((dim + 63) / 64) {}

    using Vec = std::vector<std::uint64_t>;
    Vec zero() const { return Vec(words_, 0); }
    static void flip(Vec& v, std::size_t i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }

    // True when v was independent of the span so far.
    bool add(Vec v)
    {
        for (const auto& [pivot, row] : rows_)
            if ((v[pivot / 64] >> (pivot % 64)) & 1)
                for (std::size_t w = 0; w < words_; ++w)
                    v[w] ^= row[w];
        for (std::size_t w = 0; w < words_; ++w)
            if (v[w]) {
                std::size_t pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
                for (auto& [p, row] : rows_)
                    if ((row[pivot / 64] >> (pivot % 64)) & 1)
                        for (std::size_t x = 0; x < words_; ++x)
                            row[x] ^= v[x];
                rows_.emplace_back(pivot, std::move(v));
                return true;
            }
        return false;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t words_;
    std::vector<std::pair<std::size_t, Vec>> rows_;
};

// Permanent cycles inside a source entry: the subfunctor generated one level
// below the generator, and the quotient by it.
struct SourceSplit {
    MackeyFunctor sub, quotient;
};

SourceSplit split_source(const MackeyFunctor& base, int l)
{
    std::vector<std::vector<IntVector>> gens(base.n + 1);
    const FGAbGroup& g = base.level[l];
    for (std::size_t i = 0; i < g.ngens(); ++i) {
        IntVector v(g.ngens(), Integer(0));
        v[i] = 1;
        gens[l].push_back(v);
    }
    return {generated_subfunctor(base, gens).functor, quotient(base, gens).functor};
}

}  // namespace

Page apply_differentials(const Page& e2)
{
    Page out = e2;
    out.infinity = true;
    if (e2.entries.empty())
        return out;
    int n = e2.n;
    std::vector<int> gens = reduced_generators();

    if (e2.twisted_by_lambda_prime) {
        int r = (1 << (n - 1)) + 1;
        auto sources = e2.at(2, 0);
        auto targets = e2.at(1, r);
        if (sources.size() != 1 || targets.size() != 1)
            throw DifferentialError(fmt::format("the u_λ' rule expects one class at (2,0) and one at (1,{})", r));
        const PageEntry& src = sources.front();
        const PageEntry& tgt = targets.front();
        MackeyFunctor target = tgt.functor.value(n);
        // the generator of the top level of Ind_{n-1} B goes to the transfer
        IntVector x(target.level[n].ngens(), Integer(0));
        if (x.empty())
            throw DifferentialError("the target of d(u_λ') vanishes at the top level");
        x[0] = 1;
        MackeyFunctor source = src.functor.value(n);
        MackeyHom d = yoneda_map(n, target, x);
        DifferentialRecord rec{"u_λ'", r, 2, 0, 1, r, n - 1,
                               fmt::format("d_{}(u_λ') = a_λ' tr_{}^{}(a_ρ̄ N r̄_1)", r, n - 1, n), {}};
        if (!validate_hom(source, target, d).empty())
            throw DifferentialError("d(u_λ') is not a map of Mackey functors");
        SubFunctor ker = kernel(source, target, d);
        QuotientFunctor coker = cokernel(source, target, d);
        rec.checks.push_back(fmt::format("kernel {}", level_summary(ker.functor)));
        rec.checks.push_back(fmt::format("cokernel {}", level_summary(coker.functor)));
        std::vector<PageEntry> kept;
        for (const auto& e : out.entries) {
            bool is_src = e.stem == 2 && e.s == 0, is_tgt = e.stem == 1 && e.s == r;
            if (!is_src && !is_tgt)
                kept.push_back(e);
        }
        if (!ker.functor.is_zero()) {
            GeneratorLabel l = src.label;
            l.coefficient = 2;
            kept.push_back({2, 0, InducedFunctor{n, ker.functor, "ker d"}, l, rec.rule});
        }
        if (!coker.functor.is_zero())
            kept.push_back({1, r, InducedFunctor{n, coker.functor, "coker d"}, tgt.label, rec.rule});
        out.entries = kept;
        out.differentials.push_back(rec);
        out.log.push_back("a_σ u_λ' is a permanent cycle; other classes carry no rule in this window");
        out.normalize();
        return out;
    }

    std::vector<PageEntry> kept;
    std::set<std::pair<int, int>> touched;
    std::vector<PageEntry> added;

    for (int K = 1; K <= n; ++K) {
        int source_s = (1 << (K + 1)) - 4;
        int target_s = 3 * (1 << K) - 3;
        int r = target_s - source_s;
        bool has_signed = K + 1 <= n;
        DifferentialRecord rec;
        rec.rule = K == n ? "u_2σ" : "u_2σ·N";
        rec.r = r;
        rec.source_stem = 4;
        rec.source_s = source_s;
        rec.target_stem = 3;
        rec.target_s = target_s;
        rec.level = K;
        rec.description = fmt::format("d_{} on the quotients by permanent cycles, multiplication by 𝔡_1 on C_{}", r,
                                      1 << K);

        // sources: the (K,2) entries and the signed (K+1,1) entry; the (K-1,4) entries are permanent
        int c2 = 0;
        for (const auto& e : e2.at(4, source_s)) {
            bool from_k2 = e.cell == fmt::format("({},2)", K);
            bool from_signed = e.cell == fmt::format("({},1)", K + 1);
            if (!from_k2 && !from_signed)
                continue;
            // permanent cycles: generated one level below the top of the base
            SourceSplit split = split_source(e.functor.base, e.functor.level - (from_k2 ? 1 : 2));
            MackeyFunctor expect = from_k2 ? make_B(1, K - 1, K) : signed_induce(make_B(1, K - 1, K));
            if (!isomorphic(split.quotient, expect))
                throw DifferentialError(fmt::format("source {} at (4,{}) has quotient {} instead of {}",
                                                    e.functor.str(n), source_s, level_summary(split.quotient),
                                                    level_summary(expect)));
            if (from_k2)
                ++c2;
            PageEntry sub = e;
            sub.functor = InducedFunctor{e.functor.level, split.sub, "P[" + e.functor.name + "]"};
            added.push_back(sub);
        }
        if (c2 != static_cast<int>(orbit_count(n, 2, K, gens)))
            throw DifferentialError(fmt::format("expected {} sources from P_{{n,2}}(C_{}) at (4,{})",
                                                orbit_count(n, 2, K, gens), 1 << K, source_s));
        touched.insert({4, source_s});
        rec.checks.push_back(fmt::format("{} quotient(s) Ind_{} B(1,{}) and {} signed quotient(s) Ind_{} B(1,{})^-",
                                         c2, K, K - 1, has_signed ? 1 : 0, K + 1, K - 1));

        // the F_2 map on underlying modules
        auto p2 = stratum(n, 2, K, gens);
        auto p3 = stratum(n, 3, K, gens);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < p3.size(); ++i)
            index.emplace(p3[i], i);
        int classes = 1 << (n - K);
        std::vector<Monomial> dk;
        for (int c = 0; c < classes; ++c)
            dk.push_back(norm_class(n, K, 1, c, gens));
        F2Span span(p3.size());
        auto image = [&](const Monomial& p) {
            auto v = span.zero();
            for (const auto& d : dk) {
                auto it = index.find(d * p);
                if (it == index.end())
                    throw DifferentialError(fmt::format("{}·{} leaves P_{{n,3}}(C_{})", d.str(), p.str(), 1 << K));
                F2Span::flip(v, it->second);
            }
            return v;
        };
        std::size_t rank2 = 0;
        for (const auto& p : p2)
            rank2 += span.add(image(p)) ? 1 : 0;
        if (rank2 != p2.size())
            throw DifferentialError(fmt::format("d_{} is not injective on the P_{{n,2}}(C_{}) block", r, 1 << K));
        rec.checks.push_back(fmt::format("injective on F_2[P_{{n,2}}(C_{})], rank {}", 1 << K, rank2));
        // free cokernel: the norm of C_{2^n}/C_{2^K} hits a subspace of dimension dim/|C|
        {
            F2Span with_norms = span;
            std::size_t extra = 0;
            std::set<Monomial> seen;
            for (const auto& p : p3) {
                Monomial c = canonical(p);
                if (!seen.insert(c).second)
                    continue;
                auto v = span.zero();
                for (int s = 0; s < classes; ++s)
                    F2Span::flip(v, index.at(c.translate(s)));
                extra += with_norms.add(v) ? 1 : 0;
            }
            std::size_t coker = p3.size() - p2.size();
            if (extra * static_cast<std::size_t>(classes) != coker)
                throw DifferentialError(fmt::format("cokernel of d_{} on C_{} is not free: norm rank {} of {}", r,
                                                    1 << K, extra, coker));
            rec.checks.push_back(fmt::format("image is a direct summand: cokernel free of rank {}", extra));
        }
        if (has_signed) {
            Monomial q = norm_class(n, K + 1, 1, 0, gens);
            std::size_t h = static_cast<std::size_t>(classes / 2), added_rank = 0;
            for (std::size_t c = 0; c < h; ++c)
                added_rank += span.add(image(q.translate(static_cast<int>(c)))) ? 1 : 0;
            if (added_rank != h)
                throw DifferentialError(fmt::format("the signed summand is not carried injectively by d_{}", r));
            rec.checks.push_back(fmt::format("signed summand injective, rank {}", h));
        }

        // survivors: full orbit blocks completing the image, then the Bstar piece
        std::size_t copies = orbit_count(n, 3, K, gens) - orbit_count(n, 2, K, gens) - (has_signed ? 1 : 0);
        std::vector<Monomial> survivors, leftover;
        for (const auto& c : orbit_representatives(n, 3, K, gens)) {
            F2Span trial = span;
            std::size_t gain = 0;
            for (int s = 0; s < classes; ++s) {
                auto v = span.zero();
                F2Span::flip(v, index.at(c.translate(s)));
                gain += trial.add(v) ? 1 : 0;
            }
            if (gain == static_cast<std::size_t>(classes) && survivors.size() < copies) {
                survivors.push_back(c);
                span = trial;
            } else if (gain > 0) {
                leftover.push_back(c);
            }
        }
        if (survivors.size() != copies)
            out.log.push_back(fmt::format("s={}: no monomial basis for the complement; survivors labelled partially",
                                          target_s));
        touched.insert({3, target_s});
        RepSum a3 = 3 * RepSum::rho_bar(K);
        for (std::size_t i = 0; i < copies; ++i) {
            std::string mono = i < survivors.size() ? survivors[i].str() : "?";
            added.push_back({3, target_s, induced_named(fmt::format("B(1,{})", K - 1), K),
                             label_of(a3, RepSum(K), false, mono), fmt::format("({},3)", K)});
        }
        if (has_signed) {
            std::string mono = leftover.empty() ? "?" : leftover.front().str();
            added.push_back({3, target_s, induced_named(fmt::format("Bstar(1,{})", K - 1), K + 1),
                             label_of(a3, RepSum(K), false, mono), "coker " + rec.rule});
        }
        rec.checks.push_back(fmt::format("E_inf at (3,{}): {}{} Ind_{} B(1,{})", target_s,
                                         has_signed ? fmt::format("Ind_{} Bstar(1,{}) + ", K + 1, K - 1) : "",
                                         copies, K, K - 1));
        out.differentials.push_back(rec);
    }

    for (const auto& e : e2.entries) {
        if (e.stem == 3 && touched.count({3, e.s}))
            continue;
        if (e.stem == 4 && touched.count({4, e.s})) {
            int K = 1;
            while ((1 << (K + 1)) - 4 < e.s)
                ++K;
            if (e.cell == fmt::format("({},2)", K) || e.cell == fmt::format("({},1)", K + 1))
                continue;
        }
        kept.push_back(e);
    }
    for (auto& e : added)
        kept.push_back(std::move(e));
    out.entries = std::move(kept);

    // forced extensions between s = 2^K - 3 and the Bstar summand at s = 3 2^{K-1} - 3
    for (int K = 2; K <= n; ++K)
        out.forced.push_back(forced_B2(K, (1 << K) - 3, 3 * (1 << (K - 1)) - 3));

    std::map<std::pair<int, int>, int> untouched;
    for (const auto& e : out.entries)
        if (e.stem != 3 && !touched.count({e.stem, e.s}))
            ++untouched[{e.stem, e.s}];
    for (const auto& [pos, count] : untouched)
        out.log.push_back(fmt::format("(stem {}, s {}): {} class(es) with no rule applied", pos.first, pos.second,
                                      count));
    out.log.push_back("stem 4 is incomplete: differentials from stem 5 are outside the window");
    out.normalize();
    return out;
}

// ---------------------------------------------------------------- pi_3

Pi3Result pi3_report(int n)
{
    Pi3Result res;
    res.n = n;
    res.einf = apply_differentials(assemble_E2(n));
    for (const auto& e : res.einf.stem_entries(3))
        res.column.push_back({e.s, e.functor});
    res.forced = res.einf.forced;
    res.resolution = resolve_column(n, res.column, res.forced);
    return res;
}

MackeyFunctor pi3(int n)
{
    return pi3_report(n).resolution.total;
}

// ---------------------------------------------------------------- rendering

namespace {

using Cell = std::map<std::tuple<int, std::string, std::string>, int>;  // (level, name, label) -> count

std::map<std::pair<int, int>, Cell> grouped(const Page& p)
{
    std::map<std::pair<int, int>, Cell> out;
    for (const auto& e : p.entries)
        ++out[{e.stem, e.s}][{e.functor.level, e.functor.str(p.n), e.label.str()}];
    return out;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

enum class Glyph { box, bullet, circle, diamond, other };

Glyph glyph_of(const std::string& name)
{
    if (name.rfind("Z", 0) == 0)
        return Glyph::box;
    if (name.rfind("B(1,", 0) == 0)
        return Glyph::bullet;
    if (name.rfind("B(2,", 0) == 0)
        return Glyph::circle;
    if (name.rfind("Bstar", 0) == 0)
        return Glyph::diamond;
    return Glyph::other;
}

std::string draw_glyph(Glyph g, double x, double y, bool signed_)
{
    std::string out;
    switch (g) {
    case Glyph::box:
        out = fmt::format(R"(<rect x="{:.1f}" y="{:.1f}" width="10" height="10" fill="none" stroke="black"/>)", x - 5,
                          y - 5);
        break;
    case Glyph::bullet:
        out = fmt::format(R"(<circle cx="{:.1f}" cy="{:.1f}" r="4.5" fill="black"/>)", x, y);
        break;
    case Glyph::circle:
        out = fmt::format(R"(<circle cx="{:.1f}" cy="{:.1f}" r="4.5" fill="white" stroke="black"/>)", x, y);
        break;
    case Glyph::diamond:
        out = fmt::format(R"(<polygon points="{:.1f},{:.1f} {:.1f},{:.1f} {:.1f},{:.1f} {:.1f},{:.1f}" fill="gray" stroke="black"/>)",
                          x, y - 6, x + 6, y, x, y + 6, x - 6, y);
        break;
    case Glyph::other:
        out = fmt::format(R"(<polygon points="{:.1f},{:.1f} {:.1f},{:.1f} {:.1f},{:.1f}" fill="none" stroke="black"/>)",
                          x, y - 6, x + 6, y + 5, x - 6, y + 5);
        break;
    }
    if (signed_)
        out += fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="black"/>)", x + 6, y - 7,
                           x + 11, y - 7);
    return out;
}

std::string base_name(const std::string& name)
{
    return name.rfind("Ind_", 0) == 0 ? name.substr(name.find(' ') + 1) : name;
}

// Rows of filtration s (top down) against stems; Z, b = B(1,k), B = B(2,k),
// * = Bstar(1,k), ? = anything else, a trailing - for signed induction.
std::string chart_grid(const Page& p)
{
    auto cells = grouped(p);
    std::set<int> rows;
    for (const auto& [pos, cell] : cells)
        rows.insert(pos.second);
    const int width = 14;
    std::string out = fmt::format("{:>5} |", "s");
    for (int stem = p.min_stem; stem <= p.max_stem; ++stem)
        out += fmt::format(" {:<{}}", fmt::format("t-s={}", stem), width);
    out += '\n';
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        out += fmt::format("{:>5} |", *it);
        for (int stem = p.min_stem; stem <= p.max_stem; ++stem) {
            std::map<std::string, int> marks;
            auto c = cells.find({stem, *it});
            if (c != cells.end())
                for (const auto& [key, count] : c->second) {
                    std::string base = base_name(std::get<1>(key));
                    const char* sym[] = {"Z", "b", "B", "*", "?"};
                    std::string m = sym[static_cast<int>(glyph_of(base))];
                    if (base.size() >= 2 && base.compare(base.size() - 2, 2, "^-") == 0)
                        m += '-';
                    marks[m] += count;
                }
            std::string text;
            for (const auto& [m, count] : marks)
                text += (text.empty() ? "" : " ") + (count > 1 ? fmt::format("{}{}", count, m) : m);
            out += fmt::format(" {:<{}}", text.empty() ? "." : text, width);
        }
        out += '\n';
    }
    out += "legend: Z = Z, b = B(1,k), B = B(2,k), * = Bstar(1,k), ? = other, - = signed\n";
    return out;
}

}  // namespace

std::string page_text(const Page& p)
{
    std::string out = fmt::format("{} page for C_{}{}, stems {}..{}\n", p.infinity ? "E_inf" : "E_2", 1 << p.n,
                                  p.twisted_by_lambda_prime ? " smashed with S^λ'" : "", p.min_stem, p.max_stem);
    out += chart_grid(p);
    for (const auto& [pos, cell] : grouped(p)) {
        out += fmt::format("(t-s={}, s={})\n", pos.first, pos.second);
        for (const auto& [key, count] : cell) {
            const auto& [level, name, label] = key;
            (void)level;
            out += fmt::format("  {}{} · {}\n", count > 1 ? fmt::format("{} × ", count) : "", name, label);
        }
    }
    for (const auto& d : p.differentials) {
        out += fmt::format("d_{} [{}]: (t-s={}, s={}) -> (t-s={}, s={}) on level {}\n", d.r, d.rule, d.source_stem,
                           d.source_s, d.target_stem, d.target_s, d.level);
        for (const auto& c : d.checks)
            out += fmt::format("  check: {}\n", c);
    }
    for (const auto& f : p.forced)
        out += fmt::format("extension: {} at s={} by {} at s={} is {}\n", f.quotient.str(p.n), f.quotient_s,
                           f.sub.str(p.n), f.sub_s, f.middle.str(p.n));
    for (const auto& l : p.log)
        out += fmt::format("note: {}\n", l);
    return out;
}

std::string page_svg(const Page& p)
{
    auto cells = grouped(p);
    int max_s = 0;
    for (const auto& [pos, cell] : cells)
        max_s = std::max(max_s, pos.second);
    const double dx = 90, dy = 22, left = 50, top = 30;
    int columns = p.max_stem - p.min_stem + 1;
    double width = left + dx * columns + 20;
    double plot_h = dy * (max_s + 1);
    double height = top + plot_h + 40 + 6 * 18;
    auto X = [&](int stem) { return left + dx * (stem - p.min_stem) + dx / 2; };
    auto Y = [&](int s) { return top + plot_h - dy * s - dy / 2; };

    std::string out = fmt::format(
        R"(<svg xmlns="http://www.w3.org/2000/svg" width="{:.0f}" height="{:.0f}" font-family="monospace" font-size="10">)"
        "\n",
        width, height);
    out += R"(<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">)"
           R"(<path d="M0,0 L8,4 L0,8 z" fill="red"/></marker></defs>)"
           "\n";
    out += fmt::format(R"(<text x="{:.1f}" y="14">{} page, C_{}</text>)"
                       "\n",
                       left, p.infinity ? "E_inf" : "E_2", 1 << p.n);
    for (int stem = p.min_stem; stem <= p.max_stem; ++stem)
        out += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" text-anchor="middle">{}</text>)"
                           "\n",
                           X(stem), top + plot_h + 14, stem);
    for (int s = 0; s <= max_s; s += std::max(1, max_s / 16))
        out += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" text-anchor="end">{}</text>)"
                           "\n",
                           left - 6, Y(s) + 3, s);
    out += fmt::format(R"(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="gray"/>)"
                       "\n",
                       left, top + plot_h, width - 20, top + plot_h);
    for (const auto& [pos, cell] : cells) {
        double x = X(pos.first) - 20, y = Y(pos.second);
        for (const auto& [key, count] : cell) {
            const auto& [level, name, label] = key;
            std::string base = base_name(name);
            bool signed_ = base.size() >= 2 && base.compare(base.size() - 2, 2, "^-") == 0;
            out += fmt::format("<g><title>{} · {}</title>", xml_escape(name), xml_escape(label));
            out += draw_glyph(glyph_of(base), x, y, signed_);
            if (count > 1)
                out += fmt::format(R"(<text x="{:.1f}" y="{:.1f}">×{}</text>)", x + 8, y + 4, count);
            out += "</g>\n";
            x += count > 1 ? 30 : 16;
            (void)level;
        }
    }
    for (const auto& d : p.differentials)
        out += fmt::format(R"x(<line x1="{:.1f}" y1="{:.1f}" x2="{:.1f}" y2="{:.1f}" stroke="red" marker-end="url(#arrow)"><title>d_{} {}</title></line>)x"
                           "\n",
                           X(d.source_stem) - 20, Y(d.source_s), X(d.target_stem) - 20, Y(d.target_s), d.r,
                           xml_escape(d.rule));
    double ly = top + plot_h + 32;
    const std::pair<Glyph, const char*> legend[] = {{Glyph::box, "Z"},
                                                    {Glyph::bullet, "B(1,k)"},
                                                    {Glyph::circle, "B(2,k)"},
                                                    {Glyph::diamond, "Bstar(1,k)"},
                                                    {Glyph::other, "other (kernels, cokernels, sub-functors)"}};
    for (const auto& [g, text] : legend) {
        out += draw_glyph(g, left, ly, false);
        out += fmt::format(R"(<text x="{:.1f}" y="{:.1f}">{}</text>)"
                           "\n",
                           left + 14, ly + 4, xml_escape(text));
        ly += 18;
    }
    out += draw_glyph(Glyph::bullet, left, ly, true);
    out += fmt::format(R"(<text x="{:.1f}" y="{:.1f}">bar: signed induction; ×c: multiplicity; red arrows: differentials</text>)"
                       "\n",
                       left + 14, ly + 4);
    out += "</svg>\n";
    return out;
}

}  // namespace mss
