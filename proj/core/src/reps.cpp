#include "mackeyss/reps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mss {

namespace {

int v2(std::uint64_t m)
{
    int v = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++v;
    }
    return v;
}

void check_level(int n)
{
    if (n < 0 || n > 40)
        throw RepError("group level out of range: " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------- Irrep

Irrep Irrep::trivial(int level)
{
    check_level(level);
    return Irrep(IrrepKind::Trivial, level, 0);
}

Irrep Irrep::sign(int level)
{
    check_level(level);
    if (level < 1)
        throw RepError("the trivial group has no sign representation");
    return Irrep(IrrepKind::Sign, level, 0);
}

Irrep Irrep::two_dim(int level, std::uint64_t m)
{
    check_level(level);
    if (level < 2)
        throw RepError("two dimensional irreducibles need level at least 2");
    if (m == 0 || (m & (m - 1)) != 0 || m >= (std::uint64_t{1} << (level - 1)))
        throw RepError("rotation index must be a power of two below 2^(level-1)");
    return Irrep(IrrepKind::TwoDim, level, m);
}

int Irrep::kernel_exponent() const
{
    switch (kind_) {
    case IrrepKind::Trivial:
        return level_;
    case IrrepKind::Sign:
        return level_ - 1;
    case IrrepKind::TwoDim:
        return v2(m_);
    }
    return 0;
}

std::string Irrep::str() const
{
    switch (kind_) {
    case IrrepKind::Trivial:
        return "1";
    case IrrepKind::Sign:
        return "σ";
    case IrrepKind::TwoDim:
        return "λ(" + std::to_string(m_) + ")";
    }
    return "?";
}

bool operator<(const Irrep& a, const Irrep& b)
{
    if (a.level_ != b.level_)
        return a.level_ < b.level_;
    if (a.kernel_exponent() != b.kernel_exponent())
        return a.kernel_exponent() > b.kernel_exponent();
    return a.m_ < b.m_;
}

// ---------------------------------------------------------------- RepSum

RepSum::RepSum(int n) : n_(n)
{
    check_level(n);
}

RepSum RepSum::trivial(int n, int count)
{
    return RepSum(n).add(Irrep::trivial(n), count);
}

RepSum RepSum::sigma(int n, int count)
{
    return RepSum(n).add(Irrep::sign(n), count);
}

RepSum RepSum::lambda(int n, std::int64_t m, int count)
{
    check_level(n);
    if (n < 1)
        throw RepError("rotations need a nontrivial group");
    std::uint64_t order = std::uint64_t{1} << n;
    std::uint64_t r = static_cast<std::uint64_t>(((m % static_cast<std::int64_t>(order)) + order) % order);
    RepSum out(n);
    if (r == 0)
        return out.add(Irrep::trivial(n), 2 * count);
    if (r == order / 2)
        return out.add(Irrep::sign(n), 2 * count);
    return out.add(Irrep::two_dim(n, std::uint64_t{1} << v2(r)), count);
}

RepSum RepSum::lambda_prime(int n)
{
    if (n < 2)
        throw RepError("lambda' needs level at least 2");
    return lambda(n, std::int64_t{1} << (n - 2));
}

RepSum RepSum::rho(int n)
{
    return trivial(n) + rho_bar(n);
}

RepSum RepSum::rho_bar(int n)
{
    RepSum out(n);
    if (n == 0)
        return out;
    out.add(Irrep::sign(n));
    for (std::int64_t m = 1; m < (std::int64_t{1} << (n - 1)); ++m)
        out += lambda(n, m);
    return out;
}

RepSum RepSum::parse(int n, const std::string& text)
{
    RepSum out(n);
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty() || t == "0")
        return out;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t end = t.find('+', pos);
        if (end == std::string::npos)
            end = t.size();
        std::string term = t.substr(pos, end - pos);
        if (term.empty())
            throw RepError("empty term in '" + text + "'");
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
            ++i;
        int mult = 1;
        std::string sym = term.substr(i);
        if (i > 0) {
            if (sym.empty()) {
                // a bare number is a multiple of the trivial representation
                sym = "1";
            }
            if (std::from_chars(term.data(), term.data() + i, mult).ec != std::errc())
                throw RepError("bad multiplicity in '" + term + "'");
        }
        if (sym.size() > 1 && sym[0] == '*')
            sym = sym.substr(1);
        RepSum piece(n);
        if (sym == "1" || sym == "t")
            piece = trivial(n);
        else if (sym == "s" || sym == "sigma")
            piece = sigma(n);
        else if (sym == "rho")
            piece = rho(n);
        else if (sym == "rhobar")
            piece = rho_bar(n);
        else if (sym == "lambda'" || sym == "l'")
            piece = lambda_prime(n);
        else if (sym == "l" || sym == "lambda")
            piece = lambda(n, 1);
        else if (sym[0] == 'l') {
            std::string num = sym.substr(sym[1] == '(' ? 2 : 1);
            if (!num.empty() && num.back() == ')')
                num.pop_back();
            std::int64_t m = 0;
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), m);
            if (ec != std::errc() || p != num.data() + num.size() || num.empty())
                throw RepError("bad rotation index in '" + term + "'");
            piece = lambda(n, m);
        } else {
            throw RepError("unknown representation symbol '" + sym + "'");
        }
        out += mult * piece;
        pos = end + 1;
    }
    return out;
}

int RepSum::count(const Irrep& x) const
{
    auto it = mult_.find(x);
    return it == mult_.end() ? 0 : it->second;
}

int RepSum::dim() const
{
    int d = 0;
    for (const auto& [x, c] : mult_)
        d += c * x.dim();
    return d;
}

int RepSum::sign_count() const
{
    int s = 0;
    for (const auto& [x, c] : mult_)
        if (x.kind() == IrrepKind::Sign)
            s += c;
    return s;
}

int RepSum::trivial_count() const
{
    int s = 0;
    for (const auto& [x, c] : mult_)
        if (x.kind() == IrrepKind::Trivial)
            s += c;
    return s;
}

std::vector<Irrep> RepSum::expand() const
{
    std::vector<Irrep> out;
    for (const auto& [x, c] : mult_)
        for (int i = 0; i < c; ++i)
            out.push_back(x);
    return out;
}

RepSum& RepSum::add(const Irrep& x, int count)
{
    if (x.level() != n_)
        throw RepError("irreducible of level " + std::to_string(x.level()) + " added to a sum of level " +
                       std::to_string(n_));
    if (count < 0)
        throw RepError("negative multiplicity");
    if (count > 0)
        mult_[x] += count;
    return *this;
}

RepSum& RepSum::operator+=(const RepSum& o)
{
    if (o.n_ != n_ && !o.is_zero())
        throw RepError("adding representations of different groups");
    for (const auto& [x, c] : o.mult_)
        mult_[x] += c;
    return *this;
}

RepSum& RepSum::operator-=(const RepSum& o)
{
    for (const auto& [x, c] : o.mult_) {
        auto it = mult_.find(x);
        if (it == mult_.end() || it->second < c)
            throw RepError(o.str() + " is not a summand of " + str());
        it->second -= c;
        if (it->second == 0)
            mult_.erase(it);
    }
    return *this;
}

RepSum operator*(int k, const RepSum& w)
{
    RepSum out(w.n_);
    for (const auto& [x, c] : w.mult_)
        out.add(x, k * c);
    return out;
}

bool operator<(const RepSum& a, const RepSum& b)
{
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    return a.mult_ < b.mult_;
}

std::string RepSum::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : mult_) {
        if (!first)
            os << "+";
        first = false;
        if (c != 1)
            os << c;
        os << x.str();
    }
    return os.str();
}

std::string RepSum::ascii() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : mult_) {
        if (!first)
            os << "+";
        first = false;
        if (c != 1)
            os << c;
        switch (x.kind()) {
        case IrrepKind::Trivial:
            os << (c != 1 ? "*1" : "1");
            break;
        case IrrepKind::Sign:
            os << "s";
            break;
        case IrrepKind::TwoDim:
            os << "l" << x.rotation();
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- operations

RepSum restrict(const RepSum& w, int k)
{
    if (k > w.n() || k < 0)
        throw RepError("cannot restrict a level " + std::to_string(w.n()) + " representation to level " +
                       std::to_string(k));
    RepSum out(k);
    for (const auto& [x, c] : w.terms()) {
        int e = std::min(x.kernel_exponent(), k);
        if (e == k)
            out.add(Irrep::trivial(k), c * x.dim());
        else if (e == k - 1)
            out.add(Irrep::sign(k), c * x.dim());
        else
            out.add(Irrep::two_dim(k, std::uint64_t{1} << e), c);
    }
    return out;
}

int fixed_dim(const RepSum& w, int k)
{
    if (k > w.n() || k < 0)
        throw RepError("fixed_dim: level out of range");
    int d = 0;
    for (const auto& [x, c] : w.terms())
        if (k <= x.kernel_exponent())
            d += c * x.dim();
    return d;
}

RepSum jo_normal_form(const RepSum& w)
{
    // Storage is already normal; the raw-index entry point is RepSum::lambda.
    return w;
}

bool is_orientable(const RepSum& w)
{
    return w.sign_count() % 2 == 0;
}

int max_fixed_level(const RepSum& w)
{
    int m = w.is_zero() ? w.n() : -1;
    for (const auto& [x, c] : w.terms())
        m = std::max(m, x.kernel_exponent());
    return m;
}

namespace {

void require_fixed_point_free(const RepSum& w)
{
    if (w.trivial_count() > 0)
        throw RepError("representation " + w.str() + " has nonzero fixed points");
}

// Prefixes of the given ordering of the summands, one per even dimension.
std::vector<Decomposition> prefix_splits(const RepSum& w, std::vector<Irrep> order)
{
    std::vector<Decomposition> out;
    for (int d = w.dim() - w.dim() % 2; d >= 0; d -= 2) {
        RepSum vpp(w.n());
        int dim = 0;
        for (const auto& x : order) {
            if (dim >= d)
                break;
            vpp.add(x);
            dim += x.dim();
        }
        if (dim != d || !is_orientable(vpp))
            throw RepError("no decomposition with dim V'' = " + std::to_string(d) + " for " + w.str());
        RepSum vp = w - vpp;
        out.push_back({vp, vpp, max_fixed_level(vp)});
    }
    return out;
}

}  // namespace

std::vector<Decomposition> decompositions(const RepSum& w)
{
    require_fixed_point_free(w);
    auto order = w.expand();
    std::reverse(order.begin(), order.end());  // smallest kernels first
    return prefix_splits(w, order);
}

std::vector<Decomposition> homology_decompositions(const RepSum& w)
{
    require_fixed_point_free(w);
    if (!is_orientable(w))
        throw RepError("homology decompositions need an orientable representation");
    return prefix_splits(w, w.expand());
}

std::vector<RepSum> fixed_point_free_reps(int n, int max_dim)
{
    std::vector<Irrep> irreps;
    if (n >= 1)
        irreps.push_back(Irrep::sign(n));
    for (int l = 0; l + 2 <= n; ++l)
        irreps.push_back(Irrep::two_dim(n, std::uint64_t{1} << l));
    std::vector<RepSum> out;
    RepSum w(n);
    auto rec = [&](auto&& self, std::size_t i, int room) -> void {
        if (i == irreps.size()) {
            if (!w.is_zero())
                out.push_back(w);
            return;
        }
        for (int c = 0; c * irreps[i].dim() <= room; ++c) {
            RepSum saved = w;
            w.add(irreps[i], c);
            self(self, i + 1, room - c * irreps[i].dim());
            w = saved;
        }
    };
    rec(rec, 0, max_dim);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mss
