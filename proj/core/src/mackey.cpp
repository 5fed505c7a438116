#include "mackeyss/mackey.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace mss {

namespace {

GroupHom power(const GroupHom& g, std::uint64_t e)
{
    GroupHom result = GroupHom::identity(g.source());
    GroupHom base = g;
    while (e > 0) {
        if (e & 1)
            result = base * result;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

std::uint64_t pow2(int e)
{
    return std::uint64_t{1} << e;
}

DirectSum single(const FGAbGroup& g)
{
    DirectSum d;
    d.group = g;
    d.is_permutation = true;
    d.perm.resize(g.ngens());
    for (std::size_t i = 0; i < g.ngens(); ++i)
        d.perm[i] = i;
    return d;
}

std::vector<std::size_t> offsets(const std::vector<FGAbGroup>& parts)
{
    std::vector<std::size_t> off{0};
    for (const auto& g : parts)
        off.push_back(off.back() + g.ngens());
    return off;
}

// A hom between direct sums given in concatenated coordinates.
GroupHom assemble(const DirectSum& src, const DirectSum& dst, const IntMatrix& concat)
{
    if (src.is_permutation && dst.is_permutation) {
        IntMatrix m(dst.group.ngens(), src.group.ngens());
        for (std::size_t r = 0; r < concat.rows(); ++r)
            for (std::size_t c = 0; c < concat.cols(); ++c)
                if (!concat(r, c).is_zero())
                    m(dst.perm[r], src.perm[c]) = concat(r, c);
        return GroupHom(src.group, dst.group, m);
    }
    return GroupHom(src.group, dst.group, dst.to_canonical_matrix() * concat * src.from_canonical_matrix());
}

void put_block(IntMatrix& m, std::size_t r0, std::size_t c0, const IntMatrix& b)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(r0 + r, c0 + c) = b(r, c);
}

// Induced maps on levelwise subquotients q[k] of the ambient coordinates of m.
MackeyFunctor subquotient_functor(const MackeyFunctor& m, const std::vector<LatticeQuotient>& q)
{
    auto induced = [&](const GroupHom& f, int from, int to) {
        const FGAbGroup& s = q[from].group();
        const FGAbGroup& t = q[to].group();
        IntMatrix mat(t.ngens(), s.ngens());
        for (std::size_t i = 0; i < s.ngens(); ++i)
            mat.set_column(i, q[to].coords(f.matrix().apply(q[from].representative(i))));
        return GroupHom(s, t, mat);
    };
    MackeyFunctor out;
    out.n = m.n;
    for (int k = 0; k <= m.n; ++k)
        out.level.push_back(q[k].group());
    for (int k = 0; k < m.n; ++k) {
        out.res.push_back(induced(m.res[k], k + 1, k));
        out.tr.push_back(induced(m.tr[k], k, k + 1));
    }
    for (int k = 0; k <= m.n; ++k)
        out.weyl.push_back(induced(m.weyl[k], k, k));
    return out;
}

MackeyHom inclusion_of(const MackeyFunctor& sub, const MackeyFunctor& m, const std::vector<LatticeQuotient>& q)
{
    MackeyHom h;
    for (int k = 0; k <= m.n; ++k) {
        IntMatrix inc(m.level[k].ngens(), sub.level[k].ngens());
        for (std::size_t i = 0; i < sub.level[k].ngens(); ++i)
            inc.set_column(i, q[k].representative(i));
        h.component.emplace_back(sub.level[k], m.level[k], inc);
    }
    return h;
}

MackeyHom projection_to(const MackeyFunctor& m, const MackeyFunctor& quo, const std::vector<LatticeQuotient>& q)
{
    MackeyHom h;
    for (int k = 0; k <= m.n; ++k) {
        std::size_t a = m.level[k].ngens();
        IntMatrix p(quo.level[k].ngens(), a);
        for (std::size_t i = 0; i < a; ++i) {
            IntVector e(a);
            e[i] = 1;
            p.set_column(i, q[k].coords(e));
        }
        h.component.emplace_back(m.level[k], quo.level[k], p);
    }
    return h;
}

std::string matrix_str(const GroupHom& f)
{
    const IntMatrix& m = f.matrix();
    if (m.rows() == 1 && m.cols() == 1)
        return m(0, 0).str();
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    os << "]";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- basics

MackeyFunctor MackeyFunctor::zero(int n)
{
    MackeyFunctor m;
    m.n = n;
    m.level.assign(n + 1, FGAbGroup::zero());
    GroupHom z = GroupHom::zero(FGAbGroup::zero(), FGAbGroup::zero());
    m.res.assign(n, z);
    m.tr.assign(n, z);
    m.weyl.assign(n + 1, z);
    return m;
}

bool MackeyFunctor::is_zero() const
{
    return std::all_of(level.begin(), level.end(), [](const FGAbGroup& g) { return g.is_zero(); });
}

bool operator==(const MackeyFunctor& a, const MackeyFunctor& b)
{
    return a.n == b.n && a.level == b.level && a.res == b.res && a.tr == b.tr && a.weyl == b.weyl;
}

MackeyHom MackeyHom::identity(const MackeyFunctor& m)
{
    MackeyHom h;
    for (const auto& g : m.level)
        h.component.push_back(GroupHom::identity(g));
    return h;
}

MackeyHom MackeyHom::zero(const MackeyFunctor& s, const MackeyFunctor& t)
{
    MackeyHom h;
    for (int k = 0; k <= s.n; ++k)
        h.component.push_back(GroupHom::zero(s.level[k], t.level[k]));
    return h;
}

bool MackeyHom::is_zero() const
{
    return std::all_of(component.begin(), component.end(), [](const GroupHom& g) { return g.is_zero(); });
}

bool MackeyHom::is_iso() const
{
    return std::all_of(component.begin(), component.end(), [](const GroupHom& g) { return g.is_iso(); });
}

MackeyHom operator*(const MackeyHom& g, const MackeyHom& f)
{
    MackeyHom h;
    for (std::size_t k = 0; k < f.component.size(); ++k)
        h.component.push_back(g.component[k] * f.component[k]);
    return h;
}

MackeyHom operator+(const MackeyHom& a, const MackeyHom& b)
{
    MackeyHom h;
    for (std::size_t k = 0; k < a.component.size(); ++k)
        h.component.push_back(a.component[k] + b.component[k]);
    return h;
}

MackeyHom operator-(const MackeyHom& a, const MackeyHom& b)
{
    MackeyHom h;
    for (std::size_t k = 0; k < a.component.size(); ++k)
        h.component.push_back(a.component[k] - b.component[k]);
    return h;
}

// ---------------------------------------------------------------- validation

std::vector<std::string> validate(const MackeyFunctor& m, bool cohomological)
{
    std::vector<std::string> bad;
    auto n = static_cast<std::size_t>(m.n);
    if (m.level.size() != n + 1 || m.res.size() != n || m.tr.size() != n || m.weyl.size() != n + 1) {
        bad.push_back("wrong number of levels or structure maps");
        return bad;
    }
    for (int k = 0; k <= m.n; ++k)
        if (m.weyl[k].source() != m.level[k] || m.weyl[k].target() != m.level[k])
            bad.push_back("weyl at level " + std::to_string(k) + " has the wrong groups");
    for (int k = 0; k < m.n; ++k) {
        if (m.res[k].source() != m.level[k + 1] || m.res[k].target() != m.level[k])
            bad.push_back("res at level " + std::to_string(k) + " has the wrong groups");
        if (m.tr[k].source() != m.level[k] || m.tr[k].target() != m.level[k + 1])
            bad.push_back("tr at level " + std::to_string(k) + " has the wrong groups");
    }
    if (!bad.empty())
        return bad;

    if (m.weyl[m.n] != GroupHom::identity(m.level[m.n]))
        bad.push_back("weyl acts nontrivially at the top level");
    for (int k = 0; k < m.n; ++k) {
        std::string at = " at level " + std::to_string(k);
        GroupHom w = m.weyl[k];
        GroupHom half = power(w, pow2(m.n - k - 1));
        if (half * half != GroupHom::identity(m.level[k]))
            bad.push_back("weyl order does not divide the Weyl group order" + at);
        if (m.res[k] * m.weyl[k + 1] != w * m.res[k])
            bad.push_back("res does not commute with weyl" + at);
        if (m.tr[k] * w != m.weyl[k + 1] * m.tr[k])
            bad.push_back("tr does not commute with weyl" + at);
        if (m.res[k] * m.tr[k] != GroupHom::identity(m.level[k]) + half)
            bad.push_back("double coset formula fails" + at);
        if (cohomological && m.tr[k] * m.res[k] != GroupHom::scalar(m.level[k + 1], 2))
            bad.push_back("tr after res is not multiplication by 2" + at);
    }
    return bad;
}

std::vector<std::string> validate_hom(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f)
{
    std::vector<std::string> bad;
    if (f.component.size() != static_cast<std::size_t>(s.n + 1) || s.n != t.n) {
        bad.push_back("hom has the wrong number of components");
        return bad;
    }
    for (int k = 0; k <= s.n; ++k)
        if (f.component[k].source() != s.level[k] || f.component[k].target() != t.level[k]) {
            bad.push_back("component " + std::to_string(k) + " has the wrong groups");
            return bad;
        }
    for (int k = 0; k <= s.n; ++k)
        if (t.weyl[k] * f.component[k] != f.component[k] * s.weyl[k])
            bad.push_back("does not commute with weyl at level " + std::to_string(k));
    for (int k = 0; k < s.n; ++k) {
        if (t.res[k] * f.component[k + 1] != f.component[k] * s.res[k])
            bad.push_back("does not commute with res at level " + std::to_string(k));
        if (t.tr[k] * f.component[k] != f.component[k + 1] * s.tr[k])
            bad.push_back("does not commute with tr at level " + std::to_string(k));
    }
    return bad;
}

// ---------------------------------------------------------------- named functors

namespace {

// Functor with cyclic values of the given orders and scalar res/tr, trivial weyl.
MackeyFunctor scalar_functor(const std::vector<Integer>& orders, const Integer& r, const Integer& t)
{
    MackeyFunctor m;
    m.n = static_cast<int>(orders.size()) - 1;
    for (const auto& d : orders)
        m.level.push_back(FGAbGroup::cyclic(d));
    auto scalar = [](const FGAbGroup& a, const FGAbGroup& b, const Integer& x) {
        if (a.is_zero() || b.is_zero())
            return GroupHom::zero(a, b);
        return GroupHom(a, b, x * IntMatrix::identity(1));
    };
    for (int k = 0; k < m.n; ++k) {
        m.res.push_back(scalar(m.level[k + 1], m.level[k], r));
        m.tr.push_back(scalar(m.level[k], m.level[k + 1], t));
    }
    for (const auto& g : m.level)
        m.weyl.push_back(GroupHom::identity(g));
    return m;
}

}  // namespace

MackeyFunctor make_Z(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative group level");
    return scalar_functor(std::vector<Integer>(n + 1, Integer(0)), 1, 2);
}

MackeyFunctor make_Zstar(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative group level");
    return scalar_functor(std::vector<Integer>(n + 1, Integer(0)), 2, 1);
}

MackeyFunctor make_B(int j, int k, int n)
{
    if (j < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("B(" + std::to_string(j) + "," + std::to_string(k) + ") is not defined for n = " +
                                    std::to_string(n));
    std::vector<Integer> orders;
    for (int i = 0; i <= n; ++i)
        orders.push_back(i > k ? pow(Integer(2), std::min(j, i - k)) : Integer(1));
    return scalar_functor(orders, 1, 2);
}

MackeyFunctor make_Bstar(int k, int n)
{
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("Bstar(1," + std::to_string(k) + ") is not defined for n = " + std::to_string(n));
    std::vector<Integer> orders;
    for (int i = 0; i <= n; ++i)
        orders.push_back(i > k ? Integer(2) : Integer(1));
    return scalar_functor(orders, 0, 1);
}

MackeyFunctor make_named(const std::string& raw, int n)
{
    std::string name;
    for (char c : raw)
        if (c != ' ')
            name += c;
    if (name == "Z")
        return make_Z(n);
    if (name == "Z*" || name == "Zstar")
        return make_Zstar(n);
    auto args = [&](std::size_t open) {
        std::size_t comma = name.find(',', open);
        std::size_t close = name.find(')', open);
        if (name[open] != '(' || comma == std::string::npos || close != name.size() - 1)
            throw std::invalid_argument("cannot parse functor name '" + raw + "'");
        return std::pair{std::stoi(name.substr(open + 1, comma - open - 1)),
                         std::stoi(name.substr(comma + 1, close - comma - 1))};
    };
    if (name.rfind("Bstar", 0) == 0 || name.rfind("B*", 0) == 0) {
        auto [j, k] = args(name[1] == '*' ? 2 : 5);
        if (j != 1)
            throw std::invalid_argument("only Bstar(1,k) is defined");
        return make_Bstar(k, n);
    }
    if (name.rfind("B", 0) == 0) {
        auto [j, k] = args(1);
        return make_B(j, k, n);
    }
    throw std::invalid_argument("unknown functor name '" + raw + "'");
}

// ---------------------------------------------------------------- change of group

namespace {

// Copies of levels in an induced functor: level j has count copies of m.level[src].
struct InducedLevel {
    int src;
    std::size_t count;
};

InducedLevel induced_level(int k, int n, int j)
{
    if (j >= k)
        return {k, static_cast<std::size_t>(pow2(n - j))};
    return {j, static_cast<std::size_t>(pow2(n - k))};
}

}  // namespace

MackeyFunctor induce(const MackeyFunctor& m, int n)
{
    int k = m.n;
    if (k > n)
        throw std::invalid_argument("cannot induce from a larger group");
    if (k == n)
        return m;
    std::vector<std::vector<FGAbGroup>> parts(n + 1);
    std::vector<DirectSum> ds;
    for (int j = 0; j <= n; ++j) {
        auto [src, count] = induced_level(k, n, j);
        parts[j].assign(count, m.level[src]);
        ds.push_back(direct_sum_data(parts[j]));
    }
    MackeyFunctor out;
    out.n = n;
    for (int j = 0; j <= n; ++j)
        out.level.push_back(ds[j].group);
    for (int j = 0; j < n; ++j) {
        auto lo = offsets(parts[j]), hi = offsets(parts[j + 1]);
        IntMatrix res(lo.back(), hi.back()), tr(hi.back(), lo.back());
        if (j >= k) {
            std::size_t h = parts[j + 1].size();
            IntMatrix id = IntMatrix::identity(m.level[k].ngens());
            for (std::size_t i = 0; i < parts[j].size(); ++i) {
                put_block(res, lo[i], hi[i % h], id);
                put_block(tr, hi[i % h], lo[i], id);
            }
        } else {
            for (std::size_t a = 0; a < parts[j].size(); ++a) {
                put_block(res, lo[a], hi[a], m.res[j].matrix());
                put_block(tr, hi[a], lo[a], m.tr[j].matrix());
            }
        }
        out.res.push_back(assemble(ds[j + 1], ds[j], res));
        out.tr.push_back(assemble(ds[j], ds[j + 1], tr));
    }
    for (int j = 0; j <= n; ++j) {
        auto off = offsets(parts[j]);
        std::size_t c = parts[j].size();
        IntMatrix w(off.back(), off.back());
        int src = induced_level(k, n, j).src;
        IntMatrix id = IntMatrix::identity(m.level[src].ngens());
        for (std::size_t a = 0; a + 1 < c; ++a)
            put_block(w, off[a + 1], off[a], id);
        // the last copy wraps around through the generator of C_{2^k}
        put_block(w, off[0], off[c - 1], j >= k ? id : m.weyl[j].matrix());
        out.weyl.push_back(assemble(ds[j], ds[j], w));
    }
    return out;
}

MackeyHom induce(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f, int n)
{
    int k = s.n;
    if (k == n)
        return f;
    MackeyHom out;
    for (int j = 0; j <= n; ++j) {
        auto [src, count] = induced_level(k, n, j);
        std::vector<FGAbGroup> sp(count, s.level[src]), tp(count, t.level[src]);
        auto so = offsets(sp), to = offsets(tp);
        IntMatrix m(to.back(), so.back());
        for (std::size_t a = 0; a < count; ++a)
            put_block(m, to[a], so[a], f.component[src].matrix());
        out.component.push_back(assemble(direct_sum_data(sp), direct_sum_data(tp), m));
    }
    return out;
}

MackeyFunctor restrict(const MackeyFunctor& m, int k)
{
    if (k < 0 || k > m.n)
        throw std::invalid_argument("restriction level out of range");
    MackeyFunctor out;
    out.n = k;
    out.level.assign(m.level.begin(), m.level.begin() + k + 1);
    out.res.assign(m.res.begin(), m.res.begin() + k);
    out.tr.assign(m.tr.begin(), m.tr.begin() + k);
    for (int j = 0; j <= k; ++j)
        out.weyl.push_back(power(m.weyl[j], pow2(m.n - k)));
    return out;
}

MackeyFunctor inflate(const MackeyFunctor& m, int j, int n)
{
    if (j < 0 || m.n != n - j)
        throw std::invalid_argument("inflation needs a functor for C_{2^(n-j)}");
    MackeyFunctor out = MackeyFunctor::zero(n);
    for (int i = j; i <= n; ++i) {
        out.level[i] = m.level[i - j];
        out.weyl[i] = m.weyl[i - j];
    }
    for (int i = 0; i < n; ++i) {
        if (i >= j) {
            out.res[i] = m.res[i - j];
            out.tr[i] = m.tr[i - j];
        } else {
            out.res[i] = GroupHom::zero(out.level[i + 1], out.level[i]);
            out.tr[i] = GroupHom::zero(out.level[i], out.level[i + 1]);
        }
    }
    return out;
}

MackeyFunctor signed_induce(const MackeyFunctor& m)
{
    for (int k = 0; k <= m.n; ++k)
        if (m.weyl[k] != GroupHom::identity(m.level[k]))
            throw std::invalid_argument("signed induction needs a trivial Weyl action");
    MackeyFunctor ind = induce(m, m.n + 1);
    MackeyHom one_minus_gamma = MackeyHom::identity(ind);
    for (int k = 0; k <= ind.n; ++k)
        one_minus_gamma.component[k] = one_minus_gamma.component[k] - ind.weyl[k];
    return image(ind, ind, one_minus_gamma).functor;
}

// ---------------------------------------------------------------- sums and subquotients

MackeySum direct_sum(const std::vector<MackeyFunctor>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("direct sum of no functors");
    int n = parts.front().n;
    for (const auto& p : parts)
        if (p.n != n)
            throw std::invalid_argument("direct sum of functors for different groups");
    MackeySum out;
    out.functor.n = n;
    std::vector<DirectSum> ds;
    std::vector<std::vector<std::size_t>> off;
    for (int k = 0; k <= n; ++k) {
        std::vector<FGAbGroup> g;
        for (const auto& p : parts)
            g.push_back(p.level[k]);
        ds.push_back(direct_sum_data(g));
        off.push_back(offsets(g));
        out.functor.level.push_back(ds[k].group);
    }
    auto block_sum = [&](auto pick, int from, int to) {
        IntMatrix m(off[to].back(), off[from].back());
        for (std::size_t p = 0; p < parts.size(); ++p)
            put_block(m, off[to][p], off[from][p], pick(parts[p]).matrix());
        return assemble(ds[from], ds[to], m);
    };
    for (int k = 0; k < n; ++k) {
        out.functor.res.push_back(block_sum([k](const MackeyFunctor& p) -> const GroupHom& { return p.res[k]; }, k + 1, k));
        out.functor.tr.push_back(block_sum([k](const MackeyFunctor& p) -> const GroupHom& { return p.tr[k]; }, k, k + 1));
    }
    for (int k = 0; k <= n; ++k)
        out.functor.weyl.push_back(block_sum([k](const MackeyFunctor& p) -> const GroupHom& { return p.weyl[k]; }, k, k));
    for (std::size_t p = 0; p < parts.size(); ++p) {
        MackeyHom inc, proj;
        for (int k = 0; k <= n; ++k) {
            std::size_t a = parts[p].level[k].ngens();
            IntMatrix i(off[k].back(), a), q(a, off[k].back());
            put_block(i, off[k][p], 0, IntMatrix::identity(a));
            put_block(q, 0, off[k][p], IntMatrix::identity(a));
            inc.component.push_back(assemble(single(parts[p].level[k]), ds[k], i));
            proj.component.push_back(assemble(ds[k], single(parts[p].level[k]), q));
        }
        out.inclusion.push_back(inc);
        out.projection.push_back(proj);
    }
    return out;
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b)
{
    return direct_sum({a, b}).functor;
}

SubFunctor kernel(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f)
{
    std::vector<LatticeQuotient> q;
    for (int k = 0; k <= s.n; ++k)
        q.push_back(presented_kernel(f.component[k].matrix(), s.level[k].relations(), t.level[k].relations()));
    MackeyFunctor sub = subquotient_functor(s, q);
    return {sub, inclusion_of(sub, s, q)};
}

SubFunctor image(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f)
{
    (void)s;
    std::vector<LatticeQuotient> q;
    for (int k = 0; k <= t.n; ++k)
        q.push_back(image_lattice(f.component[k]));
    MackeyFunctor sub = subquotient_functor(t, q);
    return {sub, inclusion_of(sub, t, q)};
}

QuotientFunctor cokernel(const MackeyFunctor& s, const MackeyFunctor& t, const MackeyHom& f)
{
    (void)s;
    std::vector<LatticeQuotient> q;
    for (int k = 0; k <= t.n; ++k)
        q.push_back(cokernel_lattice(f.component[k]));
    MackeyFunctor quo = subquotient_functor(t, q);
    return {quo, projection_to(t, quo, q)};
}

MackeyFunctor homology(const MackeyFunctor& b, const MackeyHom& f, const MackeyHom& g)
{
    std::vector<LatticeQuotient> q;
    for (int k = 0; k <= b.n; ++k)
        q.push_back(homology_lattice(f.component[k], g.component[k]));
    return subquotient_functor(b, q);
}

SubFunctor generated_subfunctor(const MackeyFunctor& m, const std::vector<std::vector<IntVector>>& gens)
{
    std::vector<std::vector<IntVector>> cur(m.n + 1);
    for (std::size_t k = 0; k < gens.size() && k <= static_cast<std::size_t>(m.n); ++k)
        cur[k] = gens[k];
    auto lattice = [&](int k) {
        IntMatrix R = m.level[k].relations();
        IntMatrix G = cur[k].empty() ? IntMatrix(m.level[k].ngens(), 0)
                                     : IntMatrix::from_columns(m.level[k].ngens(), cur[k]);
        return LatticeQuotient(hcat(G, R), R);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<LatticeQuotient> q;
        for (int k = 0; k <= m.n; ++k)
            q.push_back(lattice(k));
        auto push = [&](int k, const IntVector& v) {
            if (!q[k].contains(v)) {
                cur[k].push_back(m.level[k].reduce(v));
                q[k] = lattice(k);
                changed = true;
            }
        };
        for (int k = 0; k <= m.n; ++k) {
            std::vector<IntVector> here = cur[k];
            for (const auto& v : here) {
                push(k, m.weyl[k].apply(v));
                if (k > 0)
                    push(k - 1, m.res[k - 1].apply(v));
                if (k < m.n)
                    push(k + 1, m.tr[k].apply(v));
            }
        }
    }
    std::vector<LatticeQuotient> q;
    for (int k = 0; k <= m.n; ++k)
        q.push_back(lattice(k));
    MackeyFunctor sub = subquotient_functor(m, q);
    return {sub, inclusion_of(sub, m, q)};
}

QuotientFunctor quotient(const MackeyFunctor& m, const std::vector<std::vector<IntVector>>& gens)
{
    SubFunctor sub = generated_subfunctor(m, gens);
    return cokernel(sub.functor, m, sub.inclusion);
}

bool is_ses(const MackeyHom& f, const MackeyHom& g)
{
    if (f.component.size() != g.component.size())
        return false;
    for (std::size_t k = 0; k < f.component.size(); ++k) {
        if (f.component[k].target() != g.component[k].source())
            return false;
        if (!f.component[k].is_injective() || !g.component[k].is_surjective() ||
            !is_exact(f.component[k], g.component[k]))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- Hom

MackeyHomGroup::MackeyHomGroup(const MackeyFunctor& s, const MackeyFunctor& t)
{
    if (s.n != t.n)
        throw std::invalid_argument("Hom between functors for different groups");
    int n = s.n;
    offset_.push_back(0);
    src_ = s.level;
    dst_ = t.level;
    for (int k = 0; k <= n; ++k) {
        levels_.emplace_back(s.level[k], t.level[k]);
        offset_.push_back(offset_.back() + levels_.back().pairs().size());
    }
    // Constraint spaces: weyl at every level, res and tr between adjacent levels.
    struct Constraint {
        HomGroup space;
        std::size_t offset;
    };
    std::vector<Constraint> cons;
    std::size_t rows = 0;
    auto add_space = [&](const FGAbGroup& a, const FGAbGroup& b) {
        cons.push_back({HomGroup(a, b), rows});
        rows += cons.back().space.pairs().size();
        return cons.size() - 1;
    };
    std::vector<std::size_t> wi, ri, ti;
    for (int k = 0; k <= n; ++k)
        wi.push_back(add_space(s.level[k], t.level[k]));
    for (int k = 0; k < n; ++k) {
        ri.push_back(add_space(s.level[k + 1], t.level[k]));
        ti.push_back(add_space(s.level[k], t.level[k + 1]));
    }

    std::size_t vars = offset_.back();
    IntMatrix F(rows, vars);
    auto add = [&](std::size_t ci, const IntMatrix& m, std::size_t col) {
        IntVector pc = cons[ci].space.pair_coords(m);
        for (std::size_t r = 0; r < pc.size(); ++r)
            F(cons[ci].offset + r, col) += pc[r];
    };
    for (int k = 0; k <= n; ++k) {
        for (std::size_t p = 0; p < levels_[k].pairs().size(); ++p) {
            std::size_t col = offset_[k] + p;
            IntVector e(levels_[k].pairs().size());
            e[p] = 1;
            IntMatrix h = levels_[k].matrix_from_pairs(e);
            add(wi[k], t.weyl[k].matrix() * h - h * s.weyl[k].matrix(), col);
            if (k < n) {
                add(ri[k], Integer(-1) * (h * s.res[k].matrix()), col);
                add(ti[k], t.tr[k].matrix() * h, col);
            }
            if (k > 0) {
                add(ri[k - 1], t.res[k - 1].matrix() * h, col);
                add(ti[k - 1], Integer(-1) * (h * s.tr[k - 1].matrix()), col);
            }
        }
    }
    IntVector ra, rb;
    for (const auto& l : levels_)
        for (const auto& o : l.pair_orders())
            ra.push_back(o);
    for (const auto& c : cons)
        for (const auto& o : c.space.pair_orders())
            rb.push_back(o);
    auto rel = [](const IntVector& orders) {
        std::vector<IntVector> cols;
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (!orders[i].is_zero()) {
                IntVector c(orders.size());
                c[i] = orders[i];
                cols.push_back(c);
            }
        return cols.empty() ? IntMatrix(orders.size(), 0) : IntMatrix::from_columns(orders.size(), cols);
    };
    quotient_.emplace(presented_kernel(F, rel(ra), rel(rb)));
}

MackeyHom MackeyHomGroup::element(const IntVector& coords) const
{
    IntVector amb(offset_.back());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero())
            continue;
        IntVector r = quotient_->representative(i);
        for (std::size_t j = 0; j < amb.size(); ++j)
            amb[j] += coords[i] * r[j];
    }
    MackeyHom h;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        IntVector p(amb.begin() + static_cast<long>(offset_[k]), amb.begin() + static_cast<long>(offset_[k + 1]));
        h.component.emplace_back(src_[k], dst_[k], levels_[k].matrix_from_pairs(p));
    }
    return h;
}

std::vector<MackeyHom> MackeyHomGroup::basis() const
{
    std::vector<MackeyHom> out;
    std::size_t g = group().ngens();
    for (std::size_t i = 0; i < g; ++i) {
        IntVector e(g);
        e[i] = 1;
        out.push_back(element(e));
    }
    return out;
}

IntVector MackeyHomGroup::coords(const MackeyHom& f) const
{
    IntVector amb;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        IntVector p = levels_[k].pair_coords(f.component[k].matrix());
        amb.insert(amb.end(), p.begin(), p.end());
    }
    return quotient_->coords(amb);
}

FGAbGroup hom_mackey(const MackeyFunctor& s, const MackeyFunctor& t)
{
    return MackeyHomGroup(s, t).group();
}

std::optional<MackeyHom> find_isomorphism(const MackeyFunctor& s, const MackeyFunctor& t)
{
    if (s.n != t.n || s.level != t.level)
        return std::nullopt;
    if (s == t)
        return MackeyHom::identity(s);
    MackeyHomGroup hom(s, t);
    const FGAbGroup& g = hom.group();
    if (g.is_finite() && g.order() <= Integer(1 << 14)) {
        IntVector c(g.ngens());
        while (true) {
            MackeyHom f = hom.element(c);
            if (f.is_iso())
                return f;
            std::size_t i = 0;
            while (i < c.size() && c[i] + Integer(1) == g.gen_order(i))
                c[i++] = 0;
            if (i == c.size())
                return std::nullopt;
            c[i] += 1;
        }
    }
    // Levels agree, so f is an isomorphism once every component is onto. Search
    // over a size-reduced basis, greedily shrinking the cokernels.
    std::size_t r = g.ngens();
    std::vector<IntVector> coeff(r, IntVector(r));
    std::vector<std::vector<double>> flat(r);
    for (std::size_t i = 0; i < r; ++i) {
        coeff[i][i] = 1;
        IntVector e(r);
        e[i] = 1;
        for (const auto& comp : hom.element(e).component)
            for (std::size_t x = 0; x < comp.matrix().rows(); ++x)
                for (std::size_t y = 0; y < comp.matrix().cols(); ++y)
                    flat[i].push_back(static_cast<double>(comp.matrix()(x, y).to_int64()));
    }
    auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
        double d = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            d += u[i] * v[i];
        return d;
    };
    for (int pass = 0; pass < 8; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                double nj = dot(flat[j], flat[j]);
                if (i == j || nj == 0)
                    continue;
                auto mu = static_cast<long long>(std::llround(dot(flat[i], flat[j]) / nj));
                if (mu == 0)
                    continue;
                for (std::size_t x = 0; x < flat[i].size(); ++x)
                    flat[i][x] -= static_cast<double>(mu) * flat[j][x];
                for (std::size_t x = 0; x < r; ++x)
                    coeff[i][x] -= Integer(mu) * coeff[j][x];
                changed = true;
            }
        if (!changed)
            break;
    }

    auto defect = [&](const IntVector& c) {
        MackeyHom f = hom.element(c);
        std::size_t d = 0;
        for (const auto& comp : f.component) {
            FGAbGroup q = cokernel_lattice(comp).group();
            d += 64 * q.free_rank();
            for (const auto& t : q.torsion())
                d += mpz_sizeinbase(t.to_mpz().get_mpz_t(), 2);
        }
        return d;
    };
    auto step_by = [&](IntVector c, std::size_t i, int sgn) {
        for (std::size_t x = 0; x < r; ++x)
            c[x] += Integer(sgn) * coeff[i][x];
        return c;
    };
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int start = 0; start < 12; ++start) {
        IntVector c(r);
        if (start > 0)
            for (std::size_t i = 0; i < r; ++i)
                if (int k = coef(rng))
                    c = step_by(c, i, k);
        std::size_t best = defect(c);
        for (int step = 0; step < 4 * static_cast<int>(r) + 8 && best > 0; ++step) {
            IntVector next;
            std::size_t next_d = best;
            for (std::size_t i = 0; i < r; ++i)
                for (int sgn : {1, -1}) {
                    IntVector trial = step_by(c, i, sgn);
                    std::size_t d = defect(trial);
                    if (d < next_d) {
                        next_d = d;
                        next = std::move(trial);
                    }
                }
            if (next.empty())
                break;
            c = std::move(next);
            best = next_d;
        }
        if (best == 0)
            return hom.element(c);
    }
    return std::nullopt;
}

bool isomorphic(const MackeyFunctor& s, const MackeyFunctor& t)
{
    return find_isomorphism(s, t).has_value();
}

// ---------------------------------------------------------------- permutation modules

PermutationSet::PermutationSet(int n, std::vector<std::size_t> gamma) : n_(n), gamma_(std::move(gamma))
{
    std::size_t size = gamma_.size();
    for (int k = 0; k <= n; ++k) {
        // generator of C_{2^k} is gamma^{2^{n-k}}
        std::vector<std::size_t> g(size);
        for (std::size_t x = 0; x < size; ++x) {
            std::size_t y = x;
            for (std::uint64_t i = 0; i < pow2(n - k); ++i)
                y = gamma_[y];
            g[x] = y;
        }
        std::vector<std::size_t> index(size, SIZE_MAX);
        std::vector<std::vector<std::size_t>> orbits;
        for (std::size_t x = 0; x < size; ++x) {
            if (index[x] != SIZE_MAX)
                continue;
            std::vector<std::size_t> orb;
            std::size_t y = x;
            do {
                index[y] = orbits.size();
                orb.push_back(y);
                y = g[y];
            } while (y != x);
            orbits.push_back(orb);
        }
        orbits_.push_back(std::move(orbits));
        orbit_index_.push_back(std::move(index));
    }
}

MackeyFunctor fixed_point_functor(const PermutationSet& x, const Integer& modulus)
{
    int n = x.n();
    MackeyFunctor m;
    m.n = n;
    auto group = [&](std::size_t rank) {
        if (modulus.is_zero())
            return FGAbGroup::integers(rank);
        if (modulus.is_one())
            return FGAbGroup::zero();
        return FGAbGroup(0, IntVector(rank, modulus));
    };
    for (int k = 0; k <= n; ++k)
        m.level.push_back(group(x.orbit_count(k)));
    for (int k = 0; k < n; ++k) {
        IntMatrix res(x.orbit_count(k), x.orbit_count(k + 1));
        IntMatrix tr(x.orbit_count(k + 1), x.orbit_count(k));
        for (std::size_t o = 0; o < x.orbit_count(k); ++o) {
            std::size_t up = x.orbit_of(k + 1, x.orbit(k, o).front());
            res(o, up) = 1;
            tr(up, o) = static_cast<long long>(2 * x.orbit(k, o).size() / x.orbit(k + 1, up).size());
        }
        if (m.level[k].is_zero()) {
            res = IntMatrix(0, m.level[k + 1].ngens());
            tr = IntMatrix(m.level[k + 1].ngens(), 0);
        }
        m.res.emplace_back(m.level[k + 1], m.level[k], res);
        m.tr.emplace_back(m.level[k], m.level[k + 1], tr);
    }
    for (int k = 0; k <= n; ++k) {
        IntMatrix w(m.level[k].ngens(), m.level[k].ngens());
        if (!m.level[k].is_zero())
            for (std::size_t o = 0; o < x.orbit_count(k); ++o)
                w(x.orbit_of(k, x.gamma()[x.orbit(k, o).front()]), o) = 1;
        m.weyl.emplace_back(m.level[k], m.level[k], w);
    }
    return m;
}

IntMatrix fixed_point_matrix(const PermutationSet& x, const PermutationSet& y, const IntMatrix& d, int k)
{
    IntMatrix out(y.orbit_count(k), x.orbit_count(k));
    IntVector v(y.size());
    for (std::size_t o = 0; o < x.orbit_count(k); ++o) {
        std::fill(v.begin(), v.end(), Integer(0));
        for (std::size_t c : x.orbit(k, o))
            for (std::size_t r = 0; r < y.size(); ++r)
                if (!d(r, c).is_zero())
                    v[r] += d(r, c);
        for (std::size_t p = 0; p < y.orbit_count(k); ++p)
            out(p, o) = v[y.orbit(k, p).front()];
    }
    return out;
}

// ---------------------------------------------------------------- printing

std::string lewis_diagram(const MackeyFunctor& m)
{
    std::ostringstream os;
    for (int k = m.n; k >= 0; --k) {
        os << "level " << k << "  " << m.level[k].str();
        if (!m.level[k].is_zero() && m.weyl[k] != GroupHom::identity(m.level[k]))
            os << "  weyl " << matrix_str(m.weyl[k]);
        os << "\n";
        if (k > 0 && !m.level[k].is_zero() && !m.level[k - 1].is_zero())
            os << "   res " << matrix_str(m.res[k - 1]) << " | tr " << matrix_str(m.tr[k - 1]) << "\n";
    }
    return os.str();
}

std::string level_summary(const MackeyFunctor& m)
{
    std::string s;
    for (int k = m.n; k >= 0; --k) {
        s += m.level[k].str();
        if (k > 0)
            s += " | ";
    }
    return s;
}

}  // namespace mss
