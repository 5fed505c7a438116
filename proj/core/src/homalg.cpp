#include "mackeyss/homalg.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace mss {

namespace {

std::size_t copies(int e)
{
    return std::size_t{1} << e;
}

MackeyHom compose_sum(const MackeySum& sum, const std::vector<MackeyHom>& parts)
{
    MackeyHom total = parts[0] * sum.projection[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        total = total + parts[i] * sum.projection[i];
    return total;
}

// Precomposition Hom(a, n) -> Hom(b, n) with d : b -> a.
GroupHom precompose(const MackeyHomGroup& from, const MackeyHomGroup& to, const MackeyHom& d)
{
    auto basis = from.basis();
    std::vector<IntVector> cols;
    for (const auto& f : basis)
        cols.push_back(to.coords(f * d));
    IntMatrix m = IntMatrix::from_columns(to.group().ngens(), cols);
    return GroupHom(from.group(), to.group(), m);
}

GroupHom postcompose(const MackeyHomGroup& from, const MackeyHomGroup& to, const MackeyHom& g)
{
    auto basis = from.basis();
    std::vector<IntVector> cols;
    for (const auto& f : basis)
        cols.push_back(to.coords(g * f));
    IntMatrix m = IntMatrix::from_columns(to.group().ngens(), cols);
    return GroupHom(from.group(), to.group(), m);
}

GroupHom zero_into(const FGAbGroup& g)
{
    return GroupHom::zero(FGAbGroup::zero(), g);
}

// Generators of m, level by level from the top, skipping anything already in
// the subfunctor generated so far.
std::vector<std::pair<int, IntVector>> functor_generators(const MackeyFunctor& m)
{
    std::vector<std::pair<int, IntVector>> gens;
    std::vector<std::vector<IntVector>> per_level(m.n + 1);
    for (int k = m.n; k >= 0; --k) {
        for (std::size_t i = 0; i < m.level[k].ngens(); ++i) {
            IntVector e(m.level[k].ngens());
            e[i] = 1;
            SubFunctor sub = generated_subfunctor(m, per_level);
            if (!image_lattice(sub.inclusion.component[k]).contains(e)) {
                per_level[k].push_back(e);
                gens.emplace_back(k, e);
            }
        }
    }
    return gens;
}

struct Cover {
    MackeyFunctor module;
    MackeyHom map;
};

Cover cover_of(const MackeyFunctor& m)
{
    auto gens = functor_generators(m);
    if (gens.empty())
        return {MackeyFunctor::zero(m.n), MackeyHom::zero(MackeyFunctor::zero(m.n), m)};
    std::vector<MackeyFunctor> parts;
    std::vector<MackeyHom> maps;
    for (const auto& [k, x] : gens) {
        parts.push_back(free_functor(k, m.n));
        maps.push_back(yoneda_map(k, m, x));
    }
    MackeySum sum = direct_sum(parts);
    return {sum.functor, compose_sum(sum, maps)};
}

bool all_exact(const MackeyHom& f, const MackeyHom& g)
{
    for (std::size_t k = 0; k < f.component.size(); ++k)
        if (!is_exact(f.component[k], g.component[k]))
            return false;
    return true;
}

}  // namespace

MackeyFunctor free_functor(int k, int n)
{
    return induce(make_Z(k), n);
}

MackeyHom yoneda_map(int k, const MackeyFunctor& target, const IntVector& x)
{
    int n = target.n;
    MackeyFunctor src = free_functor(k, n);
    MackeyHom f;
    // images of gamma^i x at level k
    std::vector<IntVector> orbit{target.level[k].reduce(x)};
    for (std::size_t i = 1; i < copies(n - k); ++i)
        orbit.push_back(target.weyl[k].apply(orbit.back()));
    for (int j = 0; j <= n; ++j) {
        std::vector<IntVector> cols;
        if (j >= k) {
            for (std::size_t i = 0; i < copies(n - j); ++i) {
                IntVector v = orbit[i];
                for (int l = k; l < j; ++l)
                    v = target.tr[l].apply(v);
                cols.push_back(v);
            }
        } else {
            for (std::size_t a = 0; a < copies(n - k); ++a) {
                IntVector v = orbit[a];
                for (int l = k - 1; l >= j; --l)
                    v = target.res[l].apply(v);
                cols.push_back(v);
            }
        }
        f.component.emplace_back(src.level[j], target.level[j],
                                 IntMatrix::from_columns(target.level[j].ngens(), cols));
    }
    return f;
}

std::vector<std::string> Resolution::check() const
{
    std::vector<std::string> bad;
    if (modules.empty() || maps.size() != modules.size()) {
        bad.push_back("resolution needs one map per module");
        return bad;
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const MackeyFunctor& src = modules[i];
        const MackeyFunctor& dst = i == 0 ? target : modules[i - 1];
        for (const auto& v : validate_hom(src, dst, maps[i]))
            bad.push_back(fmt::format("map {}: {}", i, v));
    }
    if (!bad.empty())
        return bad;
    for (const auto& c : maps[0].component)
        if (!c.is_surjective()) {
            bad.push_back("augmentation is not surjective");
            break;
        }
    for (std::size_t i = 1; i < maps.size(); ++i) {
        if (!(maps[i - 1] * maps[i]).is_zero())
            bad.push_back(fmt::format("maps {} and {} do not compose to zero", i - 1, i));
        else if (!all_exact(maps[i], maps[i - 1]))
            bad.push_back(fmt::format("not exact at stage {}", i - 1));
    }
    return bad;
}

Resolution resolution_B(int k, int n)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("resolution_B needs 1 <= k <= n");
    MackeyFunctor b = make_B(1, k - 1, k);
    MackeyFunctor z = make_Z(k), ind = free_functor(k - 1, k);
    IntVector one{Integer(1)};
    Resolution r;
    r.target = b;
    r.modules = {z, ind, ind, z};
    r.maps = {
        yoneda_map(k, b, one),
        yoneda_map(k - 1, z, one),
        yoneda_map(k - 1, ind, IntVector{Integer(1), Integer(-1)}),
        yoneda_map(k, ind, one),
    };
    if (k == n)
        return r;
    Resolution up;
    up.target = induce(b, n);
    for (std::size_t i = 0; i < r.modules.size(); ++i) {
        up.modules.push_back(induce(r.modules[i], n));
        const MackeyFunctor& dst = i == 0 ? r.target : r.modules[i - 1];
        up.maps.push_back(induce(r.modules[i], dst, r.maps[i], n));
    }
    return up;
}

Resolution resolution_Bstar(int k, int n)
{
    if (k < 2 || k > n)
        throw std::invalid_argument("resolution_Bstar needs 2 <= k <= n");
    MackeyFunctor bs = make_Bstar(k - 2, k);
    MackeyFunctor p0 = free_functor(k - 1, k);
    MackeySum p1 = direct_sum({free_functor(k - 2, k), p0});
    Resolution r;
    r.target = bs;
    r.modules = {p0, p1.functor};
    // unit of the adjunction on the first summand, 1 + gamma on the second
    MackeyHom unit = yoneda_map(k - 2, p0, IntVector{Integer(1), Integer(0)});
    MackeyHom norm = yoneda_map(k - 1, p0, IntVector{Integer(1), Integer(1)});
    r.maps = {yoneda_map(k - 1, bs, IntVector{Integer(1)}), compose_sum(p1, {unit, norm})};
    if (k == n)
        return r;
    Resolution up;
    up.target = induce(bs, n);
    for (std::size_t i = 0; i < r.modules.size(); ++i) {
        up.modules.push_back(induce(r.modules[i], n));
        const MackeyFunctor& dst = i == 0 ? r.target : r.modules[i - 1];
        up.maps.push_back(induce(r.modules[i], dst, r.maps[i], n));
    }
    return up;
}

Resolution projective_cover(const MackeyFunctor& m)
{
    Resolution r;
    r.target = m;
    Cover c0 = cover_of(m);
    SubFunctor k = kernel(c0.module, m, c0.map);
    Cover c1 = cover_of(k.functor);
    r.modules = {c0.module, c1.module};
    r.maps = {c0.map, k.inclusion * c1.map};
    return r;
}

std::optional<Resolution> registered_resolution(const MackeyFunctor& m)
{
    int n = m.n;
    for (int k = 0; k <= n; ++k)
        if (m == free_functor(k, n)) {
            Resolution r;
            r.target = m;
            r.modules = {m};
            r.maps = {MackeyHom::identity(m)};
            return r;
        }
    for (int k = 1; k <= n; ++k)
        if (m == induce(make_B(1, k - 1, k), n))
            return resolution_B(k, n);
    for (int k = 2; k <= n; ++k)
        if (m == induce(make_Bstar(k - 2, k), n))
            return resolution_Bstar(k, n);
    return std::nullopt;
}

std::vector<ExtResult> ext(const Resolution& r, const MackeyFunctor& n, int max_degree)
{
    if (max_degree < 0 || max_degree > 1)
        throw std::invalid_argument("Ext is only computed in degrees 0 and 1");
    std::vector<ExtResult> out;
    MackeyHomGroup h0(r.modules[0], n);
    // d^0 : Hom(P0, N) -> Hom(P1, N), or into 0 when P0 is the whole resolution
    std::optional<MackeyHomGroup> h1;
    GroupHom d0 = GroupHom::zero(h0.group(), FGAbGroup::zero());
    if (r.modules.size() > 1) {
        h1.emplace(r.modules[1], n);
        d0 = precompose(h0, *h1, r.maps[1]);
    }
    out.push_back({0, homology_lattice(zero_into(h0.group()), d0).group()});
    if (max_degree == 0)
        return out;
    if (r.modules.size() == 1) {
        out.push_back({1, FGAbGroup::zero()});
        return out;
    }
    if (r.modules.size() > 2) {
        MackeyHomGroup h2(r.modules[2], n);
        GroupHom d1 = precompose(*h1, h2, r.maps[2]);
        out.push_back({1, homology_lattice(d0, d1).group()});
        return out;
    }
    // With only two stages use Ext^1 = coker(Hom(P0, N) -> Hom(K, N)), K the
    // image of P1 in P0.
    SubFunctor k = image(r.modules[1], r.modules[0], r.maps[1]);
    MackeyHomGroup hk(k.functor, n);
    out.push_back({1, cokernel_lattice(precompose(h0, hk, k.inclusion)).group()});
    return out;
}

std::vector<ExtResult> ext(const MackeyFunctor& m, const MackeyFunctor& n, int max_degree)
{
    if (m.n != n.n)
        throw std::invalid_argument("Ext needs functors for the same group");
    if (auto r = registered_resolution(m))
        return ext(*r, n, max_degree);
    return ext(projective_cover(m), n, max_degree);
}

ShortExactSequence ses_B2(int n)
{
    if (n < 2)
        throw std::invalid_argument("ses_B2 needs n >= 2");
    ShortExactSequence s{make_Bstar(n - 2, n), make_B(2, n - 2, n), make_B(1, n - 1, n), {}, {}};
    for (int k = 0; k <= n; ++k) {
        const FGAbGroup &a = s.sub.level[k], &b = s.middle.level[k], &c = s.quotient.level[k];
        // 1 -> 2 at the top, 1 -> 1 one level down; reduction mod 2 onto B(1,n-1)
        s.f.component.push_back(a.is_zero() ? GroupHom::zero(a, b)
                                            : GroupHom(a, b, IntMatrix{{k == n ? 2 : 1}}));
        s.g.component.push_back(c.is_zero() ? GroupHom::zero(b, c) : GroupHom(b, c, IntMatrix{{1}}));
    }
    return s;
}

ShortExactSequence induce(const ShortExactSequence& s, int n)
{
    return {induce(s.sub, n),
            induce(s.middle, n),
            induce(s.quotient, n),
            induce(s.sub, s.middle, s.f, n),
            induce(s.middle, s.quotient, s.g, n)};
}

bool is_nonsplit(const ShortExactSequence& s)
{
    MackeyHomGroup from(s.quotient, s.middle), to(s.quotient, s.quotient);
    GroupHom post = postcompose(from, to, s.g);
    return !image_lattice(post).contains(to.coords(MackeyHom::identity(s.quotient)));
}

std::string InducedFunctor::str(int n) const
{
    if (level == n)
        return name;
    return fmt::format("Ind_{} {}", level, name);
}

InducedFunctor induced_named(const std::string& name, int level)
{
    return {level, make_named(name, level), name};
}

ForcedExtension forced_B2(int k, int quotient_s, int sub_s)
{
    ForcedExtension e;
    e.level = k;
    e.quotient_s = quotient_s;
    e.sub_s = sub_s;
    e.ses = ses_B2(k);
    e.quotient = {k, e.ses.quotient, fmt::format("B(1,{})", k - 1)};
    e.sub = {k, e.ses.sub, fmt::format("Bstar(1,{})", k - 2)};
    e.middle = {k, e.ses.middle, fmt::format("B(2,{})", k - 2)};
    return e;
}

FGAbGroup ExtCache::ext1(const InducedFunctor& q, const InducedFunctor& t, int n, std::string* why)
{
    auto say = [&](const std::string& s) {
        if (why)
            *why = s;
    };
    // Ext(Ind_L Q', T) = Ext_L(Q', Res_L T) and Ext(Q, Ind_L T') = Ext_L(Res_L Q, T')
    bool vanish_t = t.level < q.level ? t.base.is_zero() : restrict(t.base, q.level).is_zero();
    if (vanish_t) {
        say(fmt::format("{} restricts to zero on C_{}", t.str(n), 1 << q.level));
        return FGAbGroup::zero();
    }
    bool vanish_q = q.level < t.level ? q.base.is_zero() : restrict(q.base, t.level).is_zero();
    if (vanish_q) {
        say(fmt::format("{} restricts to zero on C_{}", q.str(n), 1 << t.level));
        return FGAbGroup::zero();
    }
    std::string key = fmt::format("{}@{}|{}@{}|{}", q.name, q.level, t.name, t.level, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
        say("Ext^1 = " + it->second.str() + " (cached)");
        return it->second;
    }
    // work over C_{2^L} with L the inducing level of q: Res_L Ind_{L'} T' splits
    // into copies of Res_L T' (L <= L') or of Ind_{L'}^L T' (L' < L)
    int l = q.level;
    MackeyFunctor part;
    std::size_t count;
    if (t.level >= l) {
        part = restrict(t.base, l);
        count = copies(n - t.level);
    } else {
        part = induce(t.base, l);
        count = copies(n - l);
    }
    FGAbGroup one = ext(q.base, part, 1)[1].group;
    FGAbGroup total = direct_sum_data(std::vector<FGAbGroup>(count, one)).group;
    memo_[key] = total;
    say("Ext^1 = " + total.str());
    return total;
}

ColumnResolution resolve_column(int n, const std::vector<ColumnEntry>& entries,
                                const std::vector<ForcedExtension>& forced)
{
    std::vector<ColumnEntry> sorted = entries;
    std::stable_sort(sorted.begin(), sorted.end(), [](const ColumnEntry& a, const ColumnEntry& b) { return a.s > b.s; });

    auto matches = [](const InducedFunctor& a, const InducedFunctor& b) {
        return a.level == b.level && a.base == b.base;
    };
    // every forced extension must find its two entries
    std::vector<int> sub_index(forced.size(), -1), quot_index(forced.size(), -1);
    for (std::size_t f = 0; f < forced.size(); ++f) {
        const ForcedExtension& e = forced[f];
        if (!is_ses(e.ses.f, e.ses.g) || !is_nonsplit(e.ses))
            throw ExtensionError(fmt::format("forced extension at level {} is not a nonsplit extension", e.level));
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            bool used = false;
            for (std::size_t g = 0; g < f; ++g)
                used = used || sub_index[g] == static_cast<int>(i) || quot_index[g] == static_cast<int>(i);
            if (used)
                continue;
            if (sub_index[f] < 0 && sorted[i].s == e.sub_s && matches(sorted[i].functor, e.sub))
                sub_index[f] = static_cast<int>(i);
            else if (quot_index[f] < 0 && sorted[i].s == e.quotient_s && matches(sorted[i].functor, e.quotient))
                quot_index[f] = static_cast<int>(i);
        }
        if (sub_index[f] < 0 || quot_index[f] < 0)
            throw ExtensionError(fmt::format("forced extension at level {} refers to missing entries", e.level));
    }

    ColumnResolution out;
    ExtCache cache;
    // summands built so far, with the entry they came from (or the forced index)
    struct Piece {
        InducedFunctor functor;
        int entry;
    };
    std::vector<Piece> built;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const ColumnEntry& q = sorted[i];
        int merge = -1;
        for (std::size_t f = 0; f < forced.size(); ++f)
            if (quot_index[f] == static_cast<int>(i))
                merge = static_cast<int>(f);
        for (std::size_t p = 0; p < built.size(); ++p) {
            const Piece& piece = built[p];
            if (sorted[static_cast<std::size_t>(piece.entry)].s == q.s)
                continue;
            if (merge >= 0 && piece.entry == sub_index[static_cast<std::size_t>(merge)]) {
                out.log.push_back(fmt::format("s={} {} over s={} {}: forced extension {}", q.s, q.functor.str(n),
                                              sorted[static_cast<std::size_t>(piece.entry)].s, piece.functor.str(n),
                                              forced[static_cast<std::size_t>(merge)].middle.str(n)));
                continue;
            }
            std::string why;
            FGAbGroup e = cache.ext1(q.functor, piece.functor, n, &why);
            out.log.push_back(fmt::format("s={} {} over s={} {}: {}", q.s, q.functor.str(n),
                                          sorted[static_cast<std::size_t>(piece.entry)].s, piece.functor.str(n), why));
            if (!e.is_zero())
                throw ExtensionError(fmt::format("unresolved extension of {} (s={}) by {}: Ext^1 = {}",
                                                 q.functor.str(n), q.s, piece.functor.str(n), e.str()));
        }
        if (merge >= 0) {
            auto f = static_cast<std::size_t>(merge);
            for (auto& piece : built)
                if (piece.entry == sub_index[f])
                    piece.functor = forced[f].middle;
        } else {
            built.push_back({q.functor, static_cast<int>(i)});
        }
    }

    std::vector<MackeyFunctor> parts;
    for (const auto& p : built) {
        out.summands.push_back(p.functor);
        parts.push_back(p.functor.value(n));
    }
    out.total = parts.empty() ? MackeyFunctor::zero(n) : direct_sum(parts).functor;
    return out;
}

}  // namespace mss
