#include "mackeyss/mackey.hpp"
#include "support/random_functors.hpp"

#include <gtest/gtest.h>

using namespace mss;

namespace {

GroupHom scalar_map(const FGAbGroup& a, const FGAbGroup& b, long long x)
{
    if (a.is_zero() || b.is_zero())
        return GroupHom::zero(a, b);
    return GroupHom(a, b, IntMatrix{{x}});
}

// 0 -> B*(1,n-2) -> B(2,n-2) -> B(1,n-1) -> 0 written out by hand.
struct Ses {
    MackeyFunctor a, b, c;
    MackeyHom f, g;
};

Ses b2_extension(int n)
{
    Ses s{make_Bstar(n - 2, n), make_B(2, n - 2, n), make_B(1, n - 1, n), {}, {}};
    for (int k = 0; k <= n; ++k) {
        s.f.component.push_back(scalar_map(s.a.level[k], s.b.level[k], k == n ? 2 : 1));
        s.g.component.push_back(scalar_map(s.b.level[k], s.c.level[k], 1));
    }
    return s;
}

}  // namespace

TEST(Named, ZDiagram)
{
    MackeyFunctor z = make_Z(2);
    for (int k = 0; k <= 2; ++k) {
        EXPECT_EQ(z.level[k], FGAbGroup::integers());
        EXPECT_EQ(z.weyl[k], GroupHom::identity(z.level[k]));
    }
    for (int k = 0; k < 2; ++k) {
        EXPECT_EQ(z.res[k].matrix(), IntMatrix{{1}});
        EXPECT_EQ(z.tr[k].matrix(), IntMatrix{{2}});
    }
}

TEST(Named, BFamilies)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            MackeyFunctor b = make_B(1, k - 1, n), bs = make_Bstar(k - 1, n);
            for (int i = 0; i <= n; ++i) {
                FGAbGroup expect = i >= k ? FGAbGroup::cyclic(2) : FGAbGroup::zero();
                EXPECT_EQ(b.level[i], expect);
                EXPECT_EQ(bs.level[i], expect);
            }
            for (int i = k; i < n; ++i) {
                EXPECT_EQ(b.res[i].matrix(), IntMatrix{{1}});
                EXPECT_TRUE(b.tr[i].is_zero());
                EXPECT_TRUE(bs.res[i].is_zero());
                EXPECT_EQ(bs.tr[i].matrix(), IntMatrix{{1}});
            }
        }
    MackeyFunctor b2 = make_B(2, 0, 2);
    EXPECT_EQ(b2.level[2], FGAbGroup::cyclic(4));
    EXPECT_EQ(b2.level[1], FGAbGroup::cyclic(2));
    EXPECT_TRUE(b2.level[0].is_zero());
    EXPECT_EQ(make_named("B(2,0)", 2), b2);
    EXPECT_EQ(make_named("Bstar(1,1)", 3), make_Bstar(1, 3));
    EXPECT_EQ(make_named("B*(1,1)", 3), make_Bstar(1, 3));
    EXPECT_THROW(make_named("B(1,3)", 3), std::invalid_argument);
    EXPECT_THROW(make_named("Q", 3), std::invalid_argument);
}

TEST(Validate, NamedFunctorsPass)
{
    for (int n = 0; n <= 5; ++n) {
        EXPECT_TRUE(validate(make_Z(n)).empty());
        EXPECT_TRUE(validate(make_Zstar(n)).empty());
        for (int k = 0; k < n; ++k) {
            EXPECT_TRUE(validate(make_Bstar(k, n)).empty());
            for (int j = 1; j <= 3; ++j)
                EXPECT_TRUE(validate(make_B(j, k, n)).empty()) << j << " " << k << " " << n;
        }
    }
}

TEST(Validate, PlantedDefect)
{
    MackeyFunctor z = make_Z(3);
    z.tr[1] = GroupHom(z.level[1], z.level[2], IntMatrix{{3}});
    auto bad = validate(z);
    ASSERT_FALSE(bad.empty());
    bool found = false;
    for (const auto& b : bad)
        found = found || b.find("double coset formula fails at level 1") != std::string::npos;
    EXPECT_TRUE(found);
}

TEST(Induce, ZFromC2ToC4)
{
    MackeyFunctor m = induce(make_Z(1), 2);
    EXPECT_TRUE(validate(m).empty());
    EXPECT_EQ(m.level[2], FGAbGroup::integers());
    EXPECT_EQ(m.level[1], FGAbGroup::integers(2));
    EXPECT_EQ(m.level[0], FGAbGroup::integers(2));
    // gamma swaps the two copies
    EXPECT_EQ(m.weyl[1].matrix(), (IntMatrix{{0, 1}, {1, 0}}));
    EXPECT_EQ(induce(make_B(1, 0, 2), 2), make_B(1, 0, 2));
}

TEST(Induce, MatchesInflatedPermutationModule)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k) {
            // F2[Q] for Q = C_{2^n}/C_{2^{k+1}} acting on itself
            std::size_t q = std::size_t{1} << (n - k - 1);
            std::vector<std::size_t> gamma(q);
            for (std::size_t i = 0; i < q; ++i)
                gamma[i] = (i + 1) % q;
            MackeyFunctor fp = fixed_point_functor(PermutationSet(n - k - 1, gamma), 2);
            MackeyFunctor a = induce(make_B(1, k, k + 1), n);
            MackeyFunctor b = inflate(fp, k + 1, n);
            EXPECT_TRUE(validate(b).empty());
            EXPECT_TRUE(isomorphic(a, b)) << n << " " << k;
        }
}

TEST(Inflate, Basics)
{
    MackeyFunctor m = make_B(2, 0, 2);
    EXPECT_EQ(inflate(m, 0, 2), m);
    MackeyFunctor inf = inflate(make_Z(1), 2, 3);
    EXPECT_TRUE(validate(inf, false).empty());
    EXPECT_FALSE(validate(inf).empty());
    EXPECT_TRUE(restrict(inf, 1).is_zero());
    EXPECT_EQ(inf.level[3], FGAbGroup::integers());
}

TEST(SignedInduce, Examples)
{
    for (int n = 1; n <= 4; ++n) {
        MackeyFunctor zm = signed_induce(make_Z(n - 1));
        EXPECT_TRUE(validate(zm).empty());
        EXPECT_EQ(zm.level[n - 1], FGAbGroup::integers());
        EXPECT_EQ(zm.weyl[n - 1].matrix(), IntMatrix{{-1}});
        EXPECT_TRUE(zm.level[n].is_zero());
    }
    EXPECT_TRUE(signed_induce(MackeyFunctor::zero(2)).is_zero());
    MackeyFunctor z2 = fixed_point_functor(PermutationSet(2, {0}), 2);
    MackeyFunctor s = signed_induce(z2);
    EXPECT_TRUE(validate(s).empty());
    for (int k = 0; k <= 3; ++k)
        EXPECT_EQ(s.weyl[k], GroupHom::identity(s.level[k]));
    EXPECT_EQ(s.level[2], FGAbGroup::cyclic(2));
    EXPECT_THROW(signed_induce(induce(make_Z(0), 1)), std::invalid_argument);
}

TEST(Hom, RepresentsLevel)
{
    mss::testing::RandomFunctors gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + trial % 3;
        MackeyFunctor m = gen.make(n, 2);
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(hom_mackey(induce(make_Z(k), n), m), m.level[k]) << lewis_diagram(m) << k;
    }
}

TEST(Hom, Examples)
{
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(hom_mackey(make_Z(n), make_Z(n)), FGAbGroup::integers());
    for (int k = 2; k <= 5; ++k)
        EXPECT_TRUE(hom_mackey(make_Bstar(k - 2, k), make_B(1, k - 1, k)).is_zero()) << k;
    EXPECT_EQ(hom_mackey(make_B(1, 1, 2), make_Bstar(1, 2)), FGAbGroup::cyclic(2));
}

TEST(Ses, B2Extension)
{
    for (int n = 2; n <= 5; ++n) {
        Ses s = b2_extension(n);
        EXPECT_TRUE(validate_hom(s.a, s.b, s.f).empty());
        EXPECT_TRUE(validate_hom(s.b, s.c, s.g).empty());
        EXPECT_TRUE(is_ses(s.f, s.g));
        // nonsplit: no section of g
        MackeyHomGroup hom(s.c, s.b);
        bool split = false;
        for (const auto& x : hom.basis())
            split = split || (s.g * x) == MackeyHom::identity(s.c);
        EXPECT_FALSE(split);
        EXPECT_FALSE(isomorphic(s.b, direct_sum(s.a, s.c)));
    }
}

TEST(Ses, KernelImageCokernel)
{
    Ses s = b2_extension(3);
    EXPECT_TRUE(isomorphic(kernel(s.b, s.c, s.g).functor, s.a));
    EXPECT_TRUE(isomorphic(image(s.a, s.b, s.f).functor, s.a));
    EXPECT_TRUE(isomorphic(cokernel(s.a, s.b, s.f).functor, s.c));
    EXPECT_TRUE(homology(s.b, s.f, s.g).is_zero());
}

TEST(Ses, InductionIsExact)
{
    for (int n = 3; n <= 4; ++n) {
        Ses s = b2_extension(n - 1);
        MackeyHom f = induce(s.a, s.b, s.f, n), g = induce(s.b, s.c, s.g, n);
        MackeyFunctor a = induce(s.a, n), b = induce(s.b, n), c = induce(s.c, n);
        EXPECT_TRUE(validate_hom(a, b, f).empty());
        EXPECT_TRUE(validate_hom(b, c, g).empty());
        EXPECT_TRUE(is_ses(f, g));
    }
}

TEST(DirectSum, SplitsAndProjects)
{
    MackeyFunctor a = make_B(2, 0, 3), b = make_Zstar(3);
    MackeySum s = direct_sum({a, b});
    EXPECT_TRUE(validate(s.functor).empty());
    EXPECT_EQ(s.projection[0] * s.inclusion[0], MackeyHom::identity(a));
    EXPECT_EQ(s.projection[1] * s.inclusion[1], MackeyHom::identity(b));
    EXPECT_TRUE((s.projection[1] * s.inclusion[0]).is_zero());
    EXPECT_EQ(s.inclusion[0] * s.projection[0] + s.inclusion[1] * s.projection[1], MackeyHom::identity(s.functor));
    EXPECT_TRUE(isomorphic(s.functor, direct_sum(b, a)));
}

TEST(Quotient, OfZByGeneratedSubfunctor)
{
    // Z/a below level j and Z/(2^{i-j} a) above
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (long long a : {1LL, 2LL, 3LL, 6LL}) {
                std::vector<std::vector<IntVector>> gens(n + 1);
                gens[j].push_back({Integer(a)});
                MackeyFunctor q = quotient(make_Z(n), gens).functor;
                EXPECT_TRUE(validate(q).empty());
                for (int i = 0; i <= n; ++i) {
                    long long expect = i <= j ? a : (a << (i - j));
                    EXPECT_EQ(q.level[i].order(), Integer(expect)) << n << j << a << i;
                }
            }
}

TEST(Random, FunctorsValidate)
{
    mss::testing::RandomFunctors gen(2024);
    int relabelled = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 5;
        MackeyFunctor m = gen.make(n);
        auto bad = validate(m);
        EXPECT_TRUE(bad.empty()) << lewis_diagram(m) << bad.front();
        if (trial % 10 == 3 || trial % 10 == 4) {
            // a relabelled copy, so the search cannot take the equality shortcut
            MackeyFunctor other = gen.make(n, 1);
            MackeyFunctor ab = direct_sum(m, other), ba = direct_sum(other, m);
            EXPECT_TRUE(isomorphic(ab, ba)) << lewis_diagram(m) << lewis_diagram(other);
            relabelled += ab != ba;
        }
    }
    EXPECT_GT(relabelled, 5);
}

TEST(Random, InductionRestrictionAdjunction)
{
    // Hom(Ind_k M, N) = Hom(M, Res_k N)
    mss::testing::RandomFunctors gen(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 3, k = gen.uniform(0, n - 1);
        MackeyFunctor m = gen.make(k, 1), nn = gen.make(n, 2);
        EXPECT_EQ(hom_mackey(induce(m, n), nn), hom_mackey(m, restrict(nn, k)));
    }
}

TEST(Random, BFunctorsAnnihilated)
{
    // 2^j kills B(j,k)
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (int j = 1; j <= 3; ++j) {
                MackeyFunctor b = make_B(j, k, n);
                for (int i = 0; i <= n; ++i)
                    EXPECT_TRUE(GroupHom::scalar(b.level[i], Integer(1LL << j)).is_zero());
                EXPECT_FALSE(GroupHom::scalar(b.level[n], Integer(1LL << (j - 1))).is_zero() &&
                             n - k >= j);
            }
}

TEST(Print, LewisDiagram)
{
    std::string d = lewis_diagram(make_B(2, 0, 2));
    EXPECT_NE(d.find("level 2  Z/4"), std::string::npos) << d;
    EXPECT_NE(d.find("level 0  0"), std::string::npos) << d;
    EXPECT_EQ(level_summary(make_B(2, 0, 2)), "Z/4 | Z/2 | 0");
    EXPECT_NE(lewis_diagram(signed_induce(make_Z(1))).find("weyl"), std::string::npos);
}
