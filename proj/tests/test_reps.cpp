#include "mackeyss/reps.hpp"

#include "support/rep_oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mss;
using mss::testing::brute_force_decompositions;
using mss::testing::random_fixed_point_free;

namespace {

bool rotation_power_is_identity(int n, std::uint64_t m, int k)
{
    // gamma^{2^{n-k}} generates C_{2^k}
    const double pi = std::acos(-1.0);
    double a = 2 * pi * static_cast<double>(m) / std::ldexp(1.0, n);
    double c = std::cos(a), s = std::sin(a);
    double r00 = 1, r01 = 0, r10 = 0, r11 = 1;
    for (long i = 0; i < (1L << (n - k)); ++i) {
        double t00 = c * r00 - s * r10, t01 = c * r01 - s * r11;
        double t10 = s * r00 + c * r10, t11 = s * r01 + c * r11;
        r00 = t00, r01 = t01, r10 = t10, r11 = t11;
    }
    return std::abs(r00 - 1) < 1e-9 && std::abs(r11 - 1) < 1e-9 && std::abs(r01) < 1e-9 && std::abs(r10) < 1e-9;
}

}  // namespace

TEST(Reps, RestrictExamples)
{
    for (int n = 2; n <= 5; ++n) {
        EXPECT_EQ(restrict(RepSum::lambda_prime(n), n - 1), RepSum::sigma(n - 1, 2));
        EXPECT_EQ(restrict(RepSum::rho(n), n - 1), 2 * RepSum::rho(n - 1));
        EXPECT_EQ(restrict(RepSum::trivial(n, 3), 1), RepSum::trivial(1, 3));
    }
}

TEST(Reps, FixedDimExamples)
{
    EXPECT_EQ(fixed_dim(RepSum::sigma(3), 2), 1);
    EXPECT_EQ(fixed_dim(RepSum::lambda(3, 2), 1), 2);
    EXPECT_TRUE(rotation_power_is_identity(3, 2, 1));
    EXPECT_FALSE(rotation_power_is_identity(3, 2, 2));
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(fixed_dim(RepSum::rho(n), n), 1);
}

TEST(Reps, FixedDimMatchesRotationMatrices)
{
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t m = 1; m < (1u << (n - 1)); ++m)
            for (int k = 0; k <= n; ++k)
                EXPECT_EQ(fixed_dim(RepSum::lambda(n, static_cast<std::int64_t>(m)), k),
                          rotation_power_is_identity(n, m, k) ? 2 : 0)
                    << n << " " << m << " " << k;
}

TEST(Reps, JONormalForm)
{
    EXPECT_EQ(RepSum::lambda(3, 3), RepSum::lambda(3, 1));
    EXPECT_EQ(RepSum::lambda(3, 2).str(), "λ(2)");
    EXPECT_EQ(RepSum::lambda(4, 12), RepSum::lambda(4, 4));
    EXPECT_EQ(RepSum::lambda(3, 4), RepSum::sigma(3, 2));
    EXPECT_EQ(RepSum::lambda(3, 8), RepSum::trivial(3, 2));
    EXPECT_EQ(jo_normal_form(RepSum::lambda(4, 6)), RepSum::lambda(4, 2));
}

TEST(Reps, Orientability)
{
    EXPECT_TRUE(is_orientable(RepSum::sigma(2, 2)));
    EXPECT_FALSE(is_orientable(RepSum::parse(3, "3s + l2 + l1")));
    EXPECT_TRUE(is_orientable(RepSum::parse(3, "l1+l2")));
    EXPECT_FALSE(is_orientable(RepSum::rho(3)));
}

TEST(Reps, Parse)
{
    RepSum w = RepSum::parse(3, "3s + l2 + l1");
    EXPECT_EQ(w, RepSum::sigma(3, 3) + RepSum::lambda(3, 2) + RepSum::lambda(3, 1));
    EXPECT_EQ(w.str(), "3σ+λ(2)+λ(1)");
    EXPECT_EQ(RepSum::parse(3, w.ascii()), w);
    EXPECT_EQ(RepSum::parse(3, "rho"), RepSum::parse(3, "1 + s + l1 + l2 + l3"));
    EXPECT_EQ(RepSum::parse(3, "2rhobar"), 2 * RepSum::rho_bar(3));
    EXPECT_EQ(RepSum::parse(4, "lambda'"), RepSum::lambda(4, 4));
    EXPECT_EQ(RepSum::parse(2, "2*1 + s"), RepSum::trivial(2, 2) + RepSum::sigma(2));
    EXPECT_THROW(RepSum::parse(3, "3q"), RepError);
    EXPECT_THROW(RepSum::parse(3, "s++l1"), RepError);
}

TEST(Reps, RestrictionProperties)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 5;
        RepSum a = random_fixed_point_free(rng, n, false) + RepSum::trivial(n, trial % 2);
        RepSum b = random_fixed_point_free(rng, n, false);
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(restrict(a + b, k), restrict(a, k) + restrict(b, k));
            EXPECT_EQ(restrict(a, k).dim(), a.dim());
            EXPECT_EQ(restrict(restrict(a, n), k), restrict(a, k));
            if (k > 0)
                EXPECT_GE(fixed_dim(a, k - 1), fixed_dim(a, k));
            EXPECT_EQ(fixed_dim(a, k), restrict(a, k).trivial_count());
        }
    }
}

TEST(Decompositions, TableForC8)
{
    RepSum w = RepSum::parse(3, "3s + l2 + l1");
    auto d = decompositions(w);
    ASSERT_EQ(d.size(), 4u);
    const char* vp[] = {"σ", "3σ", "3σ+λ(2)", "3σ+λ(2)+λ(1)"};
    const char* vpp[] = {"2σ+λ(2)+λ(1)", "λ(2)+λ(1)", "λ(1)", "0"};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(d[i].v_double_prime.dim(), 6 - 2 * i);
        EXPECT_EQ(d[i].v_prime.str(), vp[i]);
        EXPECT_EQ(d[i].v_double_prime.str(), vpp[i]);
    }
}

TEST(Decompositions, ZeroRepresentation)
{
    auto d = decompositions(RepSum(2));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_TRUE(d[0].v_prime.is_zero());
    EXPECT_TRUE(d[0].v_double_prime.is_zero());
    EXPECT_EQ(d[0].m_of_v_prime, 2);
}

TEST(Decompositions, RejectsFixedPoints)
{
    EXPECT_THROW(decompositions(RepSum::rho(2)), RepError);
    EXPECT_THROW(homology_decompositions(RepSum::parse(2, "s")), RepError);
}

TEST(Decompositions, BruteForceC4)
{
    RepSum w = RepSum::parse(2, "l1 + 2s");
    auto brute = brute_force_decompositions(w);
    auto fast = decompositions(w);
    ASSERT_EQ(brute.size(), fast.size());
    for (const auto& f : fast) {
        int hits = 0;
        for (const auto& b : brute)
            if (b.v_double_prime == f.v_double_prime)
                ++hits;
        EXPECT_EQ(hits, 1) << f.v_double_prime.str();
    }
}

TEST(Decompositions, UniquePerEvenDimensionRandomized)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 4;
        RepSum w = random_fixed_point_free(rng, n, true);
        auto brute = brute_force_decompositions(w);
        auto fast = decompositions(w);
        ASSERT_EQ(fast.size(), static_cast<std::size_t>(w.dim() / 2 + 1)) << w.str();
        ASSERT_EQ(brute.size(), fast.size()) << w.str();
        for (std::size_t i = 0; i < fast.size(); ++i) {
            int d = w.dim() - 2 * static_cast<int>(i);
            EXPECT_EQ(fast[i].v_double_prime.dim(), d);
            EXPECT_EQ(fast[i].v_prime + fast[i].v_double_prime, w);
            int hits = 0;
            for (const auto& b : brute)
                hits += b.v_double_prime.dim() == d;
            EXPECT_EQ(hits, 1) << w.str() << " dim " << d;
        }
    }
}

TEST(Decompositions, HomologyOrdering)
{
    RepSum w = RepSum::parse(3, "2s + l2 + l1");
    auto d = homology_decompositions(w);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_EQ(d[0].v_double_prime, w);
    EXPECT_EQ(d[0].m_of_v_prime, 3);
    EXPECT_EQ(d[1].v_double_prime.str(), "2σ+λ(2)");
    EXPECT_EQ(d[1].m_of_v_prime, 0);
    EXPECT_EQ(d[2].v_double_prime.str(), "2σ");
    EXPECT_EQ(d[2].m_of_v_prime, 1);
    EXPECT_EQ(d[3].m_of_v_prime, 2);
    // every subgroup fixing a vector of V' fixes V''
    for (const auto& x : d)
        for (int k = 0; k <= 3; ++k)
            if (fixed_dim(x.v_prime, k) > 0)
                EXPECT_EQ(fixed_dim(x.v_double_prime, k), x.v_double_prime.dim());
}
