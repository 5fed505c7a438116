#include "mackeyss/bredon.hpp"

#include <gtest/gtest.h>

using namespace mss;

namespace {

MackeyFunctor at(const HomologyTable& t, int degree, int n)
{
    return degree_functor(t, degree, n);
}

int top_degree(const HomologyTable& t)
{
    return t.empty() ? -1 : t.rbegin()->first;
}

}  // namespace

TEST(Cells, BlocksAreComplexes)
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            EXPECT_TRUE(sigma_cells(n, k).check().empty());
            for (int l = 0; l + 2 <= n; ++l)
                EXPECT_TRUE(lambda_cells(n, l, k).check().empty());
            EXPECT_TRUE(trivial_cells(n, k).check().empty());
        }
}

TEST(Cells, SmashIsAComplex)
{
    CellComplex c = smash(smash(sigma_cells(3, 2), lambda_cells(3, 0, 1)), lambda_cells(3, 1, 1));
    EXPECT_EQ(c.top(), 6);
    EXPECT_TRUE(c.check().empty());
    EXPECT_TRUE(smash(trivial_cells(2, 1), sigma_cells(2, 1)).check().empty());
}

// The periodic blocks for kV against k-fold smash powers of the one-cell-pair
// structure on S^V.
TEST(Cells, MergedBlocksMatchSmashPowers)
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 3; ++k) {
            std::vector<std::pair<CellComplex, CellComplex>> cases;
            CellComplex s = sigma_cells(n, 1);
            CellComplex p = s;
            for (int i = 1; i < k; ++i)
                p = smash(p, s);
            cases.emplace_back(sigma_cells(n, k), p);
            for (int l = 0; l + 2 <= n && k <= 2; ++l) {
                CellComplex one = lambda_cells(n, l, 1);
                cases.emplace_back(lambda_cells(n, l, k), smash(one, one));
            }
            for (const auto& [merged, power] : cases) {
                auto a = cellular_homology(merged), b = cellular_homology(power);
                ASSERT_EQ(a.size(), b.size());
                for (std::size_t d = 0; d < a.size(); ++d)
                    EXPECT_TRUE(isomorphic(a[d], b[d])) << "n=" << n << " k=" << k << " degree " << d;
            }
        }
}

TEST(Oracle, PointSphere)
{
    for (int n = 0; n <= 2; ++n) {
        HomologyTable t = homology_cellular_oracle(RepSum(n));
        ASSERT_EQ(t.size(), 1u);
        EXPECT_EQ(at(t, 0, n), make_Z(n));
    }
}

// Values frozen from the cellular computation.
TEST(Oracle, FrozenValues)
{
    HomologyTable c8 = homology_cellular_oracle(RepSum::parse(3, "2s+l2+l1"));
    EXPECT_EQ(top_degree(c8), 6);
    EXPECT_TRUE(isomorphic(at(c8, 0, 3), make_B(1, 2, 3)));
    EXPECT_TRUE(isomorphic(at(c8, 2, 3), make_B(2, 1, 3)));
    EXPECT_TRUE(isomorphic(at(c8, 4, 3), make_B(3, 0, 3)));
    EXPECT_TRUE(isomorphic(at(c8, 6, 3), make_Z(3)));
    for (int d : {1, 3, 5})
        EXPECT_TRUE(at(c8, d, 3).is_zero());

    HomologyTable c4 = homology_cellular_oracle(RepSum::parse(2, "s+l1"));
    auto summary = [&](int d) { return level_summary(at(c4, d, 2)); };
    EXPECT_EQ(summary(0), "Z/2 | 0 | 0");
    EXPECT_EQ(summary(1), "0 | Z/2 | 0");
    EXPECT_EQ(summary(2), "Z/2 | 0 | 0");
    EXPECT_EQ(summary(3), "0 | Z | Z");
    EXPECT_EQ(at(c4, 3, 2).weyl[0], GroupHom::scalar(FGAbGroup::integers(), -1));

    HomologyTable c4b = homology_cellular_oracle(RepSum::parse(2, "2s+l1"));
    EXPECT_TRUE(isomorphic(at(c4b, 0, 2), make_B(1, 1, 2)));
    EXPECT_TRUE(isomorphic(at(c4b, 2, 2), make_B(2, 0, 2)));
    EXPECT_TRUE(isomorphic(at(c4b, 4, 2), make_Z(2)));
}

TEST(Oracle, SmallSpheres)
{
    HomologyTable s = homology_cellular_oracle(RepSum::sigma(1));
    EXPECT_TRUE(isomorphic(at(s, 0, 1), make_B(1, 0, 1)));
    EXPECT_EQ(level_summary(at(s, 1, 1)), "0 | Z");

    HomologyTable s2 = homology_cellular_oracle(RepSum::sigma(1, 2));
    EXPECT_TRUE(isomorphic(at(s2, 0, 1), make_B(1, 0, 1)));
    EXPECT_TRUE(isomorphic(at(s2, 2, 1), make_Z(1)));
    EXPECT_TRUE(at(s2, 1, 1).is_zero());

    HomologyTable l = homology_cellular_oracle(RepSum::parse(2, "l1"));
    EXPECT_TRUE(isomorphic(at(l, 0, 2), make_B(2, 0, 2)));
    EXPECT_TRUE(isomorphic(at(l, 2, 2), make_Z(2)));
}

TEST(ClosedForm, ExampleTable)
{
    HomologyTable t = homology_closed_form(RepSum::parse(3, "2s+l2+l1"));
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(at(t, 6, 3), make_Z(3));
    EXPECT_EQ(at(t, 4, 3), make_B(3, 0, 3));
    EXPECT_EQ(at(t, 2, 3), make_B(2, 1, 3));
    EXPECT_EQ(at(t, 0, 3), make_B(1, 2, 3));
    EXPECT_EQ(t.at(6).front().label.str(), "u_{2σ+λ(2)+λ(1)}");
    EXPECT_EQ(t.at(4).front().label.str(), "a_{λ(1)}u_{2σ+λ(2)}");
    EXPECT_EQ(t.at(2).front().label.str(), "a_{λ(2)+λ(1)}u_{2σ}");
    EXPECT_EQ(t.at(0).front().label.str(), "a_{2σ+λ(2)+λ(1)}");
}

TEST(ClosedForm, NonOrientableExample)
{
    // Rows agree with homology_cellular_oracle on the same W.
    HomologyTable t = homology_closed_form(RepSum::parse(3, "3s+l2+l1"));
    EXPECT_EQ(top_degree(t), 7);
    for (int d : {0, 2, 4, 6})
        EXPECT_EQ(at(t, d, 3), make_B(1, 2, 3)) << d;
    EXPECT_FALSE(t.count(1));
    EXPECT_EQ(level_summary(at(t, 3, 3)), "0 | Z/2 | 0 | 0");
    EXPECT_EQ(level_summary(at(t, 5, 3)), "0 | Z/4 | Z/2 | 0");
    EXPECT_EQ(level_summary(at(t, 7, 3)), "0 | Z | Z | Z");
    for (int d : {3, 5, 7})
        EXPECT_TRUE(t.at(d).front().label.twisted);
    EXPECT_EQ(t.at(5).front().label.str(), "u⁻a_{λ(1)}u_{2σ}");
    EXPECT_EQ(t.at(2).front().label.str(), "a_{σ+λ(2)+λ(1)}u_{2σ}");
}

TEST(ClosedForm, TrivialSummandsShift)
{
    HomologyTable t = homology_closed_form(RepSum::parse(2, "2+l1"));
    EXPECT_TRUE(t.count(2) && t.count(4));
    EXPECT_EQ(at(t, 4, 2), make_Z(2));
    EXPECT_EQ(at(t, 2, 2), make_B(2, 0, 2));
    HomologyTable z = homology_closed_form(RepSum::trivial(2, 3));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(at(z, 3, 2), make_Z(2));
}

TEST(ClosedForm, MatchesOracleForAllSmallSpheres)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : fixed_point_free_reps(n, 6)) {
            auto problems = compare_tables(homology_closed_form(w), homology_cellular_oracle(w), n);
            EXPECT_TRUE(problems.empty()) << "C_" << (1 << n) << " " << w.str() << ": " << problems.front();
        }
}

TEST(ClosedForm, Properties)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : fixed_point_free_reps(n, 6)) {
            HomologyTable t = homology_closed_form(w);
            int rank0 = 0, where = -1;
            for (const auto& [d, entries] : t) {
                EXPECT_GE(d, 0);
                EXPECT_LE(d, w.dim());
                for (const auto& e : entries) {
                    EXPECT_TRUE(validate(e.functor).empty()) << w.str();
                    if (is_orientable(w))
                        EXPECT_EQ(d % 2, 0) << w.str();
                    int r = static_cast<int>(e.functor.level[0].free_rank());
                    if (r > 0)
                        where = d;
                    rank0 += r;
                    EXPECT_EQ(e.functor.level[0].torsion().size(), 0u);
                }
            }
            EXPECT_EQ(rank0, 1) << w.str();
            EXPECT_EQ(where, w.dim()) << w.str();
            // degree 0 is killed by 2^{n - m(W)}
            MackeyFunctor h0 = at(t, 0, n);
            Integer bound = 1;
            for (int i = 0; i < n - max_fixed_level(w); ++i)
                bound *= 2;
            for (const auto& g : h0.level) {
                EXPECT_TRUE(g.is_finite());
                EXPECT_EQ(bound % g.exponent(), 0) << w.str();
            }
        }
}

TEST(Labels, GoldRelation)
{
    GeneratorLabel x{1, RepSum::sigma(2, 2), RepSum::lambda_prime(2), false, "r"};
    GeneratorLabel y = gold_rewrite(x);
    EXPECT_EQ(y.coefficient, 2);
    EXPECT_EQ(y.a, RepSum::lambda_prime(2));
    EXPECT_EQ(y.u, RepSum::sigma(2, 2));
    EXPECT_EQ(y.str(), "2a_{λ(1)}u_{2σ}r");
    EXPECT_EQ(gold_rewrite(y), y);
    GeneratorLabel z{1, RepSum::sigma(2, 1), RepSum::lambda_prime(2), false, {}};
    EXPECT_EQ(gold_rewrite(z), z);
}

TEST(Labels, EmptyLabelIsOne)
{
    EXPECT_EQ((GeneratorLabel{1, RepSum(2), RepSum(2), false, {}}).str(), "1");
}

TEST(Slices, SignedCopyOfZ)
{
    auto terms = slice_homotopy({1, 1}, 3);
    ASSERT_EQ(terms.size(), 2u);
    bool found = false;
    for (const auto& t : terms) {
        EXPECT_EQ(t.t, 2);
        if (t.stem == 2) {
            found = true;
            EXPECT_EQ(t.s, 0);
            EXPECT_EQ(t.functor.name, "Z^-");
            EXPECT_EQ(level_summary(t.functor.value(3)), "0 | 0 | 0 | Z^4");
        } else {
            EXPECT_EQ(t.stem, 1);
            EXPECT_EQ(t.s, 1);
            EXPECT_EQ(t.functor.name, "B(1,0)");
        }
    }
    EXPECT_TRUE(found);
}

TEST(Slices, FreeCells)
{
    auto terms = slice_homotopy({0, 3}, 2);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].stem, 3);
    EXPECT_EQ(terms[0].s, 0);
    EXPECT_EQ(level_summary(terms[0].functor.value(2)), "Z | Z^2 | Z^4");
}

TEST(Slices, TopCellHomologyInducedTrivially)
{
    for (int n = 1; n <= 3; ++n) {
        auto terms = slice_homotopy({n, 1}, n);
        HomologyTable t = homology_closed_form(RepSum::rho(n));
        std::size_t count = 0;
        for (const auto& [d, e] : t)
            count += e.size();
        ASSERT_EQ(terms.size(), count);
        for (const auto& term : terms) {
            EXPECT_EQ(term.t, 1 << n);
            EXPECT_TRUE(isomorphic(term.functor.value(n), at(t, term.stem, n)));
        }
    }
}
