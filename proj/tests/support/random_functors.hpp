#pragma once

#include "mackeyss/mackey.hpp"

#include <random>

namespace mss::testing {

// Random Z-module Mackey functors built from the named ones by induction,
// inflation of 2-torsion functors, signed induction, restriction and direct sums.
class RandomFunctors {
public:
    explicit RandomFunctors(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    MackeyFunctor named(int n)
    {
        switch (uniform(0, n >= 1 ? 4 : 1)) {
        case 0:
            return make_Z(n);
        case 1:
            return make_Zstar(n);
        case 2:
            return make_B(uniform(1, 3), uniform(0, n - 1), n);
        case 3:
            return make_Bstar(uniform(0, n - 1), n);
        default:
            return make_B(1, n - 1, n);
        }
    }

    // A functor for C_{2^n} obtained by at most depth operations.
    MackeyFunctor make(int n, int depth = 3)
    {
        if (depth == 0 || n == 0)
            return named(n);
        switch (uniform(0, 5)) {
        case 0: {
            int k = uniform(0, n - 1);
            return induce(make(k, depth - 1), n);
        }
        case 1: {
            // inflation keeps tr res = 2 only on 2-torsion functors
            int j = uniform(1, n);
            MackeyFunctor m = make(n - j, depth - 1);
            if (killed_by_two(m))
                return inflate(m, j, n);
            return induce(m, n);
        }
        case 2: {
            MackeyFunctor m = make(n - 1, depth - 1);
            if (trivial_weyl(m))
                return signed_induce(m);
            return induce(m, n);
        }
        case 3:
            return direct_sum(make(n, depth - 1), make(n, depth - 1));
        case 4:
            return restrict(make(std::min(n + 1, 4), depth - 1), n);
        default:
            return named(n);
        }
    }

    static bool trivial_weyl(const MackeyFunctor& m)
    {
        for (int k = 0; k <= m.n; ++k)
            if (m.weyl[k] != GroupHom::identity(m.level[k]))
                return false;
        return true;
    }

    static bool killed_by_two(const MackeyFunctor& m)
    {
        for (const auto& g : m.level)
            if (!GroupHom::scalar(g, 2).is_zero())
                return false;
        return true;
    }

private:
    std::mt19937 rng_;
};

}  // namespace mss::testing
