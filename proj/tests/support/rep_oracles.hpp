#pragma once

#include "mackeyss/reps.hpp"

#include <random>
#include <vector>

namespace mss::testing {

// All sub-multisets V'' of W satisfying the two defining conditions, read
// literally: V'' orientable, and any subgroup fixing a vector of V'' fixes V'.
inline std::vector<Decomposition> brute_force_decompositions(const RepSum& w)
{
    std::vector<std::pair<Irrep, int>> items(w.terms().begin(), w.terms().end());
    std::vector<Decomposition> out;
    std::vector<int> pick(items.size(), 0);
    while (true) {
        RepSum vpp(w.n());
        for (std::size_t i = 0; i < items.size(); ++i)
            vpp.add(items[i].first, pick[i]);
        RepSum vp = w - vpp;
        bool ok = is_orientable(vpp);
        for (int k = 0; k <= w.n() && ok; ++k)
            if (fixed_dim(vpp, k) > 0 && fixed_dim(vp, k) != vp.dim())
                ok = false;
        if (ok)
            out.push_back({vp, vpp, max_fixed_level(vp)});
        std::size_t i = 0;
        while (i < items.size() && pick[i] == items[i].second)
            pick[i++] = 0;
        if (i == items.size())
            break;
        ++pick[i];
    }
    return out;
}

inline RepSum random_fixed_point_free(std::mt19937& rng, int n, bool orientable)
{
    std::uniform_int_distribution<int> mult(0, 2);
    RepSum w(n);
    w += RepSum::sigma(n, mult(rng));
    for (int l = 0; l + 2 <= n; ++l)
        w += RepSum::lambda(n, std::int64_t{1} << l, mult(rng));
    if (orientable && !is_orientable(w))
        w += RepSum::sigma(n);
    return w;
}

}  // namespace mss::testing
