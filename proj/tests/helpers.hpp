#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "guni/matrix.hpp"
#include "guni/projective.hpp"

namespace guni_test {

// Dense invertible matrix with small integer entries.
inline guni::Matrix random_invertible(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    guni::Matrix m(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = guni::CycNum(entry(rng));
        m.unify_order();
    } while (!m.is_invertible());
    return m;
}

// Monomial matrix (permutation with root-of-unity scales): a coordinate
// change that keeps canonical lift scalars inside the roots of unity.
inline guni::Matrix random_monomial(int n, std::mt19937& rng, long root_order = 6) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    guni::Matrix m(n, n);
    std::uniform_int_distribution<long> power(0, root_order - 1);
    for (int i = 0; i < n; ++i) m.at(perm[i], i) = guni::zeta(root_order, power(rng));
    m.unify_order();
    return m;
}

} // namespace guni_test
