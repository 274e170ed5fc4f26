#pragma once

#include "chowkit/rational.hpp"

#include <vector>

namespace chowkit {

/// Newton identities between elementary symmetric data e_1..e_D and power
/// sums p_1..p_D:  p_k - e_1 p_{k-1} + ... + (-1)^{k-1} e_{k-1} p_1 + (-1)^k k e_k = 0.
///
/// Generic over the coefficient type (needs +, -, *(T) and *(Rational));
/// instantiated with Rational scalars and with GradedElement classes.
/// `zero` supplies the additive identity, since graded elements carry a space.

template <typename T>
std::vector<T> newton_p_from_e(const std::vector<T>& e, const T& zero) {
    const size_t D = e.size();
    std::vector<T> p(D, zero);
    for (size_t k = 1; k <= D; ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        T acc = zero;
        for (size_t i = 1; i < k; ++i) {
            T term = e[i - 1] * p[k - i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        T last = e[k - 1] * Rational(static_cast<long>(k));
        p[k - 1] = (k % 2 == 1) ? acc + last : acc - last;
    }
    return p;
}

template <typename T>
std::vector<T> newton_e_from_p(const std::vector<T>& p, const T& zero) {
    const size_t D = p.size();
    std::vector<T> e(D, zero);
    for (size_t k = 1; k <= D; ++k) {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i, with e_0 = 1.
        T acc = zero;
        for (size_t i = 1; i <= k; ++i) {
            T term = (i == k) ? p[i - 1] : e[k - i - 1] * p[i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[k - 1] = acc * Rational(1, static_cast<long>(k));
    }
    return e;
}

}  // namespace chowkit
