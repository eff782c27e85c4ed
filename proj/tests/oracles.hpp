#pragma once

// Test-side oracles, independent of the library's closed-form evaluation
// paths.

#include <vector>

#include "exosc/cyclotomic.hpp"
#include "exosc/fock.hpp"

namespace exosc_test {

// Two-term recursion for the squared ladder coefficients:
//   a_{n+1}^2 = Q1 a_n^2 + Q2 q^{2n} + Q3 q^{-2n},  a_0 = 0.
inline std::vector<exosc::Cyclotomic> spectrum_recursion(const exosc::SolutionParams& p,
                                                         int upto) {
    std::vector<exosc::Cyclotomic> s;
    s.push_back(exosc::Cyclotomic::zero());
    for (int n = 0; n < upto; ++n) {
        s.push_back(p.Q1 * s.back() + p.Q2 * p.q.pow(2 * n) + p.Q3 * p.q.pow(-2 * n));
    }
    return s;
}

}  // namespace exosc_test
