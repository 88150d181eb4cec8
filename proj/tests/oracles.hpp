#pragma once

// Brute-force references used only by the tests. None of these share a code
// path with the library routine they check.

#include <map>
#include <vector>

#include "dedekind/arith.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/equality.hpp"
#include "dedekind/rational.hpp"

namespace dedekind::testing {

inline std::vector<i64> brute_sqrt(i64 a, i64 p) {
    std::vector<i64> roots;
    for (i64 x = 0; x < p; ++x) {
        if (mod(x * x - a, p) == 0) roots.push_back(x);
    }
    return roots;
}

inline i64 brute_phi(i64 n) {
    i64 count = 0;
    for (i64 m = 1; m <= n; ++m) count += gcd(m, n) == 1 ? 1 : 0;
    return count;
}

/// 12 * sum_{k=1}^{n} ((k/n))((mk/n)), each term through the Rational sawtooth.
inline Rational brute_dedekind(i64 m, i64 n) {
    Rational total;
    for (i64 k = 1; k <= n; ++k) total += sawtooth(Rational(k, n)) * sawtooth(Rational(m * k, n));
    return Rational(12) * total;
}

/// Units grouped by exact value from dedekind_oracle; members ascending.
inline std::vector<std::vector<i64>> brute_classes(i64 n) {
    std::map<Rational, std::vector<i64>> groups;
    for (i64 m : units(n)) groups[dedekind_oracle(m, n)].push_back(m);
    std::vector<std::vector<i64>> out;
    for (auto& [v, members] : groups) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dedekind::testing
