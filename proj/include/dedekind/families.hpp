#pragma once

/**
 * @file families.hpp
 * @brief Parametrised families of provably equal Dedekind sums.
 *
 * Power case: S(eps + d n m, d n^2) = eps (2/(d n^2) + d - 3) for gcd(m, n) = 1,
 * with the l^k and p^k specialisations.
 *
 * Square-free case: if t = m - m* (mod n) then S(1 + m t, n t) = 2/(nt) + t/n - 3.
 * For n = p_1 ... p_r with (q/p_j) = 1, where t^2 + 4 = q k^2, the congruence
 * m^2 - t m - 1 = 0 (mod n) has 2^r unit solutions, each giving a member.
 */

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dedekind/arith.hpp"
#include "dedekind/equality.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

enum class PowerKind { theorem1, corollary1, corollary3 };

std::string_view to_string(PowerKind kind);

struct PowerFamily {
    PowerKind kind = PowerKind::theorem1;
    int eps = 1;
    // theorem1: d, n.  corollary1: l, k, r, q (d = l^(2r-k) q^2, n = l^(k-r)/q).
    // corollary3: p (d = 1, n = p).
    i64 d = 1;
    i64 n = 1;
    i64 l = 0, k = 0, r = 0, q = 0, p = 0;
    i64 modulus = 1;          // d n^2
    i64 step = 1;             // d n, so members are eps + step * m
    Rational predicted_value;
    std::vector<i64> members;  // ascending residues mod `modulus`
};

/// Throws BadEps.
PowerFamily theorem1_family(i64 d, i64 n, int eps);

/// Throws HypothesisViolated naming the failed condition, or BadEps.
PowerFamily corollary1_family(i64 l, i64 k, i64 r, i64 q, int eps);

/// S(eps + p m, p^2), m = 1..p-1 all equal eps (2/p^2 - 2).
PowerFamily corollary3_family(i64 p, int eps);

/// The complete equality class {eps + p^r m' : p does not divide m'} mod p^k
/// for k/2 <= r <= k, with value eps (2/p^k + p^(2r-k) - 3).
/// Throws RangeViolated for r outside [k/2, k] and HypothesisViolated for non-prime p.
EqualityClass corollary2_classify(i64 p, int k, int r, int eps);

Rational theorem2_value(i64 n, i64 t);

struct Decomposition {
    i64 q = 1;  // square-free
    i64 k = 1;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// t^2 + 4 = q k^2 with q square-free.
Decomposition decompose(i64 t);

struct QuadraticFamily {
    i64 t = 1;
    i64 q = 1;
    i64 k = 1;
    std::vector<i64> primes;     // ascending
    i64 n = 1;
    i64 nt = 1;
    std::vector<i64> solutions;  // roots of m^2 - t m - 1 mod n, ascending
    std::vector<i64> arguments;  // 1 + m t mod nt, in the order of `solutions`
    Rational predicted_value;
    bool nt_square_free = true;  // false is a warning, not an error
};

/// Throws IneligiblePrime (naming the failed condition) or DuplicatePrime.
QuadraticFamily corollary4_family(i64 t, std::vector<i64> primes);

/// Replace t by t + l n; solutions mod n are unchanged. Throws OutOfRange for l < 1.
QuadraticFamily shift_t(const QuadraticFamily& family, i64 l);

/// Ascending odd primes p with p not dividing k, (q/p) = 1 and, if requested,
/// p not dividing t.
std::vector<i64> table1_sieve(i64 t, std::size_t count, bool exclude_divisors_of_t);

/// The t values of the published table.
inline constexpr std::array<i64, 7> kTable1Rows{1, 2, 3, 5, 6, 7, 10};

struct Verification {
    bool all_match = true;
    std::vector<i64> mismatches;  // members whose evaluated sum differs
};

/// Re-evaluates every member with dedekind_fast against the predicted value.
Verification verify(const PowerFamily& family);
Verification verify(const QuadraticFamily& family);

}  // namespace dedekind
