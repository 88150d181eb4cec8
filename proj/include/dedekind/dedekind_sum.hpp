#pragma once

/**
 * @file dedekind_sum.hpp
 * @brief Exact evaluation of the normalized Dedekind sum S(m,n) = 12 s(m,n).
 *
 * Three evaluators are provided:
 * - dedekind_oracle: literal O(n) summation of ((k/n))((mk/n)).
 * - dedekind_fast: O(log n) Euclidean descent with the reciprocity law
 *   S(m,n) + S(n,m) = (m^2+n^2+1)/(mn) - 3, producing a Rational.
 * - scaled_sum: the same descent carried out on the integer n*S(m,n) in
 *   128-bit arithmetic; this is the kernel used by the parallel sweeps.
 *
 * All evaluators reduce m into [0, n) first and reject gcd(m, n) != 1.
 */

#include <cstdint>
#include <string_view>

#include "dedekind/arith.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

enum class Method { oracle, fast };

constexpr std::string_view to_string(Method method) {
    return method == Method::oracle ? "oracle" : "fast";
}

/// One evaluated argument pair. Invariants: gcd(m, n) = 1, 0 <= m < n
/// (m = 0 only for n = 1), and n * value is an even integer.
struct DedekindEval {
    i64 m = 0;
    i64 n = 1;
    Rational value;
    Method method = Method::fast;
};

/// ((t)): 0 for integral t, otherwise t - floor(t) - 1/2.
Rational sawtooth(const Rational& t);

Rational dedekind_oracle(i64 m, i64 n);
Rational dedekind_fast(i64 m, i64 n);

DedekindEval evaluate(i64 m, i64 n, Method method = Method::fast);

/// Largest modulus accepted by scaled_sum; |n*S(m,n)| < n^2 must fit in 64 bits.
inline constexpr i64 kScaledSumMaxModulus = i64{1} << 31;

/// Largest modulus accepted by dedekind_oracle; keeps the n^3 accumulator inside 128 bits.
inline constexpr i64 kOracleMaxModulus = i64{1} << 40;

/// n * S(m, n), an even integer. Throws OutOfRange past kScaledSumMaxModulus.
i64 scaled_sum(i64 m, i64 n);

/// Both sides of the three-term relation
///   S(m,n) = S(c,d) + S(r,q) + n/(dq) + d/(nq) + q/(nd) - 3
/// with q = md - nc > 0, -cj + dk = 1 and r = -nk + mj.
struct ThreeTerm {
    i64 j = 0;
    i64 k = 0;
    i64 r = 0;
    i64 q = 0;
    Rational lhs;
    Rational rhs;
};

/// Throws NotCoprime (either pair) or NonPositiveQ.
ThreeTerm three_term(i64 m, i64 n, i64 c, i64 d);

}  // namespace dedekind
