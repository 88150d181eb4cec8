#pragma once

/**
 * @file arith.hpp
 * @brief Modular-arithmetic primitives over 64-bit integers.
 *
 * Products are formed in 128 bits, so every routine is exact for operands
 * anywhere in the int64 range. Functions that build a larger modulus (crt)
 * throw ErrorKind::Overflow instead of wrapping.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

using i64 = std::int64_t;
using i128 = __int128;

/// Canonical representative of an integer modulo a positive modulus.
struct Residue {
    i64 value = 0;
    i64 modulus = 1;

    static Residue of(i64 a, i64 modulus);

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Reduce a into [0, n). Requires n > 0.
constexpr i64 mod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 n) {
    return static_cast<i64>(static_cast<i128>(mod(a, n)) * mod(b, n) % n);
}

i64 powmod(i64 base, std::uint64_t exp, i64 n);

/// gcd(0, 0) = 0; the result is always nonnegative.
i64 gcd(i64 a, i64 b);

struct Bezout {
    i64 g;  // gcd(a, b) >= 0
    i64 x;  // a*x + b*y = g
    i64 y;
};

/// Extended Euclid. For nonzero a, b the coefficients satisfy
/// |x| <= |b|/(2g) and |y| <= |a|/(2g) (minimal-magnitude normalization).
Bezout ext_gcd(i64 a, i64 b);

/// m* in [0, n) with m*m* = 1 (mod n). Throws NotCoprime.
i64 mod_inverse(i64 m, i64 n);

struct CrtPart {
    i64 residue;
    i64 modulus;
};

/// Combine pairwise-coprime congruences. Returns {residue, product}.
/// Throws ModuliNotCoprime, OutOfRange (modulus <= 0) or Overflow.
CrtPart crt(std::span<const CrtPart> parts);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(i64 n);

/// Legendre symbol (q/p) for an odd prime p. Throws NotOddPrime.
int legendre(i64 q, i64 p);

/// Square roots of a modulo an odd prime p, ascending: {} when a is a
/// non-residue, {0} when p | a, otherwise {x, p - x}.
std::optional<std::vector<i64>> sqrt_mod_prime(i64 a, i64 p);

struct PrimePower {
    i64 prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division; ascending primes. factorize(1) is empty.
std::vector<PrimePower> factorize(i64 n);

i64 euler_phi(i64 n);

bool is_square_free(i64 n);

/// Exact integer power; throws Overflow past int64.
i64 ipow(i64 base, int exp);

}  // namespace dedekind
