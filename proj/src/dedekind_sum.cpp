#include "dedekind/dedekind_sum.hpp"

#include <array>
#include <limits>
#include <string>

namespace dedekind {

namespace {

/// Canonical representative of m modulo n after validating the pair.
i64 canonical_argument(i64 m, i64 n) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "modulus must be positive, got " + std::to_string(n));
    }
    const i64 g = gcd(m, n);
    if (g != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(g));
    }
    return mod(m, n);
}

Rational whole(i64 v) { return Rational(v, 1); }

mpz_class to_mpz(i64 v) { return Rational(v, 1).numerator(); }

}  // namespace

Rational sawtooth(const Rational& t) {
    if (t.is_integer()) return Rational{};
    return t - Rational(t.floor(), mpz_class(1)) - Rational(1, 2);
}

Rational dedekind_oracle(i64 m, i64 n) {
    m = canonical_argument(m, n);
    if (n > kOracleMaxModulus) {
        throw Error(ErrorKind::OutOfRange, "oracle modulus too large: " + std::to_string(n));
    }
    // For 0 < k < n both sawtooth values are (2x - n)/(2n) with x = k or mk mod n
    // (neither argument is integral because gcd(m, n) = 1); k = n contributes 0.
    // Summing the numerators keeps every term exact over the denominator 4n^2.
    i128 numerator = 0;
    for (i64 k = 1; k < n; ++k) {
        const i64 mk = mulmod(m, k, n);
        numerator += static_cast<i128>(2 * k - n) * (2 * mk - n);
    }
    // 12 * numerator / (4 n^2)
    const i64 hi = static_cast<i64>(numerator / (i128{1} << 62));
    const i64 lo = static_cast<i64>(numerator % (i128{1} << 62));
    const mpz_class total = to_mpz(hi) * (mpz_class(1) << 62) + to_mpz(lo);
    return Rational(3 * total, to_mpz(n) * to_mpz(n));
}

Rational dedekind_fast(i64 m, i64 n) {
    i64 a = canonical_argument(m, n);
    i64 b = n;
    // S(a,b) = (a^2+b^2+1)/(ab) - 3 - S(b mod a, a), unrolled top-down.
    Rational acc;
    bool negate = false;
    while (a != 0) {
        const mpz_class za = to_mpz(a);
        const mpz_class zb = to_mpz(b);
        Rational term = Rational(za * za + zb * zb + 1, za * zb) - whole(3);
        acc += negate ? -term : term;
        negate = !negate;
        const i64 next = b % a;
        b = a;
        a = next;
    }
    return acc;
}

DedekindEval evaluate(i64 m, i64 n, Method method) {
    DedekindEval out;
    out.m = canonical_argument(m, n);
    out.n = n;
    out.method = method;
    out.value = method == Method::oracle ? dedekind_oracle(m, n) : dedekind_fast(m, n);
    return out;
}

i64 scaled_sum(i64 m, i64 n) {
    i64 a = canonical_argument(m, n);
    if (n > kScaledSumMaxModulus) {
        throw Error(ErrorKind::OutOfRange, "scaled_sum modulus too large: " + std::to_string(n));
    }
    // Euclidean chain (a_i, b_i); its depth is bounded by the Fibonacci growth of b.
    std::array<std::pair<i64, i64>, 96> chain{};
    std::size_t depth = 0;
    i64 b = n;
    while (a != 0) {
        chain[depth++] = {a, b};
        const i64 next = b % a;
        b = a;
        a = next;
    }
    // Fold back up: b*S(a,b) = (a^2 + b^2 + 1 - 3ab - b * a*S(b mod a, a)) / a.
    i128 inner = 0;
    while (depth > 0) {
        const auto [ai, bi] = chain[--depth];
        const i128 A = ai;
        const i128 B = bi;
        inner = (A * A + B * B + 1 - 3 * A * B - B * inner) / A;
    }
    return static_cast<i64>(inner);
}

ThreeTerm three_term(i64 m, i64 n, i64 c, i64 d) {
    canonical_argument(m, n);
    canonical_argument(c, d);
    const i128 q = static_cast<i128>(m) * d - static_cast<i128>(n) * c;
    if (q <= 0) {
        throw Error(ErrorKind::NonPositiveQ, "md - nc must be positive");
    }
    if (q > std::numeric_limits<i64>::max()) {
        throw Error(ErrorKind::Overflow, "md - nc exceeds 64 bits");
    }
    // d*x + c*y = 1  =>  -c*j + d*k = 1 with k = x, j = -y.
    const Bezout bz = ext_gcd(d, c);
    ThreeTerm out;
    out.k = bz.x;
    out.j = -bz.y;
    out.q = static_cast<i64>(q);
    const i128 r = -static_cast<i128>(n) * out.k + static_cast<i128>(m) * out.j;
    if (r > std::numeric_limits<i64>::max() || r < std::numeric_limits<i64>::min()) {
        throw Error(ErrorKind::Overflow, "three-term r exceeds 64 bits");
    }
    out.r = static_cast<i64>(r);

    const Rational N = whole(n), D = whole(d), Q = whole(out.q);
    out.lhs = dedekind_fast(m, n);
    out.rhs = dedekind_fast(c, d) + dedekind_fast(out.r, out.q) + N / (D * Q) + D / (N * Q) +
              Q / (N * D) - whole(3);
    return out;
}

}  // namespace dedekind
