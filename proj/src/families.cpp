#include "dedekind/families.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

namespace {

void require_eps(int eps) {
    if (eps != 1 && eps != -1) {
        throw Error(ErrorKind::BadEps, "eps must be +1 or -1, got " + std::to_string(eps));
    }
}

void hypothesis(bool holds, const std::string& condition) {
    if (!holds) throw Error(ErrorKind::HypothesisViolated, condition);
}

i64 checked_mul(i64 a, i64 b, const char* what) {
    const i128 p = static_cast<i128>(a) * b;
    if (p > std::numeric_limits<i64>::max() || p < std::numeric_limits<i64>::min()) {
        throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
    }
    return static_cast<i64>(p);
}

std::vector<i64> quadratic_arguments(const std::vector<i64>& solutions, i64 t, i64 nt) {
    std::vector<i64> out;
    out.reserve(solutions.size());
    for (i64 m : solutions) {
        out.push_back(static_cast<i64>((1 + static_cast<i128>(m) * t) % nt));
    }
    return out;
}

}  // namespace

std::string_view to_string(PowerKind kind) {
    switch (kind) {
        case PowerKind::theorem1: return "theorem1";
        case PowerKind::corollary1: return "corollary1";
        case PowerKind::corollary3: return "corollary3";
    }
    return "unknown";
}

PowerFamily theorem1_family(i64 d, i64 n, int eps) {
    require_eps(eps);
    hypothesis(d >= 1, "d >= 1");
    hypothesis(n >= 1, "n >= 1");

    PowerFamily f;
    f.kind = PowerKind::theorem1;
    f.eps = eps;
    f.d = d;
    f.n = n;
    f.step = checked_mul(d, n, "d*n");
    f.modulus = checked_mul(f.step, n, "d*n^2");
    f.predicted_value = Rational(eps) * (Rational(2, f.modulus) + Rational(d - 3, 1));
    for (i64 m = 0; m < n; ++m) {
        if (gcd(m, n) != 1) continue;
        f.members.push_back(mod(static_cast<i64>((eps + static_cast<i128>(f.step) * m) % f.modulus),
                                f.modulus));
    }
    std::sort(f.members.begin(), f.members.end());
    return f;
}

PowerFamily corollary1_family(i64 l, i64 k, i64 r, i64 q, int eps) {
    require_eps(eps);
    hypothesis(l >= 1 && k >= 1 && r >= 1 && q >= 1, "l, k, r, q must be positive");
    hypothesis(r <= k, "r <= k");
    const i64 l_k_minus_r = ipow(l, static_cast<int>(k - r));
    hypothesis(l_k_minus_r % q == 0, "q | l^(k-r)");
    hypothesis(q % l != 0, "l does not divide q");
    const bool case_a = 2 * r >= k;
    const i64 q2 = checked_mul(q, q, "q^2");
    if (!case_a) {
        hypothesis(q2 % ipow(l, static_cast<int>(k - 2 * r)) == 0, "r >= k/2 or l^(k-2r) | q^2");
    }

    // l^(2r-k) q^2 as an exact rational; integral under the hypotheses above.
    const Rational scale = case_a ? Rational(ipow(l, static_cast<int>(2 * r - k)), 1)
                                  : Rational(1, ipow(l, static_cast<int>(k - 2 * r)));
    const Rational d_value = scale * Rational(q2, 1);
    if (!d_value.is_integer()) throw std::logic_error("corollary1: l^(2r-k) q^2 is not integral");
    const i64 d = case_a ? checked_mul(ipow(l, static_cast<int>(2 * r - k)), q2, "l^(2r-k) q^2")
                         : q2 / ipow(l, static_cast<int>(k - 2 * r));

    PowerFamily f = theorem1_family(d, l_k_minus_r / q, eps);
    f.kind = PowerKind::corollary1;
    f.l = l;
    f.k = k;
    f.r = r;
    f.q = q;
    const i64 lk = ipow(l, static_cast<int>(k));
    f.predicted_value = Rational(eps) * (Rational(2, lk) + d_value - Rational(3));
    if (f.modulus != lk) throw std::logic_error("corollary1: d n^2 != l^k");
    return f;
}

PowerFamily corollary3_family(i64 p, int eps) {
    hypothesis(is_prime(p), "p is prime");
    PowerFamily f = theorem1_family(1, p, eps);
    f.kind = PowerKind::corollary3;
    f.p = p;
    return f;
}

EqualityClass corollary2_classify(i64 p, int k, int r, int eps) {
    require_eps(eps);
    hypothesis(is_prime(p), "p is prime");
    if (k < 1 || r < 1 || 2 * r < k || r > k) {
        throw Error(ErrorKind::RangeViolated, "need k/2 <= r <= k, got k=" + std::to_string(k) +
                                                  ", r=" + std::to_string(r));
    }
    const i64 modulus = ipow(p, k);
    const i64 pr = ipow(p, r);
    EqualityClass cls;
    cls.modulus = modulus;
    cls.value = Rational(eps) * (Rational(2, modulus) + Rational(ipow(p, 2 * r - k), 1) - Rational(3));
    if (r == k) {
        cls.members.push_back(mod(eps, modulus));
    } else {
        const i64 span = ipow(p, k - r);
        for (i64 m = 1; m < span; ++m) {
            if (m % p != 0) cls.members.push_back(mod(eps + pr * m, modulus));
        }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
    return cls;
}

Rational theorem2_value(i64 n, i64 t) {
    if (n < 1 || t < 1) throw Error(ErrorKind::OutOfRange, "theorem2_value needs n, t >= 1");
    return Rational(2, checked_mul(n, t, "n*t")) + Rational(t, n) - Rational(3);
}

Decomposition decompose(i64 t) {
    if (t < 1) throw Error(ErrorKind::OutOfRange, "decompose needs t >= 1");
    const i64 value = checked_mul(t, t, "t^2") + 4;
    if (value < 4) throw Error(ErrorKind::Overflow, "t^2 + 4 exceeds 64 bits");
    Decomposition out;
    for (const auto& [p, e] : factorize(value)) {
        if (e % 2 == 1) out.q *= p;
        out.k *= ipow(p, e / 2);
    }
    return out;
}

QuadraticFamily corollary4_family(i64 t, std::vector<i64> primes) {
    if (t < 1) throw Error(ErrorKind::OutOfRange, "t must be positive");
    const auto [q, k] = decompose(t);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 1; i < primes.size(); ++i) {
        if (primes[i] == primes[i - 1]) {
            throw Error(ErrorKind::DuplicatePrime, std::to_string(primes[i]) + " listed twice");
        }
    }

    QuadraticFamily f;
    f.t = t;
    f.q = q;
    f.k = k;
    f.primes = primes;

    std::vector<std::array<i64, 2>> roots;
    for (i64 p : primes) {
        const std::string name = "p=" + std::to_string(p);
        if (p < 3 || p % 2 == 0) throw Error(ErrorKind::IneligiblePrime, name + " is not odd");
        if (!is_prime(p)) throw Error(ErrorKind::IneligiblePrime, name + " is not prime");
        if (k % p == 0) throw Error(ErrorKind::IneligiblePrime, name + " divides k=" + std::to_string(k));
        const int symbol = legendre(q, p);
        if (symbol != 1) {
            throw Error(ErrorKind::IneligiblePrime,
                        "Legendre symbol (" + std::to_string(q) + "/" + std::to_string(p) + ") = " +
                            std::to_string(symbol));
        }
        // m = (t +- sqrt(q) k) * 2^{-1} (mod p)
        const i64 sqrt_q = sqrt_mod_prime(q, p)->front();
        const i64 half = mod_inverse(2, p);
        const i64 shift = mulmod(sqrt_q, k, p);
        const std::array<i64, 2> pair{mulmod(mod(t + shift, p), half, p), mulmod(mod(t - shift, p), half, p)};
        if (pair[0] == pair[1]) {
            throw std::logic_error("corollary4: coinciding roots mod " + std::to_string(p));
        }
        for (i64 m : pair) {
            if (mod(mulmod(m, m, p) - mulmod(t, m, p) - 1, p) != 0) {
                throw std::logic_error("corollary4: root formula failed mod " + std::to_string(p));
            }
        }
        roots.push_back(pair);
    }

    const std::size_t r = primes.size();
    std::vector<CrtPart> parts(r);
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        for (std::size_t j = 0; j < r; ++j) parts[j] = {roots[j][(mask >> j) & 1U], primes[j]};
        const CrtPart combined = crt(parts);
        f.n = combined.modulus;
        f.solutions.push_back(combined.residue);
    }
    std::sort(f.solutions.begin(), f.solutions.end());
    for (i64 m : f.solutions) {
        if (gcd(m, f.n) != 1 || mod(mulmod(m, m, f.n) - mulmod(t, m, f.n) - 1, f.n) != 0) {
            throw std::logic_error("corollary4: combined root " + std::to_string(m) + " fails mod n");
        }
    }

    f.nt = checked_mul(f.n, t, "n*t");
    f.arguments = quadratic_arguments(f.solutions, t, f.nt);
    f.predicted_value = theorem2_value(f.n, t);
    f.nt_square_free = is_square_free(f.nt);
    return f;
}

QuadraticFamily shift_t(const QuadraticFamily& family, i64 l) {
    if (l < 1) throw Error(ErrorKind::OutOfRange, "shift needs l >= 1, got " + std::to_string(l));
    QuadraticFamily f = family;
    f.t = family.t + checked_mul(l, family.n, "l*n");
    const Decomposition dec = decompose(f.t);
    f.q = dec.q;
    f.k = dec.k;
    f.nt = checked_mul(f.n, f.t, "n*t");
    f.arguments = quadratic_arguments(f.solutions, f.t, f.nt);
    f.predicted_value = theorem2_value(f.n, f.t);
    f.nt_square_free = is_square_free(f.nt);
    return f;
}

std::vector<i64> table1_sieve(i64 t, std::size_t count, bool exclude_divisors_of_t) {
    const auto [q, k] = decompose(t);
    std::vector<i64> out;
    for (i64 p = 3; out.size() < count; p += 2) {
        if (!is_prime(p) || k % p == 0) continue;
        if (exclude_divisors_of_t && t % p == 0) continue;
        if (legendre(q, p) == 1) out.push_back(p);
    }
    return out;
}

Verification verify(const PowerFamily& family) {
    Verification v;
    for (i64 m : family.members) {
        if (dedekind_fast(m, family.modulus) != family.predicted_value) v.mismatches.push_back(m);
    }
    v.all_match = v.mismatches.empty();
    return v;
}

Verification verify(const QuadraticFamily& family) {
    Verification v;
    for (i64 a : family.arguments) {
        if (dedekind_fast(a, family.nt) != family.predicted_value) v.mismatches.push_back(a);
    }
    v.all_match = v.mismatches.empty();
    return v;
}

}  // namespace dedekind
