#include "dedekind/arith.hpp"

#include <array>
#include <limits>
#include <string>

namespace dedekind {

namespace {

void require_positive_modulus(i64 n, const char* what) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, std::string(what) + ": modulus must be positive, got " +
                                               std::to_string(n));
    }
}

void require_odd_prime(i64 p) {
    if (p == 2 || !is_prime(p)) {
        throw Error(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
    }
}

}  // namespace

Residue Residue::of(i64 a, i64 modulus) {
    require_positive_modulus(modulus, "Residue");
    return Residue{mod(a, modulus), modulus};
}

i64 powmod(i64 base, std::uint64_t exp, i64 n) {
    if (n == 1) return 0;
    i64 result = 1;
    i64 b = mod(base, n);
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, b, n);
        b = mulmod(b, b, n);
        exp >>= 1U;
    }
    return result;
}

i64 gcd(i64 a, i64 b) {
    // Unsigned magnitudes so that INT64_MIN does not overflow on negation.
    auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (ub != 0) {
        auto t = ua % ub;
        ua = ub;
        ub = t;
    }
    return static_cast<i64>(ua);
}

Bezout ext_gcd(i64 a, i64 b) {
    i128 old_r = a, r = b;
    i128 old_s = 1, s = 0;
    i128 old_t = 0, t = 1;
    while (r != 0) {
        i128 quot = old_r / r;
        i128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return Bezout{static_cast<i64>(old_r), static_cast<i64>(old_s), static_cast<i64>(old_t)};
}

i64 mod_inverse(i64 m, i64 n) {
    require_positive_modulus(n, "mod_inverse");
    if (n == 1) return 0;
    auto [g, x, y] = ext_gcd(mod(m, n), n);
    (void)y;
    if (g != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(g));
    }
    return mod(x, n);
}

CrtPart crt(std::span<const CrtPart> parts) {
    i64 residue = 0;
    i64 modulus = 1;
    for (const auto& part : parts) {
        require_positive_modulus(part.modulus, "crt");
        if (gcd(modulus, part.modulus) != 1) {
            throw Error(ErrorKind::ModuliNotCoprime,
                        "modulus " + std::to_string(part.modulus) + " shares a factor with " +
                            std::to_string(modulus));
        }
        i128 product = static_cast<i128>(modulus) * part.modulus;
        if (product > std::numeric_limits<i64>::max()) {
            throw Error(ErrorKind::Overflow, "crt modulus exceeds 64 bits");
        }
        // residue + modulus * ((part - residue) * modulus^{-1} mod part.modulus)
        i64 inv = mod_inverse(modulus, part.modulus);
        i64 lift = mulmod(mod(part.residue, part.modulus) - mod(residue, part.modulus), inv,
                          part.modulus);
        residue = static_cast<i64>(residue + static_cast<i128>(modulus) * lift);
        modulus = static_cast<i64>(product);
    }
    return CrtPart{mod(residue, modulus), modulus};
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    constexpr std::array<i64, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (i64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (i64 a : kWitnesses) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(i64 q, i64 p) {
    require_odd_prime(p);
    i64 e = powmod(q, static_cast<std::uint64_t>((p - 1) / 2), p);
    if (e == 0) return 0;
    return e == 1 ? 1 : -1;
}

std::optional<std::vector<i64>> sqrt_mod_prime(i64 a, i64 p) {
    const int symbol = legendre(a, p);
    if (symbol == 0) return std::vector<i64>{0};
    if (symbol < 0) return std::nullopt;
    a = mod(a, p);

    i64 root = 0;
    if (p % 4 == 3) {
        root = powmod(a, static_cast<std::uint64_t>((p + 1) / 4), p);
    } else {
        // Tonelli-Shanks; p - 1 = odd * 2^s.
        std::uint64_t odd = static_cast<std::uint64_t>(p - 1);
        int s = 0;
        while ((odd & 1U) == 0) {
            odd >>= 1U;
            ++s;
        }
        i64 z = 2;
        while (legendre(z, p) != -1) ++z;

        i64 c = powmod(z, odd, p);
        i64 x = powmod(a, (odd + 1) / 2, p);
        i64 t = powmod(a, odd, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            for (i64 t2 = t; t2 != 1; t2 = mulmod(t2, t2, p)) ++i;
            i64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            x = mulmod(x, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
        root = x;
    }
    i64 other = p - root;
    if (other < root) std::swap(root, other);
    return std::vector<i64>{root, other};
}

std::vector<PrimePower> factorize(i64 n) {
    if (n < 1) {
        throw Error(ErrorKind::OutOfRange, "factorize expects n >= 1, got " + std::to_string(n));
    }
    std::vector<PrimePower> out;
    auto strip = [&](i64 p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (i64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

i64 euler_phi(i64 n) {
    i64 phi = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        phi = phi / p * (p - 1);
    }
    return phi;
}

bool is_square_free(i64 n) {
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return false;
    }
    return true;
}

i64 ipow(i64 base, int exp) {
    if (exp < 0) throw Error(ErrorKind::OutOfRange, "ipow: negative exponent");
    i128 result = 1;
    for (int i = 0; i < exp; ++i) {
        result *= base;
        if (result > std::numeric_limits<i64>::max() || result < std::numeric_limits<i64>::min()) {
            throw Error(ErrorKind::Overflow, "ipow: " + std::to_string(base) + "^" +
                                                 std::to_string(exp) + " exceeds 64 bits");
        }
    }
    return static_cast<i64>(result);
}

}  // namespace dedekind
