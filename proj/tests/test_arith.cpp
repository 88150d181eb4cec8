#include <doctest.h>

#include <random>

#include "dedekind/arith.hpp"
#include "oracles.hpp"

using namespace dedekind;
using dedekind::testing::brute_phi;
using dedekind::testing::brute_sqrt;

TEST_CASE("gcd") {
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(41, 200) == 1);
    CHECK(gcd(144, 1296) == 144);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
}

TEST_CASE("ext_gcd satisfies Bezout with small coefficients") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> dist(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        const i64 a = dist(rng), b = dist(rng);
        const auto [g, x, y] = ext_gcd(a, b);
        CHECK(g == gcd(a, b));
        CHECK(static_cast<i128>(a) * x + static_cast<i128>(b) * y == g);
        if (a != 0 && b != 0) {
            CHECK(std::abs(x) <= std::abs(b) / g);
            CHECK(std::abs(y) <= std::abs(a) / g);
        }
    }
}

TEST_CASE("mod_inverse") {
    for (i64 n = 2; n < 30; ++n) CHECK(mod_inverse(1, n) == 1);
    CHECK(mod_inverse(41, 200) == 161);
    CHECK(mod_inverse(4943, 493493) == 488601);
    CHECK(mod_inverse(-41, 200) == 200 - 161);
    CHECK_THROWS_AS(mod_inverse(4, 8), Error);
    try {
        mod_inverse(6, 9);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
        CHECK(std::string(e.what()).find("= 3") != std::string::npos);
    }
}

TEST_CASE("mod_inverse is an involution") {
    for (i64 n = 1; n <= 300; ++n) {
        for (i64 m = 0; m < n; ++m) {
            if (gcd(m, n) != 1) continue;
            CHECK(mod_inverse(mod_inverse(m, n), n) == mod(m, n));
        }
    }
}

TEST_CASE("crt") {
    const std::vector<CrtPart> trivial{{0, 1}};
    CHECK(crt(trivial).residue == 0);
    CHECK(crt(trivial).modulus == 1);

    const std::vector<CrtPart> constant{{2, 11}, {2, 13}};
    CHECK(crt(constant).residue == 2);
    CHECK(crt(constant).modulus == 143);

    const std::vector<CrtPart> literal{{2, 11}, {7, 13}, {12, 17}, {19, 29}};
    const CrtPart combined = crt(literal);
    CHECK(combined.modulus == 70499);
    CHECK(combined.residue == 41373);  // brute-force search over [0, 70499)
    for (const auto& part : literal) CHECK(mod(combined.residue, part.modulus) == part.residue);

    // Roots of m^2 - 7m - 1 mod each prime (brute force) combine to a root mod 70499.
    const std::vector<CrtPart> roots{{2, 11}, {3, 13}, {9, 17}, {10, 29}};
    const i64 m = crt(roots).residue;
    CHECK(m == 33244);
    CHECK(mod(mulmod(m, m, 70499) - 7 * m - 1, 70499) == 0);

    const std::vector<CrtPart> shared{{1, 6}, {1, 9}};
    CHECK_THROWS_AS(crt(shared), Error);
}

TEST_CASE("crt output agrees with every part") {
    std::mt19937_64 rng(11);
    const std::vector<i64> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CrtPart> parts;
        for (i64 p : primes) {
            if (rng() % 2 == 0) parts.push_back({static_cast<i64>(rng() % 1000) - 500, p});
        }
        const CrtPart c = crt(parts);
        CHECK(c.residue >= 0);
        CHECK(c.residue < c.modulus);
        for (const auto& part : parts) CHECK(mod(c.residue, part.modulus) == mod(part.residue, part.modulus));
    }
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(28201));
    CHECK_FALSE(is_prime(141005));
    CHECK(is_prime(2305843009213693951LL));  // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751LL));       // strong pseudoprime to 2, 3, 5, 7
    for (i64 n = 0; n < 2000; ++n) {
        bool brute = n >= 2;
        for (i64 d = 2; d * d <= n; ++d) brute = brute && n % d != 0;
        CHECK(is_prime(n) == brute);
    }
}

TEST_CASE("legendre") {
    CHECK(legendre(53, 11) == 1);
    CHECK(legendre(5, 11) == 1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(49, 13) == 1);
    CHECK_THROWS_AS(legendre(3, 2), Error);
    CHECK_THROWS_AS(legendre(3, 15), Error);
}

TEST_CASE("legendre matches Euler's criterion by brute force") {
    for (i64 p = 3; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        for (i64 a = -p; a < 2 * p; ++a) {
            const bool residue = !brute_sqrt(a, p).empty();
            const int expected = mod(a, p) == 0 ? 0 : (residue ? 1 : -1);
            CHECK(legendre(a, p) == expected);
        }
    }
}

TEST_CASE("sqrt_mod_prime") {
    CHECK(*sqrt_mod_prime(0, 7) == std::vector<i64>{0});
    CHECK(*sqrt_mod_prime(53, 11) == std::vector<i64>{3, 8});
    CHECK(*sqrt_mod_prime(2, 7) == std::vector<i64>{3, 4});
    CHECK_FALSE(sqrt_mod_prime(3, 7).has_value());
    // p = 1 mod 8 exercises the full Tonelli-Shanks loop.
    CHECK(*sqrt_mod_prime(10, 4129) == brute_sqrt(10, 4129));
}

TEST_CASE("sqrt_mod_prime exhaustive for p < 100") {
    for (i64 p = 3; p < 100; p += 2) {
        if (!is_prime(p)) continue;
        for (i64 a = 0; a < p; ++a) {
            const auto roots = sqrt_mod_prime(a, p);
            const auto brute = brute_sqrt(a, p);
            if (brute.empty()) {
                CHECK_FALSE(roots.has_value());
            } else {
                REQUIRE(roots.has_value());
                CHECK(*roots == brute);
                for (i64 x : *roots) CHECK(mulmod(x, x, p) == a);
            }
        }
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(70499) == 53760);
    for (i64 n = 1; n <= 2000; ++n) CHECK(euler_phi(n) == brute_phi(n));
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(493493) == std::vector<PrimePower>{{7, 1}, {11, 1}, {13, 1}, {17, 1}, {29, 1}});
    CHECK(factorize(141005) == std::vector<PrimePower>{{5, 1}, {28201, 1}});
    CHECK(factorize(1296) == std::vector<PrimePower>{{2, 4}, {3, 4}});
    CHECK(is_square_free(17017));
    CHECK_FALSE(is_square_free(243));
    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("Residue canonicalises") {
    CHECK(Residue::of(-1, 7) == Residue{6, 7});
    CHECK(Residue::of(14, 7).value == 0);
    CHECK_THROWS_AS(Residue::of(1, 0), Error);
}
