#include <doctest.h>

#include <algorithm>
#include <set>

#include "dedekind/equality.hpp"
#include "oracles.hpp"

using namespace dedekind;
using dedekind::testing::brute_classes;

namespace {

std::vector<std::vector<i64>> member_lists(const std::vector<EqualityClass>& classes) {
    std::vector<std::vector<i64>> out;
    for (const auto& c : classes) out.push_back(c.members);
    std::sort(out.begin(), out.end());
    return out;
}

const EqualityClass& class_of(const std::vector<EqualityClass>& classes, i64 m) {
    for (const auto& c : classes) {
        if (std::binary_search(c.members.begin(), c.members.end(), m)) return c;
    }
    throw std::logic_error("no class");
}

}  // namespace

TEST_CASE("necessary_condition") {
    CHECK(necessary_condition(7, 7, 30));
    CHECK(necessary_condition(7, mod_inverse(7, 30), 30));
    CHECK(necessary_condition(41, 81, 200));
    CHECK_FALSE(necessary_condition(1, 2, 5));
    CHECK_THROWS_AS(necessary_condition(2, 3, 4), Error);
}

TEST_CASE("integer_difference") {
    CHECK(integer_difference(11, 11, 30));
    CHECK(integer_difference(2, 3, 5) == necessary_condition(2, 3, 5));
    CHECK(integer_difference(2, 3, 5));  // S(2,5) = S(3,5) = 0
}

TEST_CASE("classify_pair") {
    CHECK(classify_pair(41, 161, 200).relation == Relation::obvious_inverse);
    CHECK(classify_pair(41, 81, 200).relation == Relation::non_obvious_equal);
    CHECK(classify_pair(1, 2, 5).relation == Relation::unequal);
    CHECK(classify_pair(3, 203, 200).relation == Relation::identical);
    CHECK(classify_pair(2, 3, 5).relation == Relation::obvious_inverse);  // 2*3 = 1 mod 5
    // 1 and 4 mod 15: 1*4 != 1, (1-4)(4-1) = -9, not divisible by 15.
    CHECK(classify_pair(1, 4, 15).relation == Relation::unequal);
    // S(1,4) - S(3,4) = 3/2 - (-3/2) = 3.
    CHECK(classify_pair(1, 3, 4).relation == Relation::integer_difference_only);
    // 4 is self-inverse mod 15; congruence takes precedence.
    CHECK(classify_pair(4, 19, 15).relation == Relation::identical);
}

TEST_CASE("units") {
    CHECK(units(1) == std::vector<i64>{0});
    CHECK(units(10) == std::vector<i64>{1, 3, 7, 9});
}

TEST_CASE("equality_classes for small primes match the oracle") {
    for (i64 p : {7, 11, 13}) {
        const auto classes = equality_classes(p);
        CHECK(member_lists(classes) == brute_classes(p));
        for (const auto& c : classes) {
            // Only obvious equalities occur for a prime modulus.
            CHECK(non_obvious_pairs(c).empty());
            CHECK(c.members.size() <= 2);
        }
    }
    CHECK(member_lists(equality_classes(7)) == std::vector<std::vector<i64>>{{1}, {2, 4}, {3, 5}, {6}});
}

TEST_CASE("equality_classes examples") {
    const auto c25 = equality_classes(25);
    const auto& six = class_of(c25, 6);
    CHECK(six.members == std::vector<i64>{6, 11, 16, 21});
    CHECK(six.value == Rational(2, 25) - Rational(2));

    const auto c1 = equality_classes(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].members == std::vector<i64>{0});
    CHECK(c1[0].value == Rational(0));
}

TEST_CASE("n = 243 among 1 + 9m") {
    std::set<std::pair<i64, i64>> pairs;
    for (auto c : equality_classes(243)) {
        std::erase_if(c.members, [](i64 m) { return m % 9 != 1 || m % 27 == 1; });
        if (c.members.empty()) continue;
        for (const auto& p : non_obvious_pairs(c)) pairs.insert(p);
    }
    // 37 = 1 + 9*4, 127 = 1 + 9*14, 100 = 1 + 9*11, 145 = 1 + 9*16.
    CHECK(pairs == std::set<std::pair<i64, i64>>{{37, 127}, {100, 145}});
}

TEST_CASE("parallel kernel and serial reference agree") {
    for (i64 n : {1, 2, 30, 97, 200, 243, 1001, 4096, 17017}) {
        const auto parallel = equality_classes(n);
        const auto serial = equality_classes_serial(n);
        CHECK(parallel == serial);
        CHECK(equality_classes(n, ClassOptions{3}) == parallel);
    }
}

TEST_CASE("class structure invariants") {
    for (i64 n = 1; n <= 400; ++n) {
        const auto classes = equality_classes(n);
        std::vector<i64> all;
        for (const auto& c : classes) {
            CHECK(std::is_sorted(c.members.begin(), c.members.end()));
            CHECK(std::adjacent_find(c.members.begin(), c.members.end()) == c.members.end());
            for (i64 m : c.members) {
                // Closed under inversion.
                CHECK(std::binary_search(c.members.begin(), c.members.end(), n == 1 ? 0 : mod_inverse(m, n)));
                all.push_back(m);
            }
        }
        std::sort(all.begin(), all.end());
        CHECK(all == units(n));
        for (std::size_t i = 1; i < classes.size(); ++i) {
            CHECK(classes[i - 1].representative() < classes[i].representative());
        }
    }
}

TEST_CASE("prime powers: m1 not +-1 mod p has only obvious partners") {
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53}) {
        for (i64 pk = p * p; pk <= 3000; pk *= p) {
            for (const auto& c : equality_classes(pk)) {
                for (i64 m1 : c.members) {
                    if (mod(m1, p) == 1 || mod(m1, p) == p - 1) continue;
                    std::set<i64> expected{m1, mod_inverse(m1, pk)};
                    CHECK(std::set<i64>(c.members.begin(), c.members.end()) == expected);
                }
            }
        }
    }
}

TEST_CASE("bounds_report") {
    const BoundsReport r15 = bounds_report(15);
    CHECK(r15.r == 2);
    CHECK(r15.bound_2r == 4);
    CHECK(r15.lower_bound == Rational(2));  // (3-1)/2 * (5-1)/2
    CHECK(r15.max_integer_partners <= 4);
    CHECK(r15.distinct_values >= 4);
    CHECK(r15.distinct_values == 6);        // oracle sweep of n = 15
    CHECK(r15.max_integer_partners == 2);
    CHECK(r15.max_class_size == 2);

    for (i64 p : {3, 5, 7, 101, 997}) {
        const BoundsReport r = bounds_report(p);
        CHECK(r.bound_2r == 2);
        CHECK(r.max_integer_partners <= 2);
        CHECK(Rational(r.distinct_values) >= Rational(p - 1, 2));
    }
    CHECK_THROWS_AS(bounds_report(12), Error);
}

TEST_CASE("pivot report for 17017") {
    const auto reports = pivot_report(17017, 2, 6);
    REQUIRE(reports.size() == 5);
    std::vector<i64> partners, groups;
    for (const auto& r : reports) {
        partners.push_back(r.condition_partners);
        groups.push_back(r.largest_equal_group);
        CHECK(r.has_non_obvious);
        CHECK(r.class_size == 2);
    }
    CHECK(partners == std::vector<i64>{16, 16, 16, 16, 8});
    CHECK(groups[2] == 8);
    CHECK(groups[3] == 10);
}
