#pragma once

/**
 * @file equality.hpp
 * @brief Equal Dedekind sums for a fixed modulus.
 *
 * S(m1,n) - S(m2,n) is an integer exactly when n | (m1 - m2)(m1 m2 - 1).
 * Equality itself has no such criterion, so equality_classes decides it by
 * exhaustive exact evaluation over the units mod n.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dedekind/arith.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

struct EqualityClass {
    i64 modulus = 1;
    Rational value;
    std::vector<i64> members;  // ascending, coprime to modulus

    i64 representative() const { return members.front(); }
    friend bool operator==(const EqualityClass&, const EqualityClass&) = default;
};

enum class Relation {
    identical,
    obvious_inverse,
    non_obvious_equal,
    integer_difference_only,
    unequal,
};

std::string_view to_string(Relation relation);

struct PairVerdict {
    i64 m1 = 0;
    i64 m2 = 0;
    i64 n = 1;
    Relation relation = Relation::unequal;
};

/// n | (m1 - m2)(m1 m2 - 1). Throws NotCoprime.
bool necessary_condition(i64 m1, i64 m2, i64 n);

/// S(m1,n) - S(m2,n) is an integer, decided by exact evaluation.
bool integer_difference(i64 m1, i64 m2, i64 n);

PairVerdict classify_pair(i64 m1, i64 m2, i64 n);

/// Units mod n in ascending order; {0} for n = 1.
std::vector<i64> units(i64 n);

struct ClassOptions {
    /// OpenMP worker count; 0 means the runtime default.
    int threads = 0;
};

/// All equality classes mod n, sorted by smallest member, singletons included.
/// Parallel kernel: evaluates n*S(m,n) as an integer across OpenMP threads.
std::vector<EqualityClass> equality_classes(i64 n, ClassOptions options = {});

/// Serial reference: groups Rational values from dedekind_fast in a hash map.
std::vector<EqualityClass> equality_classes_serial(i64 n);

/// n*S(m,n) for every unit m (same order as units(n)), computed in parallel.
std::vector<i64> scaled_values(i64 n, std::span<const i64> unit_list, ClassOptions options = {});

/// Pairs (a, b), a < b, of inverse-orbit representatives min(x, x*) sharing
/// a class: the equalities that are not explained by congruence or inversion.
std::vector<std::pair<i64, i64>> non_obvious_pairs(const EqualityClass& cls);

struct BoundsReport {
    i64 n = 1;
    int r = 0;                       // number of prime factors
    i64 max_class_size = 0;          // largest equality class
    i64 max_integer_partners = 0;    // max over m1 of #{m2 : S(m1)-S(m2) in Z}
    i64 distinct_values = 0;
    i64 bound_2r = 1;                // 2^r
    Rational lower_bound{1};         // prod (p_j - 1)/2, fractional when 2 | n
    bool partners_within_bound = true;
    bool distinct_above_lower = true;
};

/// Throws NotSquareFree.
BoundsReport bounds_report(i64 n, ClassOptions options = {});

struct PivotReport {
    i64 m1 = 0;
    i64 condition_partners = 0;  // #{m2 unit : n | (m1-m2)(m1 m2-1)}
    i64 largest_equal_group = 0; // largest set of equal S values among those partners
    i64 class_size = 0;          // #{m2 : S(m2) = S(m1)}
    bool has_non_obvious = false; // some partners share a value non-obviously
};

/// Per-pivot statistics over the units mod n, for the pivots coprime to n.
std::vector<PivotReport> pivot_report(i64 n, i64 first, i64 last, ClassOptions options = {});

}  // namespace dedekind
