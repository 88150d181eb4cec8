#include "dedekind/equality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include <omp.h>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

namespace {

void require_unit(i64 m, i64 n) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "modulus must be positive, got " + std::to_string(n));
    }
    const i64 g = gcd(m, n);
    if (g != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(g));
    }
}

void sort_classes(std::vector<EqualityClass>& classes) {
    std::sort(classes.begin(), classes.end(), [](const EqualityClass& a, const EqualityClass& b) {
        return a.representative() < b.representative();
    });
}

i64 orbit_representative(i64 m, i64 n) { return std::min(m, mod_inverse(m, n)); }

}  // namespace

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::identical: return "identical";
        case Relation::obvious_inverse: return "obvious-inverse";
        case Relation::non_obvious_equal: return "non-obvious-equal";
        case Relation::integer_difference_only: return "integer-difference-only";
        case Relation::unequal: return "unequal";
    }
    return "unknown";
}

bool necessary_condition(i64 m1, i64 m2, i64 n) {
    require_unit(m1, n);
    require_unit(m2, n);
    const i64 diff = mod(mod(m1, n) - mod(m2, n), n);
    const i64 prod_minus_one = mod(mulmod(m1, m2, n) - 1, n);
    return mulmod(diff, prod_minus_one, n) == 0;
}

bool integer_difference(i64 m1, i64 m2, i64 n) {
    return (dedekind_fast(m1, n) - dedekind_fast(m2, n)).is_integer();
}

PairVerdict classify_pair(i64 m1, i64 m2, i64 n) {
    require_unit(m1, n);
    require_unit(m2, n);
    PairVerdict v{m1, m2, n, Relation::unequal};
    const i64 a = mod(m1, n);
    const i64 b = mod(m2, n);
    if (a == b) {
        v.relation = Relation::identical;
    } else if (mulmod(a, b, n) == 1) {
        v.relation = Relation::obvious_inverse;
    } else {
        const Rational diff = dedekind_fast(a, n) - dedekind_fast(b, n);
        if (diff.sign() == 0) {
            v.relation = Relation::non_obvious_equal;
        } else if (diff.is_integer()) {
            v.relation = Relation::integer_difference_only;
        }
    }
    return v;
}

std::vector<i64> units(i64 n) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "modulus must be positive, got " + std::to_string(n));
    }
    if (n == 1) return {0};
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(euler_phi(n)));
    for (i64 m = 1; m < n; ++m) {
        if (gcd(m, n) == 1) out.push_back(m);
    }
    return out;
}

std::vector<i64> scaled_values(i64 n, std::span<const i64> unit_list, ClassOptions options) {
    std::vector<i64> keys(unit_list.size());
    const auto count = static_cast<std::int64_t>(unit_list.size());
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    // Contiguous static chunks; each slot is written by exactly one thread.
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        keys[static_cast<std::size_t>(i)] = scaled_sum(unit_list[static_cast<std::size_t>(i)], n);
    }
    return keys;
}

std::vector<EqualityClass> equality_classes(i64 n, ClassOptions options) {
    const std::vector<i64> unit_list = units(n);
    const std::vector<i64> keys = scaled_values(n, unit_list, options);

    std::vector<std::size_t> order(unit_list.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable: members of one class stay in ascending order.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    std::vector<EqualityClass> classes;
    for (std::size_t i = 0; i < order.size();) {
        const i64 key = keys[order[i]];
        EqualityClass cls{n, Rational(key, n), {}};
        for (; i < order.size() && keys[order[i]] == key; ++i) {
            cls.members.push_back(unit_list[order[i]]);
        }
        classes.push_back(std::move(cls));
    }
    sort_classes(classes);
    return classes;
}

std::vector<EqualityClass> equality_classes_serial(i64 n) {
    std::unordered_map<Rational, std::vector<i64>, RationalHash> groups;
    for (i64 m : units(n)) groups[dedekind_fast(m, n)].push_back(m);

    std::vector<EqualityClass> classes;
    classes.reserve(groups.size());
    for (auto& [value, members] : groups) classes.push_back({n, value, std::move(members)});
    sort_classes(classes);
    return classes;
}

std::vector<std::pair<i64, i64>> non_obvious_pairs(const EqualityClass& cls) {
    std::vector<i64> reps;
    for (i64 m : cls.members) reps.push_back(orbit_representative(m, cls.modulus));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    std::vector<std::pair<i64, i64>> pairs;
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a + 1; b < reps.size(); ++b) pairs.emplace_back(reps[a], reps[b]);
    }
    return pairs;
}

BoundsReport bounds_report(i64 n, ClassOptions options) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "modulus must be positive, got " + std::to_string(n));
    }
    const auto factors = factorize(n);
    BoundsReport report;
    report.n = n;
    for (const auto& [p, e] : factors) {
        if (e > 1) {
            throw Error(ErrorKind::NotSquareFree,
                        std::to_string(n) + " is divisible by " + std::to_string(p) + "^2");
        }
        ++report.r;
        report.lower_bound *= Rational(p - 1, 2);
    }
    report.bound_2r = i64{1} << report.r;

    const std::vector<i64> unit_list = units(n);
    const std::vector<i64> keys = scaled_values(n, unit_list, options);

    // S(m1) - S(m2) = (key1 - key2)/n, so equal values share a key and
    // integer differences share the key modulo n.
    std::unordered_map<i64, i64> by_value;
    std::unordered_map<i64, i64> by_fraction;
    for (i64 key : keys) {
        ++by_value[key];
        ++by_fraction[mod(key, n)];
    }
    report.distinct_values = static_cast<i64>(by_value.size());
    for (const auto& [key, count] : by_value) report.max_class_size = std::max(report.max_class_size, count);
    for (const auto& [key, count] : by_fraction) {
        report.max_integer_partners = std::max(report.max_integer_partners, count);
    }
    report.partners_within_bound = report.max_integer_partners <= report.bound_2r;
    report.distinct_above_lower = Rational(report.distinct_values, 1) >= report.lower_bound;
    return report;
}

std::vector<PivotReport> pivot_report(i64 n, i64 first, i64 last, ClassOptions options) {
    const std::vector<i64> unit_list = units(n);
    const std::vector<i64> keys = scaled_values(n, unit_list, options);
    auto key_of = [&](i64 m) {
        auto it = std::lower_bound(unit_list.begin(), unit_list.end(), mod(m, n));
        return keys[static_cast<std::size_t>(it - unit_list.begin())];
    };

    std::vector<PivotReport> out;
    for (i64 m1 = first; m1 <= last; ++m1) {
        if (gcd(m1, n) != 1) continue;
        PivotReport rep;
        rep.m1 = m1;
        const i64 pivot_key = key_of(m1);
        std::map<i64, std::vector<i64>> partner_groups;
        for (std::size_t i = 0; i < unit_list.size(); ++i) {
            if (keys[i] == pivot_key) ++rep.class_size;
            if (necessary_condition(m1, unit_list[i], n)) partner_groups[keys[i]].push_back(unit_list[i]);
        }
        for (const auto& [key, members] : partner_groups) {
            rep.condition_partners += static_cast<i64>(members.size());
            rep.largest_equal_group = std::max(rep.largest_equal_group, static_cast<i64>(members.size()));
            if (!non_obvious_pairs(EqualityClass{n, Rational(key, n), members}).empty()) {
                rep.has_non_obvious = true;
            }
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace dedekind
