#include "dedekind/reproductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>

#include "dedekind/arith.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/equality.hpp"
#include "dedekind/families.hpp"

namespace dedekind {

namespace {

/// Collects mismatches; the first few end up in the result detail.
class Check {
public:
    template <typename T, typename U>
    void equal(const std::string& what, const T& actual, const U& expected) {
        if (!(actual == expected)) {
            std::ostringstream os;
            os << what << ": expected " << render(expected) << ", got " << render(actual);
            failures_.push_back(os.str());
        }
    }

    void that(const std::string& what, bool ok) {
        if (!ok) failures_.push_back(what);
    }

    ReplayResult result() const {
        ReplayResult r;
        r.pass = failures_.empty();
        for (const auto& f : failures_) r.detail += (r.detail.empty() ? "" : "; ") + f;
        return r;
    }

private:
    template <typename T>
    static std::string render(const T& v) {
        std::ostringstream os;
        if constexpr (requires { v.begin(); v.end(); } && !std::is_convertible_v<T, std::string>) {
            os << '[';
            bool first = true;
            for (const auto& x : v) {
                os << (first ? "" : ",") << render(x);
                first = false;
            }
            os << ']';
        } else if constexpr (requires { v.prime; v.exponent; }) {
            os << v.prime << '^' << v.exponent;
        } else if constexpr (requires { v.first; v.second; }) {
            os << '(' << v.first << ',' << v.second << ')';
        } else {
            os << v;
        }
        return os.str();
    }

    std::vector<std::string> failures_;
};

ReplayResult theorem1_d8n5() {
    Check c;
    c.equal("S(41,200)", dedekind_fast(41, 200), Rational(501, 100));
    c.equal("S(41,200) decimal", dedekind_fast(41, 200).to_decimal(2), std::string("5.01"));
    for (i64 m = 1; m <= 4; ++m) {
        c.equal("S(1+40*" + std::to_string(m) + ",200)", dedekind_fast(1 + 40 * m, 200), Rational(501, 100));
    }
    const PowerFamily f = theorem1_family(8, 5, 1);
    c.equal("members", f.members, std::vector<i64>{41, 81, 121, 161});
    c.equal("predicted", f.predicted_value, Rational(501, 100));
    return c.result();
}

ReplayResult theorem1_obviousness() {
    Check c;
    // 41 and 161 are inverses mod 200, not mod 100.
    c.equal("41*161 mod 200", mulmod(41, 161, 200), i64{1});
    c.equal("classify(41,161,200)", std::string(to_string(classify_pair(41, 161, 200).relation)),
            std::string("obvious-inverse"));
    c.equal("classify(41,81,200)", std::string(to_string(classify_pair(41, 81, 200).relation)),
            std::string("non-obvious-equal"));
    return c.result();
}

ReplayResult corollary1_l6() {
    Check c;
    const Rational expected = Rational(2, 1296) + Rational(13);
    c.equal("2/1296+16-3", Rational(2, 1296) + Rational(16) - Rational(3), expected);
    for (i64 m : {1, 2, 4, 5, 7, 8}) {
        c.equal("S(1+144*" + std::to_string(m) + ",1296)", dedekind_fast(1 + 144 * m, 1296), expected);
    }
    const PowerFamily f = corollary1_family(6, 4, 2, 4, 1);
    c.equal("predicted", f.predicted_value, expected);
    c.equal("members", f.members, std::vector<i64>{145, 289, 577, 721, 1009, 1153});
    for (i64 m : {1, 2, 4}) {
        c.equal("non-obvious S(1+144*" + std::to_string(m) + ")",
                std::string(to_string(classify_pair(1 + 144 * m, 1 + 144 * (m == 1 ? 2 : 1), 1296).relation)),
                std::string("non-obvious-equal"));
    }
    return c.result();
}

ReplayResult corollary1_l12() {
    Check c;
    const Rational expected(2, 1728);
    c.equal("2/1728+36/12-3", Rational(2, 1728) + Rational(36, 12) - Rational(3), expected);
    for (i64 m : {1, 5, 7, 11}) {
        c.equal("S(1+72*" + std::to_string(m) + ",1728)", dedekind_fast(1 + 72 * m, 1728), expected);
    }
    const PowerFamily f = corollary1_family(12, 3, 1, 6, 1);
    c.equal("predicted", f.predicted_value, expected);
    c.equal("family size", f.members.size(), std::size_t{8});
    for (i64 m : {5, 7, 11}) {
        c.equal("S(73) vs S(1+72*" + std::to_string(m) + ")",
                std::string(to_string(classify_pair(73, 1 + 72 * m, 1728).relation)),
                std::string("non-obvious-equal"));
    }
    return c.result();
}

ReplayResult corollary3_n25() {
    Check c;
    const auto classes = equality_classes(25);
    const auto it = std::find_if(classes.begin(), classes.end(),
                                 [](const EqualityClass& cls) { return cls.representative() == 6; });
    c.that("class of 6 mod 25 exists", it != classes.end());
    if (it != classes.end()) {
        c.equal("class of 6 mod 25", it->members, std::vector<i64>{6, 11, 16, 21});
        c.equal("value", it->value, Rational(2, 25) - Rational(2));
    }
    const PowerFamily f = corollary3_family(5, 1);
    c.equal("family members", f.members, std::vector<i64>{6, 11, 16, 21});
    return c.result();
}

ReplayResult n243_values() {
    Check c;
    std::set<Rational> z;
    for (i64 m = 1; m < 27; ++m) {
        if (m % 3 == 0) continue;
        const Rational shifted = dedekind_fast(1 + 9 * m, 243) - Rational(83, 243);
        c.that("S(1+9*" + std::to_string(m) + ",243) - 83/243 is an integer", shifted.is_integer());
        z.insert(shifted);
    }
    c.equal("z-set", std::vector<Rational>(z.begin(), z.end()),
            std::vector<Rational>{-27, -19, -11, -3, 5, 13, 21});
    return c.result();
}

ReplayResult n243_pairs() {
    Check c;
    std::vector<std::pair<i64, i64>> pairs;
    for (const auto& cls : equality_classes(243)) {
        EqualityClass filtered{cls.modulus, cls.value, {}};
        for (i64 m : cls.members) {
            if (m % 9 == 1 && m % 27 != 1) filtered.members.push_back(m);  // 1 + 9m with 3 not dividing m
        }
        if (filtered.members.empty()) continue;
        for (const auto& p : non_obvious_pairs(filtered)) pairs.push_back(p);
    }
    std::sort(pairs.begin(), pairs.end());
    c.equal("non-obvious pairs among 1 mod 9", pairs,
            std::vector<std::pair<i64, i64>>{{37, 127}, {100, 145}});
    c.equal("S(37,243)", dedekind_fast(37, 243), Rational(83, 243) + Rational(5));
    c.equal("S(100,243)", dedekind_fast(100, 243), Rational(83, 243) - Rational(11));
    return c.result();
}

const QuadraticFamily& t7_family() {
    static const QuadraticFamily family = corollary4_family(7, {11, 13, 17, 29});
    return family;
}

ReplayResult quad_t7_arguments() {
    Check c;
    const auto [q, k] = decompose(7);
    c.equal("q", q, i64{53});
    c.equal("k", k, i64{1});
    for (i64 p : {11, 13, 17, 29}) c.equal("(53/" + std::to_string(p) + ")", legendre(53, p), 1);
    const QuadraticFamily& f = t7_family();
    c.equal("n", f.n, i64{70499});
    c.equal("nt", f.nt, i64{493493});
    c.equal("solution count", f.solutions.size(), std::size_t{16});
    c.that("706 is a solution", std::binary_search(f.solutions.begin(), f.solutions.end(), i64{706}));
    const std::vector<i64> first(f.arguments.begin(), f.arguments.begin() + std::min<std::size_t>(5, f.arguments.size()));
    c.equal("first five arguments", first, std::vector<i64>{4943, 58535, 79556, 94669, 148261});
    std::vector<i64> inverses;
    for (i64 a : first) inverses.push_back(mod_inverse(a, f.nt));
    c.equal("their inverses", inverses, std::vector<i64>{488601, 435009, 413988, 398875, 345283});
    return c.result();
}

ReplayResult quad_t7_value() {
    Check c;
    const QuadraticFamily& f = t7_family();
    const Rational expected = Rational(2, 493493) + Rational(7, 70499) - Rational(3);
    c.equal("predicted", f.predicted_value, expected);
    c.equal("decimal", expected.to_decimal(10), std::string("-2.9998966551"));
    for (i64 a : f.arguments) c.equal("S(" + std::to_string(a) + ",493493)", dedekind_fast(a, f.nt), expected);
    return c.result();
}

ReplayResult quad_t7_shift() {
    Check c;
    const QuadraticFamily shifted = shift_t(t7_family(), 2);
    c.equal("t1", shifted.t, i64{141005});
    c.equal("factors of t1", factorize(shifted.t), std::vector<PrimePower>{{5, 1}, {28201, 1}});
    c.equal("argument count", shifted.arguments.size(), std::size_t{16});
    c.equal("decimal", shifted.predicted_value.to_decimal(10), std::string("-0.9999007076"));
    c.that("all 16 sums equal the predicted value", verify(shifted).all_match);
    return c.result();
}

struct TableRow {
    i64 t, q, k;
    std::vector<i64> primes;
};

ReplayResult table_row(const TableRow& row) {
    Check c;
    const auto [q, k] = decompose(row.t);
    c.equal("q", q, row.q);
    c.equal("k", k, row.k);
    c.equal("primes", table1_sieve(row.t, 6, true), row.primes);
    return c.result();
}

ReplayResult n17017_pivots() {
    Check c;
    const auto reports = pivot_report(17017, 2, 6);
    std::vector<i64> partners, groups;
    bool all_non_obvious = true;
    for (const auto& r : reports) {
        partners.push_back(r.condition_partners);
        groups.push_back(r.largest_equal_group);
        all_non_obvious = all_non_obvious && r.has_non_obvious;
    }
    c.equal("condition partners m1=2..6", partners, std::vector<i64>{16, 16, 16, 16, 8});
    c.that("non-obvious equality for every m1", all_non_obvious);
    if (groups.size() == 5) {
        c.equal("equal-value count m1=4", groups[2], i64{8});
        c.equal("equal-value count m1=5", groups[3], i64{10});
    }
    return c.result();
}

std::vector<ReplayItem> build_items() {
    std::vector<ReplayItem> items{
        {"theorem1.d8n5", "theorem1", "S(1+40m,200) = 501/100 for m=1..4", theorem1_d8n5},
        {"theorem1.obvious", "theorem1", "41,161 inverse mod 200; 41,81 non-obvious", theorem1_obviousness},
        {"corollary1.l6k4r2q4", "corollary1", "S(1+144m,1296) = 2/1296 + 13", corollary1_l6},
        {"corollary1.l12k3r1q6", "corollary1", "S(1+72m,1728) = 2/1728", corollary1_l12},
        {"corollary3.p5", "corollary3", "class {6,11,16,21} mod 25 with value 2/25 - 2", corollary3_n25},
        {"n243.values", "n243", "S(1+9m,243) = 83/243 + z", n243_values},
        {"n243.pairs", "n243", "equal pairs m=4,14 and m=11,16", n243_pairs},
        {"quad.t7.arguments", "quad", "16 solutions mod 70499, first five arguments and inverses", quad_t7_arguments},
        {"quad.t7.value", "quad", "common value 2/493493 + 7/70499 - 3", quad_t7_value},
        {"quad.t7.shift2", "quad", "t1 = 141005, value -0.9999007076", quad_t7_shift},
    };
    const std::vector<TableRow> rows{
        {1, 5, 1, {11, 19, 29, 31, 41, 59}},  {2, 2, 2, {7, 17, 23, 31, 41, 47}},
        {3, 13, 1, {17, 23, 29, 43, 53, 61}}, {5, 29, 1, {7, 13, 23, 53, 59, 67}},
        {6, 10, 2, {13, 31, 37, 41, 43, 53}}, {7, 53, 1, {11, 13, 17, 29, 37, 43}},
        {10, 26, 2, {11, 17, 19, 23, 37, 59}},
    };
    for (const auto& row : rows) {
        items.push_back({"table1.t" + std::to_string(row.t), "table1",
                         "eligible primes for t = " + std::to_string(row.t), [row] { return table_row(row); }});
    }
    items.push_back({"n17017.pivots", "n17017", "pivots m1=2..6 of n = 7*11*13*17", n17017_pivots});
    return items;
}

}  // namespace

const std::vector<ReplayItem>& replay_items() {
    static const std::vector<ReplayItem> items = build_items();
    return items;
}

}  // namespace dedekind
