#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedekind/arith.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/equality.hpp"
#include "dedekind/families.hpp"
#include "dedekind/reproductions.hpp"

namespace dedekind::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Globals {
    Format format = Format::text;
    int digits = 10;
    int threads = 0;
};

/// Formatting shared by every subcommand.
class Printer {
public:
    Printer(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

    Format format() const { return g_.format; }
    std::ostream& out() { return out_; }

    json rational(const Rational& r) const {
        return json{{"num", r.numerator().get_str()},
                    {"den", r.denominator().get_str()},
                    {"decimal", r.to_decimal(g_.digits)}};
    }

    std::string text(const Rational& r) const {
        return r.to_string() + " (" + r.to_decimal(g_.digits) + ")";
    }

    std::string csv(const Rational& r) const {
        return r.numerator().get_str() + "," + r.denominator().get_str() + "," + r.to_decimal(g_.digits);
    }

    void emit(const json& record) { out_ << record.dump(2) << '\n'; }

private:
    const Globals& g_;
    std::ostream& out_;
};

std::string join(const std::vector<i64>& values, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

json to_json(const std::vector<std::pair<i64, i64>>& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

i64 parse_i64(const std::string& text) {
    i64 value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw CLI::ValidationError("not an integer: '" + text + "'");
    return value;
}

// "a..b"
std::pair<i64, i64> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const i64 v = parse_i64(text);
        return {v, v};
    }
    return {parse_i64(text.substr(0, dots)), parse_i64(text.substr(dots + 2))};
}

// "AmodB" -> {A, B}
std::pair<i64, i64> parse_filter(const std::string& text) {
    const auto pos = text.find("mod");
    if (pos == std::string::npos) throw CLI::ValidationError("filter must look like 1mod9");
    const i64 modulus = parse_i64(text.substr(pos + 3));
    if (modulus <= 0) throw CLI::ValidationError("filter modulus must be positive");
    return {mod(parse_i64(text.substr(0, pos)), modulus), modulus};
}

// ---------------------------------------------------------------- sum

struct SumArgs {
    i64 m = 0;
    i64 n = 1;
    bool oracle = false;
    bool little = false;
};

int cmd_sum(const SumArgs& a, Printer& p) {
    const DedekindEval eval = evaluate(a.m, a.n, a.oracle ? Method::oracle : Method::fast);
    const Rational little = eval.value / Rational(12);
    switch (p.format()) {
        case Format::text:
            p.out() << p.text(eval.value) << '\n';
            if (a.little) p.out() << "s = " << p.text(little) << '\n';
            break;
        case Format::json: {
            json rec{{"command", "sum"}, {"m", eval.m}, {"n", eval.n},
                     {"method", std::string(to_string(eval.method))}, {"S", p.rational(eval.value)}};
            if (a.little) rec["s"] = p.rational(little);
            p.emit(rec);
            break;
        }
        case Format::csv:
            p.out() << "m,n,method,S_num,S_den,S_decimal" << (a.little ? ",s_num,s_den,s_decimal" : "") << '\n';
            p.out() << eval.m << ',' << eval.n << ',' << to_string(eval.method) << ',' << p.csv(eval.value);
            if (a.little) p.out() << ',' << p.csv(little);
            p.out() << '\n';
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- classes

struct ClassesArgs {
    i64 n = 1;
    std::string filter;
    bool non_singleton = false;
    bool non_obvious = false;
    bool bounds = false;
    std::string pivot;
    i64 max_n = 1'000'000;
};

int cmd_classes(const ClassesArgs& a, const Globals& g, Printer& p) {
    if (a.n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
    if (a.n > a.max_n) {
        throw Error(ErrorKind::OutOfRange, "n = " + std::to_string(a.n) + " exceeds the scale bound " +
                                               std::to_string(a.max_n) + " (raise it with --max-n)");
    }
    const ClassOptions opts{g.threads};
    std::optional<std::pair<i64, i64>> filter;
    if (!a.filter.empty()) filter = parse_filter(a.filter);

    struct Shown {
        EqualityClass cls;
        std::vector<std::pair<i64, i64>> pairs;
    };
    std::vector<Shown> shown;
    for (auto& cls : equality_classes(a.n, opts)) {
        if (filter) {
            std::erase_if(cls.members, [&](i64 m) { return mod(m, filter->second) != filter->first; });
            if (cls.members.empty()) continue;
        }
        if (a.non_singleton && cls.members.size() < 2) continue;
        auto pairs = non_obvious_pairs(cls);
        if (a.non_obvious && pairs.empty()) continue;
        shown.push_back({std::move(cls), std::move(pairs)});
    }

    std::optional<BoundsReport> bounds;
    if (a.bounds) bounds = bounds_report(a.n, opts);
    std::vector<PivotReport> pivots;
    if (!a.pivot.empty()) {
        const auto [lo, hi] = parse_range(a.pivot);
        pivots = pivot_report(a.n, lo, hi, opts);
    }

    switch (p.format()) {
        case Format::text:
            p.out() << "n = " << a.n << ", " << shown.size() << " classes shown\n";
            for (const auto& s : shown) {
                p.out() << "  " << p.text(s.cls.value) << ": {" << join(s.cls.members, ", ") << "}";
                if (!s.pairs.empty()) {
                    p.out() << "  non-obvious:";
                    for (const auto& [x, y] : s.pairs) p.out() << " (" << x << "," << y << ")";
                }
                p.out() << '\n';
            }
            if (bounds) {
                p.out() << "bounds: r = " << bounds->r << ", max class size = " << bounds->max_class_size
                        << ", max integer-difference partners = " << bounds->max_integer_partners
                        << " <= 2^r = " << bounds->bound_2r << (bounds->partners_within_bound ? " ok" : " VIOLATED")
                        << ", distinct values = " << bounds->distinct_values
                        << " >= " << bounds->lower_bound.to_string()
                        << (bounds->distinct_above_lower ? " ok" : " VIOLATED") << '\n';
            }
            for (const auto& pv : pivots) {
                p.out() << "pivot m1 = " << pv.m1 << ": condition partners " << pv.condition_partners
                        << ", largest equal-value group " << pv.largest_equal_group << ", class size "
                        << pv.class_size << ", non-obvious " << (pv.has_non_obvious ? "yes" : "no") << '\n';
            }
            break;
        case Format::json: {
            json rec{{"command", "classes"}, {"n", a.n}};
            json arr = json::array();
            for (const auto& s : shown) {
                arr.push_back(json{{"representative", s.cls.representative()},
                                   {"value", p.rational(s.cls.value)},
                                   {"members", s.cls.members},
                                   {"non_obvious_pairs", to_json(s.pairs)}});
            }
            rec["classes"] = std::move(arr);
            if (bounds) {
                rec["bounds"] = json{{"r", bounds->r},
                                     {"max_class_size", bounds->max_class_size},
                                     {"max_integer_partners", bounds->max_integer_partners},
                                     {"bound_2r", bounds->bound_2r},
                                     {"distinct_values", bounds->distinct_values},
                                     {"lower_bound", p.rational(bounds->lower_bound)},
                                     {"partners_within_bound", bounds->partners_within_bound},
                                     {"distinct_above_lower", bounds->distinct_above_lower}};
            }
            if (!pivots.empty()) {
                json parr = json::array();
                for (const auto& pv : pivots) {
                    parr.push_back(json{{"m1", pv.m1},
                                        {"condition_partners", pv.condition_partners},
                                        {"largest_equal_group", pv.largest_equal_group},
                                        {"class_size", pv.class_size},
                                        {"non_obvious", pv.has_non_obvious}});
                }
                rec["pivots"] = std::move(parr);
            }
            p.emit(rec);
            break;
        }
        case Format::csv:
            p.out() << "representative,size,value_num,value_den,value_decimal,members\n";
            for (const auto& s : shown) {
                p.out() << s.cls.representative() << ',' << s.cls.members.size() << ',' << p.csv(s.cls.value)
                        << ',' << join(s.cls.members, ";") << '\n';
            }
            break;
    }
    if (bounds && !(bounds->partners_within_bound && bounds->distinct_above_lower)) return kExitMismatch;
    return kExitOk;
}

// ---------------------------------------------------------------- check-pair

struct PairArgs {
    i64 m1 = 0, m2 = 0, n = 1;
};

int cmd_check_pair(const PairArgs& a, Printer& p) {
    const PairVerdict verdict = classify_pair(a.m1, a.m2, a.n);
    const bool necessary = necessary_condition(a.m1, a.m2, a.n);
    const bool integral = integer_difference(a.m1, a.m2, a.n);
    const Rational s1 = dedekind_fast(a.m1, a.n);
    const Rational s2 = dedekind_fast(a.m2, a.n);
    const std::string relation(to_string(verdict.relation));
    switch (p.format()) {
        case Format::text:
            p.out() << "S(" << a.m1 << "," << a.n << ") = " << p.text(s1) << '\n'
                    << "S(" << a.m2 << "," << a.n << ") = " << p.text(s2) << '\n'
                    << "relation: " << relation << '\n'
                    << "necessary condition: " << (necessary ? "true" : "false") << '\n'
                    << "integer difference: " << (integral ? "true" : "false") << '\n';
            break;
        case Format::json:
            p.emit(json{{"command", "check-pair"}, {"m1", a.m1}, {"m2", a.m2}, {"n", a.n},
                        {"S1", p.rational(s1)}, {"S2", p.rational(s2)}, {"relation", relation},
                        {"necessary_condition", necessary}, {"integer_difference", integral}});
            break;
        case Format::csv:
            p.out() << "m1,m2,n,relation,necessary_condition,integer_difference\n"
                    << a.m1 << ',' << a.m2 << ',' << a.n << ',' << relation << ',' << necessary << ','
                    << integral << '\n';
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
    i64 d = 1, n = 1;
    i64 l = 0, k = 0, r = 0, q = 0;
    i64 p = 0;
    i64 t = 0;
    std::vector<i64> primes;
    i64 shift = 0;
    int eps = 1;
};

int emit_members(Printer& p, const std::string& kind, json params, i64 modulus, const Rational& value,
                 const std::vector<i64>& members, const Verification& v, json extra = json::object()) {
    switch (p.format()) {
        case Format::text:
            p.out() << kind << ' ';
            for (auto it = params.begin(); it != params.end(); ++it) p.out() << it.key() << '=' << it.value().dump() << ' ';
            p.out() << "\nmodulus: " << modulus << "\nvalue: " << p.text(value) << "\nmembers (" << members.size()
                    << "): " << join(members, ", ") << '\n';
            for (auto it = extra.begin(); it != extra.end(); ++it) {
                p.out() << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << '\n';
            }
            p.out() << (v.all_match ? "verified" : "MISMATCH: " + join(v.mismatches, ", ")) << '\n';
            break;
        case Format::json: {
            json rec{{"command", "family"}, {"kind", kind}, {"parameters", std::move(params)},
                     {"modulus", modulus}, {"value", p.rational(value)}, {"members", members}};
            for (auto it = extra.begin(); it != extra.end(); ++it) rec[it.key()] = it.value();
            rec["verified"] = v.all_match;
            rec["mismatches"] = v.mismatches;
            p.emit(rec);
            break;
        }
        case Format::csv:
            p.out() << "member,modulus,value_num,value_den,value_decimal,verified\n";
            for (i64 m : members) {
                const bool ok = std::find(v.mismatches.begin(), v.mismatches.end(), m) == v.mismatches.end();
                p.out() << m << ',' << modulus << ',' << p.csv(value) << ',' << ok << '\n';
            }
            break;
    }
    return v.all_match ? kExitOk : kExitMismatch;
}

int cmd_family_theorem1(const FamilyArgs& a, Printer& p) {
    const PowerFamily f = theorem1_family(a.d, a.n, a.eps);
    return emit_members(p, "theorem1", json{{"d", a.d}, {"n", a.n}, {"eps", a.eps}}, f.modulus,
                        f.predicted_value, f.members, verify(f));
}

int cmd_family_corollary1(const FamilyArgs& a, Printer& p) {
    const PowerFamily f = corollary1_family(a.l, a.k, a.r, a.q, a.eps);
    return emit_members(p, "corollary1",
                        json{{"l", a.l}, {"k", a.k}, {"r", a.r}, {"q", a.q}, {"eps", a.eps}}, f.modulus,
                        f.predicted_value, f.members, verify(f), json{{"d", f.d}, {"n", f.n}});
}

int cmd_family_corollary2(const FamilyArgs& a, const Globals& g, Printer& p) {
    if (a.k > 62 || a.r > 62) throw Error(ErrorKind::RangeViolated, "exponent too large");
    const EqualityClass cls = corollary2_classify(a.p, static_cast<int>(a.k), static_cast<int>(a.r), a.eps);
    Verification v;
    for (i64 m : cls.members) {
        if (dedekind_fast(m, cls.modulus) != cls.value) v.mismatches.push_back(m);
    }
    json extra = json::object();
    if (cls.modulus <= 1'000'000) {
        // The full class of eps + p^r must coincide with the constructed set.
        const auto classes = equality_classes(cls.modulus, ClassOptions{g.threads});
        const i64 anchor = cls.members.front();
        const auto it = std::find_if(classes.begin(), classes.end(), [&](const EqualityClass& c) {
            return std::binary_search(c.members.begin(), c.members.end(), anchor);
        });
        const bool exact = it != classes.end() && it->members == cls.members;
        extra["class_exact"] = exact;
        if (!exact) v.mismatches.push_back(anchor);
    }
    v.all_match = v.mismatches.empty();
    return emit_members(p, "corollary2", json{{"p", a.p}, {"k", a.k}, {"r", a.r}, {"eps", a.eps}}, cls.modulus,
                        cls.value, cls.members, v, std::move(extra));
}

int cmd_family_quad(const FamilyArgs& a, Printer& p) {
    QuadraticFamily f = corollary4_family(a.t, a.primes);
    if (a.shift != 0) f = shift_t(f, a.shift);
    json extra{{"t", f.t}, {"q", f.q}, {"k", f.k}, {"n", f.n}, {"nt", f.nt}, {"solutions", f.solutions}};
    if (!f.nt_square_free) extra["warning"] = "nt is not square-free";
    json params{{"t", a.t}, {"primes", a.primes}};
    if (a.shift != 0) params["shift"] = a.shift;
    return emit_members(p, "quad", std::move(params), f.nt, f.predicted_value, f.arguments, verify(f),
                        std::move(extra));
}

// ---------------------------------------------------------------- table1

struct TableArgs {
    std::vector<i64> ts;
    std::size_t count = 6;
};

int cmd_table1(const TableArgs& a, Printer& p) {
    std::vector<i64> ts = a.ts;
    if (ts.empty()) ts.assign(kTable1Rows.begin(), kTable1Rows.end());
    for (i64 t : ts) {
        if (t < 1 || !is_square_free(t)) {
            throw Error(ErrorKind::HypothesisViolated, "t must be square-free for the table, got " + std::to_string(t));
        }
    }
    struct Row {
        i64 t;
        Decomposition dec;
        std::vector<i64> primes;
    };
    std::vector<Row> rows;
    for (i64 t : ts) rows.push_back({t, decompose(t), table1_sieve(t, a.count, true)});

    switch (p.format()) {
        case Format::text:
            p.out() << "   t |    q |  k | p\n";
            for (const auto& r : rows) {
                std::ostringstream line;
                line.width(4);
                line << r.t << " | ";
                line.width(4);
                line << r.dec.q << " | ";
                line.width(2);
                line << r.dec.k << " | " << join(r.primes, ",");
                p.out() << line.str() << '\n';
            }
            break;
        case Format::json: {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(json{{"t", r.t}, {"q", r.dec.q}, {"k", r.dec.k}, {"primes", r.primes}});
            p.emit(json{{"command", "table1"}, {"rows", std::move(arr)}});
            break;
        }
        case Format::csv:
            p.out() << "t,q,k,primes\n";
            for (const auto& r : rows) p.out() << r.t << ',' << r.dec.q << ',' << r.dec.k << ',' << join(r.primes, ";") << '\n';
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify-paper

struct VerifyArgs {
    bool list = false;
    std::string only;
};

int cmd_verify(const VerifyArgs& a, Printer& p) {
    std::vector<const ReplayItem*> selected;
    for (const auto& item : replay_items()) {
        if (a.only.empty() || item.group == a.only || item.id == a.only) selected.push_back(&item);
    }
    if (selected.empty()) throw Error(ErrorKind::OutOfRange, "no replay items match '" + a.only + "'");

    if (a.list) {
        switch (p.format()) {
            case Format::text:
                for (const auto* item : selected) p.out() << item->id << "  " << item->description << '\n';
                break;
            case Format::json: {
                json arr = json::array();
                for (const auto* item : selected) {
                    arr.push_back(json{{"id", item->id}, {"group", item->group}, {"description", item->description}});
                }
                p.emit(json{{"command", "verify-paper"}, {"items", std::move(arr)}});
                break;
            }
            case Format::csv:
                p.out() << "id,group\n";
                for (const auto* item : selected) p.out() << item->id << ',' << item->group << '\n';
                break;
        }
        return kExitOk;
    }

    std::size_t failed = 0;
    json arr = json::array();
    if (p.format() == Format::csv) p.out() << "id,group,pass\n";
    for (const auto* item : selected) {
        ReplayResult res;
        try {
            res = item->run();
        } catch (const std::exception& e) {
            res = {false, std::string("exception: ") + e.what()};
        }
        if (!res.pass) ++failed;
        switch (p.format()) {
            case Format::text:
                p.out() << (res.pass ? "[PASS] " : "[FAIL] ") << item->id << ": " << item->description;
                if (!res.pass) p.out() << "\n       " << res.detail;
                p.out() << '\n';
                break;
            case Format::json:
                arr.push_back(json{{"id", item->id}, {"group", item->group}, {"pass", res.pass}, {"detail", res.detail}});
                break;
            case Format::csv:
                p.out() << item->id << ',' << item->group << ',' << res.pass << '\n';
                break;
        }
    }
    if (p.format() == Format::text) {
        p.out() << (selected.size() - failed) << "/" << selected.size() << " items passed\n";
    } else if (p.format() == Format::json) {
        p.emit(json{{"command", "verify-paper"},
                    {"items", std::move(arr)},
                    {"passed", selected.size() - failed},
                    {"failed", failed}});
    }
    return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Dedekind sums: evaluation, equality classes and families of equal sums", "dedekind"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--digits", g.digits, "Decimal digits (round half to even)")->check(CLI::Range(0, 1000));
    app.add_option("--threads", g.threads, "Worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);

    SumArgs sum;
    auto* sum_cmd = app.add_subcommand("sum", "Evaluate S(m,n) = 12 s(m,n)");
    sum_cmd->add_option("m", sum.m)->required();
    sum_cmd->add_option("n", sum.n)->required();
    sum_cmd->add_flag("--oracle", sum.oracle, "Use the O(n) definitional sum");
    sum_cmd->add_flag("--little", sum.little, "Also print s(m,n) = S(m,n)/12");

    ClassesArgs classes;
    auto* classes_cmd = app.add_subcommand("classes", "Partition the units mod n into equality classes");
    classes_cmd->add_option("n", classes.n)->required();
    classes_cmd->add_option("--filter", classes.filter, "Keep members congruent to A mod B, written AmodB");
    classes_cmd->add_flag("--non-singleton", classes.non_singleton, "Only classes with two or more members");
    classes_cmd->add_flag("--non-obvious", classes.non_obvious, "Only classes containing non-obvious equalities");
    classes_cmd->add_flag("--bounds", classes.bounds, "Append the square-free bounds report");
    classes_cmd->add_option("--pivot", classes.pivot, "Pivot statistics for m1 in a..b");
    classes_cmd->add_option("--max-n", classes.max_n, "Scale bound on n")->capture_default_str();

    PairArgs pair;
    auto* pair_cmd = app.add_subcommand("check-pair", "Classify the pair S(m1,n), S(m2,n)");
    pair_cmd->add_option("m1", pair.m1)->required();
    pair_cmd->add_option("m2", pair.m2)->required();
    pair_cmd->add_option("n", pair.n)->required();

    FamilyArgs fam;
    auto* family_cmd = app.add_subcommand("family", "Construct and verify a family of equal sums");
    family_cmd->require_subcommand(1);
    auto add_eps = [&](CLI::App* sub) {
        sub->add_option("--eps,-e", fam.eps, "Sign epsilon, 1 or -1")->capture_default_str();
    };
    auto* t1_cmd = family_cmd->add_subcommand("theorem1", "S(eps + dnm, dn^2)");
    t1_cmd->add_option("-d", fam.d)->required();
    t1_cmd->add_option("-n", fam.n)->required();
    add_eps(t1_cmd);
    auto* c1_cmd = family_cmd->add_subcommand("corollary1", "S(eps + l^r q m, l^k)");
    c1_cmd->add_option("-l", fam.l)->required();
    c1_cmd->add_option("-k", fam.k)->required();
    c1_cmd->add_option("-r", fam.r)->required();
    c1_cmd->add_option("-q", fam.q)->required();
    add_eps(c1_cmd);
    auto* c2_cmd = family_cmd->add_subcommand("corollary2", "Equality class of eps + p^r m' mod p^k");
    c2_cmd->add_option("-p", fam.p)->required();
    c2_cmd->add_option("-k", fam.k)->required();
    c2_cmd->add_option("-r", fam.r)->required();
    add_eps(c2_cmd);
    auto* quad_cmd = family_cmd->add_subcommand("quad", "S(1 + mt, nt) from roots of m^2 - tm - 1 mod n");
    quad_cmd->add_option("-t", fam.t)->required();
    quad_cmd->add_option("-p,--primes", fam.primes, "Comma-separated odd primes")->delimiter(',');
    quad_cmd->add_option("--shift", fam.shift, "Replace t by t + shift*n");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table1", "Eligible primes for small square-free t");
    table_cmd->add_option("--t", table.ts, "Rows to print (default 1,2,3,5,6,7,10)")->delimiter(',');
    table_cmd->add_option("--count", table.count, "Primes per row")->capture_default_str();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Replay every published numeric example");
    verify_cmd->add_flag("--list", verify_args.list, "List item identifiers without running");
    verify_cmd->add_option("--only", verify_args.only, "Run a single group or item id");

    std::vector<const char*> argv{"dedekind"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    Printer printer(g, out);
    try {
        if (*sum_cmd) return cmd_sum(sum, printer);
        if (*classes_cmd) return cmd_classes(classes, g, printer);
        if (*pair_cmd) return cmd_check_pair(pair, printer);
        if (*t1_cmd) return cmd_family_theorem1(fam, printer);
        if (*c1_cmd) return cmd_family_corollary1(fam, printer);
        if (*c2_cmd) return cmd_family_corollary2(fam, g, printer);
        if (*quad_cmd) return cmd_family_quad(fam, printer);
        if (*table_cmd) return cmd_table1(table, printer);
        if (*verify_cmd) return cmd_verify(verify_args, printer);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace dedekind::cli
