#include "dedekind/rational.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace dedekind {

namespace {

mpz_class from_i64(std::int64_t v) {
    // mpz_class has no int64 constructor on every platform; go through a string-free path.
    mpz_class z;
    const bool negative = v < 0;
    auto magnitude = negative ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
    if (negative) z = -z;
    return z;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(from_i64(num), from_i64(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational Rational::parse(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(text, 10));
        return Rational(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("Rational::to_decimal: negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    const mpz_class num = abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(2 * r, den);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    const bool negative = sign() < 0 && q != 0;
    return negative ? "-" + body : body;
}

std::size_t Rational::hash() const {
    const auto h1 = std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(value_.get_num_mpz_t()->_mp_d),
                         sizeof(mp_limb_t) * mpz_size(value_.get_num_mpz_t())));
    const auto h2 = std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(value_.get_den_mpz_t()->_mp_d),
                         sizeof(mp_limb_t) * mpz_size(value_.get_den_mpz_t())));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2)) ^ static_cast<std::size_t>(sign() + 1);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dedekind
