#include "msc/field.hpp"

#include <charconv>
#include <ostream>

namespace msc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Splits an optional leading sign; returns true for '-'.
bool take_sign(std::string_view& s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        bool negative = s.front() == '-';
        s.remove_prefix(1);
        return negative;
    }
    return false;
}

mpz_class parse_integer(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

std::uint32_t mod_residue(const mpz_class& value, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on 64-bit signed values; a != 0, p prime.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    if (p >= kMaxModulus) {
        throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not below 2^31");
    }
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    }
    return FieldDescriptor(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "GF(";
    if (text.size() > prefix.size() + 1 && text.substr(0, prefix.size()) == prefix && text.back() == ')') {
        std::string_view digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (all_digits(digits) && ec == std::errc{} && ptr == digits.data() + digits.size()) {
            return prime(p);
        }
    }
    throw Error(ErrorKind::ParseError, "field descriptor must be \"Q\" or \"GF(p)\", got \"" + std::string(text) + "\"");
}

std::string FieldDescriptor::to_string() const {
    if (is_rational()) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar() : Scalar(FieldDescriptor{}) {}

Scalar::Scalar(FieldDescriptor field) : field_(field) {
    if (field_.is_prime_field()) value_ = std::uint32_t{0};
}

Scalar::Scalar(FieldDescriptor field, std::int64_t value) : field_(field) {
    if (field_.is_rational()) {
        value_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
        std::int64_t p = field_.modulus();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }
}

Scalar::Scalar(FieldDescriptor field, const mpq_class& value) : field_(field) {
    mpq_class canonical = value;
    canonical.canonicalize();
    if (field_.is_rational()) {
        value_ = std::move(canonical);
        return;
    }
    const std::uint32_t p = field_.modulus();
    std::uint32_t den = mod_residue(canonical.get_den(), p);
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "denominator of " + canonical.get_str() + " vanishes in " + field_.to_string());
    }
    std::uint64_t num = mod_residue(canonical.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * mod_inverse(den, p) % p);
}

Scalar Scalar::parse(FieldDescriptor field, std::string_view token) {
    std::string_view rest = token;
    const bool negative = take_sign(rest);
    const auto slash = rest.find('/');
    if (field.is_prime_field()) {
        if (slash != std::string_view::npos) {
            throw Error(ErrorKind::FieldMismatch, "token \"" + std::string(token) + "\" is a fraction; " + field.to_string() + " accepts integers only");
        }
        if (!all_digits(rest)) {
            throw Error(ErrorKind::ParseError, "malformed scalar \"" + std::string(token) + "\"");
        }
        mpz_class v = parse_integer(rest);
        if (negative) v = -v;
        Scalar s(field);
        s.value_ = mod_residue(v, field.modulus());
        return s;
    }
    std::string_view num_text = rest.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : rest.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw Error(ErrorKind::ParseError, "malformed scalar \"" + std::string(token) + "\"");
    }
    mpz_class num = parse_integer(num_text);
    mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(token) + "\"");
    }
    if (negative) num = -num;
    return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw Error(ErrorKind::MixedFields, "rational() on a " + field_.to_string() + " scalar");
    return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw Error(ErrorKind::MixedFields, "residue() on a Q scalar");
    return std::get<std::uint32_t>(value_);
}

Scalar Scalar::reduce_to(FieldDescriptor target) const {
    if (field_ == target) return *this;
    if (!field_.is_rational() || !target.is_prime_field()) {
        throw Error(ErrorKind::MixedFields, "can only reduce Q scalars to a prime field");
    }
    return Scalar(target, rational());
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw Error(ErrorKind::MixedFields, field_.to_string() + " vs " + rhs.field_.to_string());
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar out(field_);
    if (field_.is_rational()) {
        out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    } else {
        out.value_ = mod_inverse(std::get<std::uint32_t>(value_), field_.modulus());
    }
    return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
    Scalar result = one(field_);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Scalar Scalar::operator-() const {
    Scalar out(field_);
    if (field_.is_rational()) {
        out.value_ = mpq_class(-std::get<mpq_class>(value_));
    } else {
        std::uint32_t v = std::get<std::uint32_t>(value_);
        out.value_ = v == 0 ? 0u : field_.modulus() - v;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    } else {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    } else {
        std::uint64_t p = field_.modulus();
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    } else {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
        value_ = static_cast<std::uint32_t>(s % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
        return *this;
    }
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint32_t>(value_));
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) { return os << f.to_string(); }

}  // namespace msc
