#pragma once

/*
 * Exact scalars over the rationals Q and prime fields GF(p).
 *
 * Rationals are GMP fractions kept in lowest terms with positive
 * denominator. Prime-field values are residues in [0, p) with p < 2^31, so
 * the product of two residues fits in 64 bits.
 *
 * Text syntax (shared with the document format):
 *   field      "Q" | "GF(p)"
 *   Q scalar   [+-]digits | [+-]digits/digits
 *   GF scalar  [+-]digits            (reduced mod p)
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "msc/error.hpp"

namespace msc {

class FieldDescriptor {
public:
    enum class Kind : std::uint8_t { Rationals, PrimeField };

    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);

    // Defaults to Q.
    constexpr FieldDescriptor() = default;

    static FieldDescriptor rationals() { return FieldDescriptor{}; }
    // Throws InvalidArgument unless p is a prime below 2^31.
    static FieldDescriptor prime(std::uint64_t p);
    static FieldDescriptor parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    // 0 for Q.
    std::uint32_t modulus() const noexcept { return modulus_; }
    // 0 for Q, p for GF(p).
    std::uint32_t characteristic() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    constexpr FieldDescriptor(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::Rationals;
    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

class Scalar {
public:
    // Zero of Q.
    Scalar();
    // Zero of the given field.
    explicit Scalar(FieldDescriptor field);
    // Image of an integer in the field.
    Scalar(FieldDescriptor field, std::int64_t value);
    // Rational number; for GF(p) the denominator must be a unit mod p.
    Scalar(FieldDescriptor field, const mpq_class& value);

    static Scalar zero(FieldDescriptor field) { return Scalar(field); }
    static Scalar one(FieldDescriptor field) { return Scalar(field, 1); }
    static Scalar parse(FieldDescriptor field, std::string_view token);

    const FieldDescriptor& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Precondition: field().is_rational().
    const mpq_class& rational() const;
    // Precondition: field().is_prime_field().
    std::uint32_t residue() const;

    // Maps a rational to GF(p); DivisionByZero if p divides the denominator.
    Scalar reduce_to(FieldDescriptor target) const;

    Scalar inverse() const;
    Scalar pow(std::uint64_t exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    // Equal iff same field and same canonical value.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    std::string to_string() const;

private:
    void require_same_field(const Scalar& rhs) const;

    FieldDescriptor field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Dispatching form of the four operators.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar scalar_inv(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f);

}  // namespace msc
