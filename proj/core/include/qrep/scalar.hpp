#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qrep/error.hpp"

namespace qrep {

// Arbitrary-precision rational, always kept in canonical reduced form with a
// positive denominator.
using Rational = mpq_class;

// The coefficient field of a computation: the rationals or a prime field F_p
// with p prime, p <= 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    // Accepts "Q"/"q" and "Fp:<p>"/"f:<p>".
    static Field parse(const std::string& text);

    bool is_rationals() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

// Exact field element. Arithmetic never rounds; mixing fields throws.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long value);
    // Maps a rational into the field; for F_p the denominator must be a unit.
    static Scalar from_rational(const Field& f, const Rational& value);
    // Parses the serialized forms "a/b", "a" (rationals) and "k mod p" or a
    // bare integer (prime fields).
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);  // throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Requires a rationals-field value.
    const Rational& rational() const;
    // Requires a prime-field value; result in [0, p).
    std::uint64_t residue() const;

    // The value as a nonnegative integer; throws unless it is one.
    // Used for path-count bookkeeping.
    std::uint64_t to_uint64() const;

    std::string to_string() const;

private:
    explicit Scalar(const Field& f) : field_(f) {}

    void check_same_field(const Scalar& rhs) const;

    Field field_;
    Rational rat_;
    std::uint64_t res_ = 0;
};

// Deterministic primality test for p <= 2^31 (trial division).
bool is_prime_u32(std::uint32_t p);

}  // namespace qrep
