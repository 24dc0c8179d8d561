#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "bandgrowth/errors.hpp"

namespace bandgrowth {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The coefficient field: rationals (modulus == 0) or Z/p for prime p.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(); }

    static FieldSpec prime(std::uint64_t p) {
        if (!is_prime_u64(p))
            throw ValidationError("modulus " + std::to_string(p) + " is not prime");
        FieldSpec f;
        f.modulus_ = p;
        return f;
    }

    bool is_rational() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }

    /// char(F) == 2; permitted, but pipeline-level commands warn.
    bool is_char2() const { return modulus_ == 2; }

    bool operator==(const FieldSpec& o) const { return modulus_ == o.modulus_; }
    bool operator!=(const FieldSpec& o) const { return modulus_ != o.modulus_; }

    std::string describe() const {
        return is_rational() ? "rational" : "prime p=" + std::to_string(modulus_);
    }

private:
    std::uint64_t modulus_ = 0; // 0 = rationals
};

/// Exact field element: arbitrary-precision rational in canonical reduced
/// form, or a residue in [0, p). Arithmetic between different fields throws.
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar rational(BigInt num, BigInt den = 1);
    static Scalar residue(std::uint64_t value, const FieldSpec& field);

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);

    /// num/den in the given field; in a prime field the denominator is
    /// inverted mod p (and must be nonzero mod p).
    static Scalar fraction(const FieldSpec& field, std::int64_t num, std::int64_t den);

    FieldSpec field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a" or "a/b" for rationals; the residue digits for prime fields.
    std::string str() const;

    const BigRational& rational_value() const;
    std::uint64_t residue_value() const { return res_; }

private:
    void check_same_field(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("scalar arithmetic across different fields");
    }

    FieldSpec field_;
    BigRational rat_;        // valid when field_.is_rational()
    std::uint64_t res_ = 0;  // valid otherwise
};

} // namespace bandgrowth
