#include "bandgrowth/scalar.hpp"

namespace bandgrowth {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((u128(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    return powmod(a, p - 2, p);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient witness set for all n < 2^64 (Sorenson & Webster).
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.rat_ = BigRational(std::move(num), std::move(den)); // reduces gcd
    return s;
}

Scalar Scalar::residue(std::uint64_t value, const FieldSpec& field) {
    if (field.is_rational())
        throw ValidationError("residue scalar requires a prime field");
    Scalar s;
    s.field_ = field;
    s.res_ = value % field.modulus();
    return s;
}

Scalar Scalar::zero(const FieldSpec& field) {
    return field.is_rational() ? rational(0) : residue(0, field);
}

Scalar Scalar::one(const FieldSpec& field) {
    return field.is_rational() ? rational(1) : residue(1, field);
}

Scalar Scalar::fraction(const FieldSpec& field, std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (field.is_rational()) return rational(num, den);
    const std::uint64_t p = field.modulus();
    auto embed = [&](std::int64_t v) {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(m);
    };
    const std::uint64_t d = embed(den);
    if (d == 0)
        throw ValidationError("denominator " + std::to_string(den) + " is zero mod " + std::to_string(p));
    return residue(mulmod(embed(num), invmod(d, p), p), field);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ = -rat_;
    else if (res_ != 0)
        s.res_ = field_.modulus() - res_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ += o.rat_;
    else
        s.res_ = (res_ + o.res_) % field_.modulus();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ *= o.rat_;
    else
        s.res_ = mulmod(res_, o.res_, field_.modulus());
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ = 1 / rat_;
    else
        s.res_ = invmod(res_, field_.modulus());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (!field_.is_rational()) return std::to_string(res_);
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

const BigRational& Scalar::rational_value() const {
    if (!field_.is_rational())
        throw FieldMismatchError("rational_value on a prime-field scalar");
    return rat_;
}

} // namespace bandgrowth
