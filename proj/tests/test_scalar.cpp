#include <doctest.h>

#include "bandgrowth/rng.hpp"
#include "bandgrowth/scalar.hpp"

using namespace bandgrowth;

TEST_CASE("rational canonical form") {
    const Scalar a = Scalar::rational(2, 4);
    const Scalar b = Scalar::rational(1, 2);
    CHECK(a == b);
    CHECK(a.str() == "1/2");
    CHECK(Scalar::rational(3, -6).str() == "-1/2");
    CHECK(Scalar::rational(0, 7) == Scalar::rational(0));
    CHECK_THROWS_AS(Scalar::rational(1, 0), ValidationError);
}

TEST_CASE("prime field basics") {
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK(Scalar::residue(10, f7) == Scalar::residue(3, f7));
    CHECK((Scalar::residue(3, f7) * Scalar::residue(5, f7)) == Scalar::residue(1, f7));
    CHECK(Scalar::fraction(f7, 1, 3) == Scalar::residue(5, f7)); // 3*5 = 15 = 1
    CHECK(Scalar::fraction(f7, -1, 1) == Scalar::residue(6, f7));
    CHECK_THROWS_AS(Scalar::fraction(f7, 1, 7), ValidationError);
    CHECK_THROWS_AS(FieldSpec::prime(6), ValidationError);
    CHECK(FieldSpec::prime(2).is_char2());
}

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1009));
    CHECK(is_prime_u64(1000000007ULL));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1009 * 1013ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("mixed fields rejected") {
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK_THROWS_AS(Scalar::rational(1) + Scalar::residue(1, f7), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::residue(1, f7) * Scalar::residue(1, FieldSpec::prime(11)),
                    FieldMismatchError);
}

TEST_CASE("field axioms hold on random samples") {
    // addition/multiplication/inverse round-trips, 1000 draws per field
    for (const FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(1009)}) {
        Rng rng(7);
        auto random_in = [&](bool nonzero) {
            Scalar s = field.is_rational()
                           ? Scalar::rational(rng.uniform(-50, 50), rng.uniform(1, 20))
                           : Scalar::residue(rng.next_u64() % 1009, field);
            if (nonzero && s.is_zero()) s = Scalar::one(field);
            return s;
        };
        for (int i = 0; i < 1000; ++i) {
            const Scalar a = random_in(false), b = random_in(false), c = random_in(true);
            CHECK(a + b == b + a);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            CHECK((a * c) / c == a);
            CHECK(c * c.inverse() == Scalar::one(field));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar::zero(field) == a);
            CHECK(a * Scalar::one(field) == a);
        }
    }
}
