#include <catch2/catch_amalgamated.hpp>

#include "hcmod/cyclotomic.hpp"

using hcmod::Cyclotomic;
using hcmod::Rational;
using hcmod::UnitScalar;

TEST_CASE("roots of unity satisfy their defining relations") {
    Cyclotomic i = Cyclotomic::zeta(4, 1);
    REQUIRE(i * i == -Cyclotomic::one(4));
    REQUIRE(i.pow(4) == Cyclotomic::one(4));
    REQUIRE(i.pow(3) == -i);

    Cyclotomic z8 = Cyclotomic::zeta(8, 1);
    REQUIRE(z8.pow(8) == Cyclotomic::one(8));
    REQUIRE(z8.pow(4) == -Cyclotomic::one(8));
    REQUIRE(z8 * Cyclotomic::zeta(8, 7) == Cyclotomic::one(8));
    // (z + z^-1)^2 = 2 for the primitive eighth root
    Cyclotomic real_part = z8 + Cyclotomic::zeta(8, 7);
    REQUIRE(real_part * real_part == Cyclotomic::from_rational(8, Rational(2)));

    Cyclotomic z6 = Cyclotomic::zeta(6, 1);
    REQUIRE(z6.pow(6) == Cyclotomic::one(6));
    REQUIRE(z6.pow(3) == -Cyclotomic::one(6));
    REQUIRE(z6 * z6 == z6 - Cyclotomic::one(6));

    Cyclotomic z3 = Cyclotomic::zeta(3, 1);
    REQUIRE(Cyclotomic::one(3) + z3 + z3 * z3 == Cyclotomic::zero(3));
}

TEST_CASE("field arithmetic is exact") {
    Cyclotomic a = Cyclotomic::zeta(8, 1) * Rational(1, 2) + Cyclotomic::from_rational(8, Rational(3, 7));
    Cyclotomic b = a;
    for (int rep = 0; rep < 10; ++rep) b = b + a - a;
    REQUIRE(b == a);
    REQUIRE(a - a == Cyclotomic::zero(8));
    REQUIRE((a * Rational(14)).coefficients()[0] == Rational(6));
    REQUIRE((a * Rational(14)).coefficients()[1] == Rational(7));
}

TEST_CASE("negative and large exponents reduce correctly") {
    REQUIRE(Cyclotomic::zeta(4, -1) == Cyclotomic::zeta(4, 3));
    REQUIRE(Cyclotomic::zeta(4, 1001) == Cyclotomic::zeta(4, 1));
    REQUIRE(Cyclotomic::zeta(1, 5) == Cyclotomic::one(1));
    REQUIRE(Cyclotomic::zeta(2, 1) == -Cyclotomic::one(2));
}

TEST_CASE("string forms favor the four unit scalars") {
    REQUIRE(Cyclotomic::one(4).to_string() == "1");
    REQUIRE((-Cyclotomic::one(4)).to_string() == "-1");
    REQUIRE(Cyclotomic::zeta(4, 1).to_string() == "i");
    REQUIRE(Cyclotomic::zeta(4, 3).to_string() == "-i");
    REQUIRE(Cyclotomic::zeta(8, 2).to_string() == "i");
    REQUIRE(Cyclotomic::from_rational(4, Rational(-5, 3)).to_string() == "-5/3");
    REQUIRE(Cyclotomic::zeta(8, 1).to_string() == "zeta8[0,1,0,0]");
}

TEST_CASE("unit scalar classification and parsing") {
    REQUIRE(classify_unit_scalar(Cyclotomic::one(8)) == UnitScalar::one);
    REQUIRE(classify_unit_scalar(-Cyclotomic::one(8)) == UnitScalar::minus_one);
    REQUIRE(classify_unit_scalar(Cyclotomic::zeta(8, 2)) == UnitScalar::i);
    REQUIRE(classify_unit_scalar(Cyclotomic::zeta(8, 6)) == UnitScalar::minus_i);
    REQUIRE(classify_unit_scalar(Cyclotomic::zeta(8, 1)) == UnitScalar::other);
    REQUIRE(classify_unit_scalar(Cyclotomic::zeta(3, 1)) == UnitScalar::other);

    for (UnitScalar s : {UnitScalar::one, UnitScalar::minus_one, UnitScalar::i, UnitScalar::minus_i})
        REQUIRE(hcmod::parse_unit_scalar(hcmod::to_string(s)) == s);
    REQUIRE_THROWS_AS(hcmod::parse_unit_scalar("j"), hcmod::invalid_input);
}

TEST_CASE("mixing different fields is rejected") {
    REQUIRE_THROWS_AS(Cyclotomic::one(4) + Cyclotomic::one(8), hcmod::internal_error);
    REQUIRE_THROWS_AS(Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(2, 1), hcmod::internal_error);
}

TEST_CASE("deterministic ordering separates distinct values") {
    std::vector<Cyclotomic> vals{Cyclotomic::one(4), -Cyclotomic::one(4), Cyclotomic::zeta(4, 1),
                                 Cyclotomic::zeta(4, 3), Cyclotomic::zero(4)};
    std::sort(vals.begin(), vals.end());
    for (size_t i = 1; i < vals.size(); ++i) REQUIRE(vals[i - 1] < vals[i]);
}
