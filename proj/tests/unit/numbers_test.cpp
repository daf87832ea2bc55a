#include <gtest/gtest.h>

#include <random>

#include "ca.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ca;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }
Integer big(const char* digits) { return Integer(digits); }

Polynomial poly_q(std::initializer_list<long long> cs) {
    std::vector<Value> v;
    for (auto c : cs) v.push_back(q(c));
    return Polynomial(TypeTag::rational(), v);
}

Matrix mat_q(std::size_t n, std::initializer_list<long long> es) {
    std::vector<Value> v;
    for (auto e : es) v.push_back(q(e));
    return Matrix(TypeTag::rational(), n, v);
}

} // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(q(2, 4).to_string(), "1/2");
    EXPECT_EQ(q(3, -6).to_string(), "-1/2");
    EXPECT_EQ(q(0, -5).to_string(), "0");
    EXPECT_EQ(q(0, -5).den(), 1);
    EXPECT_EQ(q(-8, -4).to_string(), "2");
    EXPECT_THROW(q(1, 0), NotInvertible);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
    EXPECT_EQ(q(1, 2) - q(1, 2), q(0));
    EXPECT_EQ(q(2, 3) * q(3, 4), q(1, 2));
    EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
    EXPECT_EQ(q(-3, 7).inverse(), q(-7, 3));
    EXPECT_THROW(q(0).inverse(), NotInvertible);
}

TEST(Rational, ArbitraryPrecision) {
    Rational a(big("123456789012345678901234567890"), big("987654321098765432109876543210"));
    // gcd is 9000000000900000000090 -> 13717421/109739369
    EXPECT_EQ(a, q(13717421, 109739369));
    Rational huge(big("340282366920938463463374607431768211456"));
    EXPECT_EQ((huge * huge / huge).to_string(), "340282366920938463463374607431768211456");
}

TEST(Rational, CanonicalAfterEveryOperation) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    auto canonical = [](const Rational& r) {
        return r.den() > 0 && boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1;
    };
    for (int n = 0; n < 2000; ++n) {
        int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0 || e == 0) continue;
        Rational x = q(a, b), y = q(c, e);
        EXPECT_TRUE(canonical(x + y));
        EXPECT_TRUE(canonical(x - y));
        EXPECT_TRUE(canonical(x * y));
        if (!y.is_zero()) {
            EXPECT_TRUE(canonical(x / y));
        }
        // cross-multiplication oracle
        Rational s = x + y;
        EXPECT_EQ(s.num() * b * e, (Integer(a) * e + Integer(c) * b) * s.den());
    }
}

TEST(Complex, Basics) {
    ComplexQ i = ComplexQ::i();
    EXPECT_EQ(i * i, ComplexQ(q(-1)));
    EXPECT_EQ(ComplexQ(q(0), q(2)).to_string(), "2*i");
    EXPECT_EQ(ComplexQ(q(1), q(-1)).to_string(), "1 - i");
    EXPECT_EQ(ComplexQ(q(1, 2), q(3, 4)).to_string(), "1/2 + 3/4*i");
    EXPECT_EQ(ComplexQ(q(3), q(4)).norm(), q(25));
    EXPECT_EQ(ComplexQ(q(1), q(1)).inverse(), ComplexQ(q(1, 2), q(-1, 2)));
    EXPECT_THROW(ComplexQ().inverse(), NotInvertible);
}

TEST(Quaternion, HamiltonRelations) {
    Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    Quaternion minus_one = Quaternion::scalar(q(-1));
    EXPECT_EQ(i * i, minus_one);
    EXPECT_EQ(j * j, minus_one);
    EXPECT_EQ(k * k, minus_one);
    EXPECT_EQ(i * j * k, minus_one);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, Quaternion(0, 0, 0, -1));
    EXPECT_EQ(Quaternion(1, 1, 1, 1).to_string(), "1 + i + j + k");
    EXPECT_EQ(Quaternion(0, 0, -1, q(1, 2)).to_string(), "-j + 1/2*k");
}

TEST(Quaternion, BasisTable) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto [sign, index] = ca::testing::hamilton[a][b];
            EXPECT_EQ(ca::testing::basis(a) * ca::testing::basis(b), ca::testing::basis(index, sign)) << a << " " << b;
        }
    std::mt19937_64 rng(12);
    for (int n = 0; n < 200; ++n) {
        auto a = random_value(TypeTag::quaternion(), rng).as<Quaternion>();
        auto b = random_value(TypeTag::quaternion(), rng).as<Quaternion>();
        EXPECT_EQ(a * b, ca::testing::table_product(a, b));
        EXPECT_EQ(a.norm(), ca::testing::sum_of_squares(a));
    }
}

TEST(Quaternion, NormConjInverse) {
    Quaternion a(1, 2, 3, 4);
    EXPECT_EQ(a.norm(), q(30));
    EXPECT_EQ(a.conj(), Quaternion(1, -2, -3, -4));
    EXPECT_EQ(a * a.inverse(), Quaternion::scalar(q(1)));
    EXPECT_EQ(a.inverse(), Quaternion(q(1, 30), q(-1, 15), q(-1, 10), q(-2, 15)));
    EXPECT_THROW(Quaternion().inverse(), NotInvertible);
}

TEST(Quaternion, ConjReversesProducts) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 300; ++n) {
        auto a = random_value(TypeTag::quaternion(), rng).as<Quaternion>();
        auto b = random_value(TypeTag::quaternion(), rng).as<Quaternion>();
        EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
}

TEST(Polynomial, ArithmeticAndRendering) {
    Value p = poly_q({-1, 0, 1});
    EXPECT_EQ(p.to_string(), "-1 + x^2");
    EXPECT_EQ(Value(poly_q({1, 2, 1})).to_string(), "1 + 2*x + x^2");
    EXPECT_EQ(Value(poly_q({0, 0, 0})).to_string(), "0");
    Value prod = mul(poly_q({1, 1}), poly_q({-1, 1}));
    EXPECT_EQ(prod, p);
    EXPECT_EQ(sub(p, p), Value(Polynomial(TypeTag::rational())));
    EXPECT_EQ(poly_q({3, 0, 0}).degree(), 0);
    EXPECT_EQ(Polynomial(TypeTag::rational()).degree(), -1);
}

TEST(Polynomial, Evaluation) {
    EXPECT_EQ(poly_eval(poly_q({-1, 0, 1}), q(3)), Value(q(8)));
    EXPECT_EQ(poly_eval(Polynomial(TypeTag::rational()), q(17)), Value(q(0)));
    // factored and expanded forms agree
    Value factored = mul(poly_q({1, 1}), poly_q({-1, 1}));
    EXPECT_EQ(poly_eval(factored.as<Polynomial>(), q(5)), Value(q(24)));
    EXPECT_EQ(mul(poly_eval(poly_q({1, 1}), q(5)), poly_eval(poly_q({-1, 1}), q(5))), Value(q(24)));
    EXPECT_THROW(poly_eval(poly_q({1}), ComplexQ::i()), TypeError);
}

TEST(Polynomial, DegreeIsAdditive) {
    std::mt19937_64 rng(3);
    TypeTag t = TypeTag::polynomial(TypeTag::rational());
    for (int n = 0; n < 300; ++n) {
        Value a = random_value(t, rng), b = random_value(t, rng);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(mul(a, b).as<Polynomial>().degree(), a.as<Polynomial>().degree() + b.as<Polynomial>().degree());
    }
}

TEST(Polynomial, InversionOnlyForConstants) {
    EXPECT_EQ(inversion(poly_q({4})), Value(Polynomial(TypeTag::rational(), {Value(q(1, 4))})));
    EXPECT_THROW(inversion(poly_q({1, 1})), NotInvertible);
}

TEST(Matrix, ProductsAndInverse) {
    Matrix a = mat_q(2, {1, 2, 3, 4});
    EXPECT_EQ(Value(a).to_string(), "[[1,2],[3,4]]");
    EXPECT_EQ(det(a), Value(q(-2)));
    EXPECT_EQ(mul(a, inversion(a)), Value(Matrix::identity(TypeTag::rational(), 2)));
    EXPECT_EQ(inversion(a), Value(Matrix(TypeTag::rational(), 2, {q(-2), q(1), q(3, 2), q(-1, 2)})));
    EXPECT_THROW(inversion(mat_q(2, {1, 2, 2, 4})), NotInvertible);
    EXPECT_EQ(conj(a), Value(mat_q(2, {1, 3, 2, 4})));
    EXPECT_EQ(norm(a), Value(q(-2)));
}

TEST(Matrix, DeterminantIsMultiplicative) {
    std::mt19937_64 rng(5);
    TypeTag t = TypeTag::matrix(TypeTag::rational(), 3);
    for (int n = 0; n < 100; ++n) {
        Value a = random_value(t, rng), b = random_value(t, rng);
        EXPECT_EQ(norm(mul(a, b)), mul(norm(a), norm(b)));
    }
}

TEST(Matrix, IntegerEntries) {
    Matrix m(TypeTag::integer(), 2, {Integer(2), Integer(1), Integer(1), Integer(1)});
    EXPECT_EQ(det(m), Value(Integer(1)));
    EXPECT_THROW(inversion(m), NotInvertible);
}

TEST(Coercion, Lattice) {
    EXPECT_TRUE(coercible(TypeTag::integer(), TypeTag::rational()));
    EXPECT_TRUE(coercible(TypeTag::integer(), TypeTag::complex()));
    EXPECT_TRUE(coercible(TypeTag::rational(), TypeTag::quaternion()));
    EXPECT_FALSE(coercible(TypeTag::complex(), TypeTag::quaternion()));
    EXPECT_FALSE(coercible(TypeTag::rational(), TypeTag::integer()));
    EXPECT_TRUE(coercible(TypeTag::rational(), TypeTag::polynomial(TypeTag::rational())));
    EXPECT_EQ(common_tag(TypeTag::integer(), TypeTag::rational()), TypeTag::rational());
    EXPECT_EQ(common_tag(TypeTag::integer(), TypeTag::matrix(TypeTag::rational(), 2)),
              TypeTag::matrix(TypeTag::rational(), 2));
    EXPECT_FALSE(common_tag(TypeTag::complex(), TypeTag::quaternion()).has_value());
    EXPECT_EQ(coerce(Integer(3), TypeTag::complex()), Value(ComplexQ(q(3))));
    EXPECT_EQ(coerce(q(1, 2), TypeTag::matrix(TypeTag::rational(), 2)),
              Value(Matrix(TypeTag::rational(), 2, {q(1, 2), q(0), q(0), q(1, 2)})));
    EXPECT_THROW(TypeTag::polynomial(TypeTag::quaternion()), TypeError);
    EXPECT_THROW(TypeTag::matrix(TypeTag::rational(), 0), TypeError);
}

TEST(Values, IntegerInversion) {
    EXPECT_EQ(inversion(Integer(-1)), Value(Integer(-1)));
    EXPECT_THROW(inversion(Integer(2)), NotInvertible);
    EXPECT_THROW(divide(Integer(1), Integer(0)), NotInvertible);
    EXPECT_EQ(divide(Integer(6), Integer(1)), Value(Integer(6)));
}
