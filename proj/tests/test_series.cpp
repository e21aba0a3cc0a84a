#include <gtest/gtest.h>

#include "loopspace/series.hpp"
#include "oracles.hpp"

using namespace loopspace;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) {
    return {v.begin(), v.end()};
}

Polynomial x_pow(std::size_t d) { return Polynomial::monomial(1, d); }
const Polynomial one = Polynomial::constant(1);

} // namespace

TEST(Polynomial, ArithmeticAndRendering) {
    Polynomial a{1, 0, 0, 1};
    Polynomial b{1, -1};
    EXPECT_EQ(a * b, (Polynomial{1, -1, 0, 1, -1}));
    EXPECT_EQ(a - a, Polynomial{});
    EXPECT_EQ((Polynomial{1, 0, 0, 1, 1, 0, -1}).str(), "1 + x^3 + x^4 - x^6");
    EXPECT_EQ((Polynomial{0, -2}).str("z"), "-2z");
}

TEST(RationalFunction, NormalizesDenominatorSign) {
    RationalFunction r(Polynomial{-1}, Polynomial{-1, 1});
    EXPECT_EQ(r.numerator(), Polynomial{1});
    EXPECT_EQ(r.denominator(), (Polynomial{1, -1}));
    EXPECT_THROW(RationalFunction(one, Polynomial{2, 1}), DomainError);
    EXPECT_TRUE(RationalFunction(Polynomial{1, 1}, Polynomial{1, 0, -1})
                    .equivalent(RationalFunction(one, Polynomial{1, -1})));
}

TEST(Expand, Examples) {
    EXPECT_EQ(expand(RationalFunction(one, Polynomial{1, -1}), 3).coefficients, ints({1, 1, 1, 1}));
    EXPECT_EQ(expand(RationalFunction(one + x_pow(3), one - x_pow(2)), 5).coefficients, ints({1, 0, 1, 1, 1, 1}));
    EXPECT_EQ(expand(RationalFunction(one + x_pow(9), one - x_pow(2)), 4).coefficients, ints({1, 0, 1, 0, 1}));
    EXPECT_EQ(expand(RationalFunction(one, Polynomial{1, -1}), 0).coefficients, ints({1}));
}

TEST(Expand, MatchesTruncatedProductOracle) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            // (1 + x^a) / (1 - x^b)
            std::vector<long long> num(a + 1, 0);
            num[0] = 1;
            num[a] = 1;
            auto want = oracle::mul_trunc(num, oracle::geometric(b, 20), 20);
            auto got = expand(RationalFunction(one + x_pow(a), one - x_pow(b)), 20);
            for (int i = 0; i <= 20; ++i) EXPECT_EQ(got.coefficient(i), want[i]);
        }
}

TEST(Betti, Examples) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    EXPECT_EQ(betti(w, 4, Method::Oracle), 14);
    EXPECT_EQ(betti(w, 4, Method::Counting), 14);
    EXPECT_EQ(betti(w, 0, Method::Oracle), 1);
    auto s3s3 = make_wedge({3, 3}, FieldTag::Rationals);
    EXPECT_EQ(betti(s3s3, 4, Method::Oracle), 3);
    EXPECT_EQ(betti(s3s3, 4, Method::Counting), 3);
    EXPECT_EQ(betti(s3s3, 2, Method::Counting), 2);
}

TEST(LoopSeries, SingleSpheres) {
    auto s3 = loop_series(make_wedge({3}, FieldTag::GF2), 6, Method::Oracle);
    EXPECT_EQ(s3.coefficients, ints({1, 0, 1, 1, 1, 1, 1}));
    EXPECT_EQ(s3.provenance, Provenance::EngineOracle);
    auto s4 = loop_series(make_wedge({4}, FieldTag::Rationals), 7, Method::Counting);
    EXPECT_EQ(s4.coefficients, ints({1, 0, 0, 1, 1, 0, 0, 0}));
    EXPECT_EQ(s4.provenance, Provenance::EngineCounting);
}

TEST(LoopSeries, EqualsOnePlusOnePlusZTimesKernelSeries) {
    auto w = make_wedge({2, 3, 5}, FieldTag::Rationals);
    auto s = loop_series(w, 10, Method::Oracle);
    EXPECT_EQ(s.coefficient(0), 1);
    for (int n = 1; n <= 10; ++n) {
        BigInt k = kernel_cokernel_dims(w, n).ker_dim;
        BigInt k_prev = n > 1 ? BigInt(kernel_cokernel_dims(w, n - 1).ker_dim) : BigInt(0);
        EXPECT_EQ(s.coefficient(n), k + k_prev);
    }
}

TEST(LoopSeries, OddSpheresFieldIndependent) {
    for (const auto& dims : std::vector<std::vector<int>>{{3}, {3, 5}, {3, 3, 5}, {5, 5}}) {
        auto q = loop_series(make_wedge(dims, FieldTag::Rationals), 14, Method::Oracle);
        auto f2 = loop_series(make_wedge(dims, FieldTag::GF2), 14, Method::Oracle);
        EXPECT_TRUE(q.same_coefficients(f2));
    }
}

TEST(LoopSeries, BudgetExceeded) {
    EXPECT_THROW(loop_series(make_wedge({2, 2, 2}, FieldTag::GF2), 20, Method::Counting, 10000), BudgetExceeded);
}

TEST(SphereFreeLoopSeries, RationalBranches) {
    auto k1 = sphere_free_loop_series(4, 1, FieldTag::Rationals);
    EXPECT_EQ(k1.denominator(), one - x_pow(6));
    EXPECT_EQ(k1.numerator(), one - x_pow(6) + x_pow(4) + x_pow(3));

    auto k2 = sphere_free_loop_series(4, 2, FieldTag::Rationals);
    EXPECT_EQ(k2.numerator(), one + x_pow(9));
    EXPECT_EQ(k2.denominator(), one - x_pow(2));
}

TEST(SphereFreeLoopSeries, ModTwo) {
    auto r = sphere_free_loop_series(3, 1, FieldTag::GF2);
    EXPECT_EQ(r.numerator(), one + x_pow(3));
    EXPECT_EQ(r.denominator(), one - x_pow(2));
}

TEST(SphereFreeLoopSeries, UnsupportedCombinations) {
    EXPECT_THROW(sphere_free_loop_series(4, 5, FieldTag::Rationals), Unsupported);
    EXPECT_THROW(sphere_free_loop_series(4, 4, FieldTag::Rationals), Unsupported);
    EXPECT_THROW(sphere_free_loop_series(4, 0, FieldTag::Rationals), Unsupported);
    EXPECT_THROW(sphere_free_loop_series(5, 1, FieldTag::Rationals), Unsupported);
    EXPECT_THROW(sphere_free_loop_series(4, 2, FieldTag::GF2), Unsupported);
}

TEST(RoosParhizgar, Values) {
    EXPECT_EQ(roos_parhizgar(1), 2);
    EXPECT_EQ(roos_parhizgar(2), 3);
    EXPECT_EQ(roos_parhizgar(3), 4);
    EXPECT_THROW(roos_parhizgar(0), DomainError);
    auto w = make_wedge({3, 3}, FieldTag::Rationals);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(betti(w, 2 * n, Method::Counting), roos_parhizgar(n));
}
