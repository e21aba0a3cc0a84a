#include <gtest/gtest.h>

#include "loopspace/counting.hpp"
#include "loopspace/exactla.hpp"
#include "oracles.hpp"

using namespace loopspace;

TEST(Moebius, Values) {
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(moebius(12), 0);
    EXPECT_EQ(moebius(30), -1);
    EXPECT_EQ(moebius(7), -1);
    EXPECT_THROW(moebius(0), DomainError);
    for (int n = 1; n <= 500; ++n) EXPECT_EQ(moebius(n), oracle::mu_by_factoring(n)) << n;
}

TEST(EulerPhi, Values) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(4), 2);
    EXPECT_EQ(euler_phi(6), 2);
    EXPECT_THROW(euler_phi(-3), DomainError);
    for (int n = 1; n <= 500; ++n) EXPECT_EQ(euler_phi(n), oracle::phi_by_gcd(n)) << n;
}

TEST(Divisors, Sorted) {
    EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(1), std::vector<int>{1});
    EXPECT_EQ(divisors(49), (std::vector<int>{1, 7, 49}));
}

TEST(OrbitCount, Examples) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    EXPECT_EQ(orbit_count_f(w, 4), 9u);
    EXPECT_EQ(orbit_count_f(w, 3), 5u);
    EXPECT_EQ(orbit_count_f(make_wedge({3, 3}, FieldTag::GF2), 4), 3u);
}

TEST(PartitionBreakdown, WorkedExample) {
    auto w = make_wedge({2, 2, 4, 5}, FieldTag::GF2);
    auto parts = partition_breakdown(w, 4);
    ASSERT_EQ(parts.size(), 8u);
    std::map<std::vector<Letter>, std::uint64_t> g;
    std::uint64_t total = 0;
    for (const auto& p : parts) {
        int sum = 0;
        for (int d : p.parts) sum += d;
        EXPECT_EQ(sum, 4);
        EXPECT_GE(p.orbit_count, 1u);
        g[p.generators] = p.orbit_count;
        total += p.orbit_count;
    }
    EXPECT_EQ(g.at({0, 0, 1, 1}), 2u);
    EXPECT_EQ(g.at({3}), 1u);
    EXPECT_EQ(total, orbit_count_f(w, 4));
}

TEST(PartitionBreakdown, SumsToOrbitCount) {
    for (const auto& dims : std::vector<std::vector<int>>{{2, 3, 4}, {3, 3, 5}, {2, 2}}) {
        auto w = make_wedge(dims, FieldTag::GF2);
        for (int n = 1; n <= 10; ++n) {
            std::uint64_t total = 0;
            for (const auto& p : partition_breakdown(w, n)) total += p.orbit_count;
            EXPECT_EQ(total, orbit_count_f(w, n));
            EXPECT_EQ(total, oracle::orbit_representatives(oracle::words(w.generator_degrees(), n)).size());
        }
    }
}

TEST(KernelByOrbits, Examples) {
    EXPECT_EQ(kernel_dims_by_orbits(make_wedge({2, 2, 4, 5}, FieldTag::GF2), 4).ker_dim, 9u);
    EXPECT_EQ(kernel_dims_by_orbits(make_wedge({2}, FieldTag::Rationals), 2).ker_dim, 0u);
    EXPECT_EQ(kernel_dims_by_orbits(make_wedge({3, 3}, FieldTag::Rationals), 4).ker_dim, 3u);
}

TEST(KernelByOrbits, AgreesWithMatrixRoute) {
    for (auto field : {FieldTag::Rationals, FieldTag::GF2})
        for (const auto& dims : std::vector<std::vector<int>>{{2, 3}, {4, 5}, {2, 4, 4}, {3, 2, 5}}) {
            auto w = make_wedge(dims, field);
            for (int n = 1; n <= 10; ++n) {
                auto a = kernel_cokernel_dims(w, n);
                auto b = kernel_dims_by_orbits(w, n);
                EXPECT_EQ(a.per_length, b.per_length) << "degree " << n;
            }
        }
}

TEST(EquidimAm, Examples) {
    for (int m = 1; m <= 10; ++m) EXPECT_EQ(equidim_a_m(1, 3, m, FieldTag::GF2), 1);
    EXPECT_EQ(equidim_a_m(2, 1, 2, FieldTag::GF2), 3);
    EXPECT_EQ(equidim_a_m(1, 1, 2, FieldTag::Rationals), 0);
    EXPECT_EQ(equidim_a_m(2, 2, 2, FieldTag::Rationals), 3);
    EXPECT_THROW(equidim_a_m(0, 1, 1, FieldTag::GF2), DomainError);
}

TEST(EquidimAm, SingleEvenSphereRationalAlternates) {
    for (int m = 1; m <= 12; ++m) EXPECT_EQ(equidim_a_m(1, 3, m, FieldTag::Rationals), m % 2);
}

TEST(EquidimAm, LargeValuesStayExact) {
    // Necklaces of length 60 over 5 letters; the divisions must all be exact.
    BigInt a = equidim_a_m(5, 2, 60, FieldTag::GF2);
    EXPECT_GT(a, BigInt(1) << 100);
    BigInt b = equidim_a_m(5, 1, 60, FieldTag::Rationals);
    EXPECT_LT(b, a);
}

TEST(EquidimAm, AgreesWithOrbitEnumeration) {
    for (auto field : {FieldTag::Rationals, FieldTag::GF2})
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n) {
                auto w = make_wedge(std::vector<int>(k, n + 1), field);
                for (int m = 1; m <= 6; ++m)
                    EXPECT_EQ(equidim_a_m(k, n, m, field), kernel_dims_by_orbits(w, m * n).ker_dim)
                        << "k=" << k << " n=" << n << " m=" << m;
            }
}
