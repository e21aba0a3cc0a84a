#ifndef LOOPSPACE_COUNTING_HPP
#define LOOPSPACE_COUNTING_HPP

// Orbit counting and the closed divisor-sum formulas for ker(1 - tau_m).

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "loopspace/algebra.hpp"
#include "loopspace/cyclic.hpp"
#include "loopspace/kernel_report.hpp"

namespace loopspace {

/// Positive divisors of n in increasing order.
inline std::vector<int> divisors(int n) {
    if (n < 1) throw DomainError("divisors: n must be >= 1");
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int moebius(int n) {
    if (n < 1) throw DomainError("moebius: n must be >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Euler's totient as the Moebius transform phi(n) = sum_{e | n} (n/e) mu(e).
inline int euler_phi(int n) {
    if (n < 1) throw DomainError("euler_phi: n must be >= 1");
    int sum = 0;
    for (int e : divisors(n)) sum += (n / e) * moebius(e);
    return sum;
}

/// Number of words of length d over k letters with period exactly d:
/// sum_{e | d} mu(d/e) k^e.
inline BigInt primitive_words(int k, int d) {
    BigInt sum = 0;
    for (int e : divisors(d)) sum += moebius(d / e) * boost::multiprecision::pow(BigInt(k), e);
    return sum;
}

namespace detail {

inline BigInt exact_div(const BigInt& num, int den, const char* what) {
    if (num % den != 0)
        throw NonIntegerResult(std::string(what) + ": " + num.str() + " not divisible by " +
                               std::to_string(den));
    return num / den;
}

} // namespace detail

/// Coefficient a_m of z^{m n} in the kernel series of a wedge of k spheres
/// whose generators all have degree gen_degree.
///
/// Over F_2, and over Q when gen_degree is even, every orbit contributes and
/// a_m = (1/m) sum_{e | m} phi(m/e) k^e. Over Q with gen_degree odd, the
/// signed rotation on length-m words is (-1)^{m-1} tau, so for m even only
/// orbits of even period contribute:
/// a_m = sum_{d | m, d even} (1/d) sum_{e | d} mu(d/e) k^e.
inline BigInt equidim_a_m(int k, int gen_degree, int m, FieldTag field) {
    if (k < 1 || gen_degree < 1 || m < 1)
        throw DomainError("equidim_a_m: k, gen_degree and m must be >= 1");
    const bool even_periods_only = field == FieldTag::Rationals && gen_degree % 2 != 0 && m % 2 == 0;
    if (!even_periods_only) {
        BigInt sum = 0;
        for (int e : divisors(m)) sum += euler_phi(m / e) * boost::multiprecision::pow(BigInt(k), e);
        return detail::exact_div(sum, m, "equidim_a_m");
    }
    BigInt sum = 0;
    for (int d : divisors(m))
        if (d % 2 == 0) sum += detail::exact_div(primitive_words(k, d), d, "equidim_a_m");
    return sum;
}

/// f(N): number of rotation orbits of degree N, ignoring signs.
inline std::uint64_t orbit_count_f(const WedgeSpec& w, int degree,
                                   std::uint64_t budget = default_word_budget) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    check_budget(w, degree, budget);
    std::uint64_t count = 0;
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m)
        for_each_orbit_representative(w, degree, m, [&](const Word&) { ++count; });
    return count;
}

/// A multiset of generators summing to the target degree and how many
/// rotation orbits are built from exactly those letters.
struct PartitionRecord {
    int degree = 0;
    std::vector<Letter> generators; ///< sorted, 0-based
    std::vector<int> parts;         ///< generator degrees, same order
    std::uint64_t orbit_count = 0;
};

/// Orbits of the given degree grouped by their letter multiset. Generators of
/// equal degree stay distinct. Ordered by the sorted generator list.
inline std::vector<PartitionRecord> partition_breakdown(const WedgeSpec& w, int degree,
                                                        std::uint64_t budget = default_word_budget) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    check_budget(w, degree, budget);
    std::map<std::vector<Letter>, std::uint64_t> counts;
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m)
        for_each_orbit_representative(w, degree, m, [&](const Word& rep) {
            std::vector<Letter> key(rep.letters().begin(), rep.letters().end());
            std::sort(key.begin(), key.end());
            ++counts[key];
        });
    std::vector<PartitionRecord> out;
    out.reserve(counts.size());
    for (auto& [gens, n] : counts) {
        PartitionRecord r{degree, gens, {}, n};
        for (Letter g : gens) r.parts.push_back(w.generator_degree(g));
        out.push_back(std::move(r));
    }
    return out;
}

/// Kernel dimensions read off orbits: over F_2 one per orbit, over Q one per
/// orbit whose full-period sign is +1. Cokernel equals kernel.
inline KernelReport kernel_dims_by_orbits(const WedgeSpec& w, int degree,
                                          std::uint64_t budget = default_word_budget) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    check_budget(w, degree, budget);
    KernelReport report{w, degree, 0, 0, {}};
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m) {
        std::uint64_t orbits = 0, ker = 0;
        for_each_orbit_representative(w, degree, m, [&](const Word& rep) {
            ++orbits;
            if (orbit_sign(w, rep) == 1) ++ker;
        });
        if (orbits > 0) report.add(m, ker, ker);
    }
    return report;
}

} // namespace loopspace

#endif
