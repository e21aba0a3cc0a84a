#ifndef LOOPSPACE_SERIES_HPP
#define LOOPSPACE_SERIES_HPP

// Betti numbers and Poincare series of the free loop space LW, together with
// the closed rational forms known for single spheres.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "loopspace/algebra.hpp"
#include "loopspace/counting.hpp"
#include "loopspace/exactla.hpp"

namespace loopspace {

/// Dense integer polynomial in one variable, coefficient i multiplies x^i.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(long long c, std::size_t degree) {
        std::vector<BigInt> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial constant(long long c) { return monomial(c, 0); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<BigInt> v = a.coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Ascending powers, e.g. "1 + x^3 - x^6".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            if (i == 0 || mag != 1) s += mag.str();
            if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// numerator / denominator with denominator(0) == 1, so the power series
/// expansion has integer coefficients.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        const BigInt c0 = den_.coefficient(0);
        if (c0 == -1) {
            num_ = -num_;
            den_ = -den_;
        } else if (c0 != 1) {
            throw DomainError("rational function denominator must have constant term +-1");
        }
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    /// Equal as rational functions (cross-multiplication).
    bool equivalent(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str(const std::string& var = "x") const {
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    Polynomial num_;
    Polynomial den_;
};

enum class Provenance { EngineOracle, EngineCounting, ClosedForm };

inline const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::EngineOracle: return "oracle";
    case Provenance::EngineCounting: return "counting";
    case Provenance::ClosedForm: return "closed-form";
    }
    return "";
}

/// Truncated series: coefficients for degrees 0..max_degree.
struct PoincareSeries {
    std::vector<BigInt> coefficients;
    Provenance provenance = Provenance::ClosedForm;

    int max_degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const BigInt& coefficient(int degree) const { return coefficients.at(static_cast<std::size_t>(degree)); }

    /// Compares coefficients only.
    bool same_coefficients(const PoincareSeries& o) const { return coefficients == o.coefficients; }
};

/// Power series expansion through x^terms.
inline PoincareSeries expand(const RationalFunction& rf, int terms) {
    if (terms < 0) throw DomainError("expand: terms must be >= 0");
    const auto& den = rf.denominator();
    PoincareSeries s;
    s.coefficients.resize(static_cast<std::size_t>(terms) + 1);
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
        BigInt c = rf.numerator().coefficient(i);
        for (std::size_t j = 1; j <= i && static_cast<long>(j) <= den.degree(); ++j)
            c -= den.coefficient(j) * s.coefficients[i - j];
        s.coefficients[i] = std::move(c);
    }
    return s;
}

enum class Method { Oracle, Counting };

inline const char* to_string(Method m) { return m == Method::Oracle ? "oracle" : "counting"; }

/// dim ker(1 - tau) in one degree of T(V); zero below degree 1.
inline std::uint64_t kernel_dim(const WedgeSpec& w, int degree, Method method,
                                std::uint64_t budget = default_word_budget) {
    if (degree < 1) return 0;
    return method == Method::Oracle ? kernel_cokernel_dims(w, degree, budget).ker_dim
                                    : kernel_dims_by_orbits(w, degree, budget).ker_dim;
}

/// b_N = [N = 0] + K(N) + K(N-1), where K(N) is the kernel dimension in degree N:
/// the cokernel of 1 - tau contributes in degree N and the kernel, suspended once,
/// in degree N + 1.
inline BigInt betti(const WedgeSpec& w, int degree, Method method,
                    std::uint64_t budget = default_word_budget) {
    if (degree < 0) throw DomainError("degree must be >= 0");
    if (degree == 0) return 1;
    return BigInt(kernel_dim(w, degree, method, budget)) + kernel_dim(w, degree - 1, method, budget);
}

/// Series 1 + (1 + z) sum K(N) z^N from kernel dimensions; kernels[N] for N = 0..max,
/// kernels[0] ignored.
inline PoincareSeries assemble_series(const std::vector<BigInt>& kernels, Provenance provenance) {
    PoincareSeries s;
    s.provenance = provenance;
    s.coefficients.resize(kernels.size());
    for (std::size_t n = 0; n < kernels.size(); ++n) {
        if (n == 0) {
            s.coefficients[0] = 1;
            continue;
        }
        s.coefficients[n] = kernels[n] + (n >= 2 ? kernels[n - 1] : BigInt(0));
    }
    return s;
}

inline PoincareSeries loop_series(const WedgeSpec& w, int max_degree, Method method,
                                  std::uint64_t budget = default_word_budget) {
    if (max_degree < 0) throw DomainError("max_degree must be >= 0");
    std::vector<BigInt> kernels(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 1; n <= max_degree; ++n) kernels[n] = kernel_dim(w, n, method, budget);
    return assemble_series(kernels, method == Method::Oracle ? Provenance::EngineOracle
                                                             : Provenance::EngineCounting);
}

/// Closed Poincare series of the k-fold free loop space of S^n.
///
/// Over Q (n even, 1 <= k < n):
///   k odd:  1 + (x^n + x^{n-k}) / (1 - x^{2n-k-1})
///   k even: (1 + x^{3n-k-1}) / (1 - x^{n-k})
/// Over F_2 only k = 1 is available: (1 + x^n) / (1 - x^{n-1}).
/// The k odd form is returned over the common denominator.
inline RationalFunction sphere_free_loop_series(int n, int k_loops, FieldTag field) {
    if (k_loops < 1 || k_loops >= n)
        throw Unsupported("closed form needs 1 <= k < n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k_loops) + ")");
    if (field == FieldTag::GF2) {
        if (k_loops != 1)
            throw Unsupported("mod 2 closed form is only known for k = 1 (got k=" +
                              std::to_string(k_loops) + ")");
        return {Polynomial::constant(1) + Polynomial::monomial(1, n),
                Polynomial::constant(1) - Polynomial::monomial(1, n - 1)};
    }
    if (n % 2 != 0)
        throw Unsupported("rational closed form needs n even (got n=" + std::to_string(n) + ")");
    const int k = k_loops;
    if (k % 2 != 0) {
        Polynomial den = Polynomial::constant(1) - Polynomial::monomial(1, 2 * n - k - 1);
        Polynomial num = den + Polynomial::monomial(1, n) + Polynomial::monomial(1, n - k);
        return {num, den};
    }
    return {Polynomial::constant(1) + Polynomial::monomial(1, 3 * n - k - 1),
            Polynomial::constant(1) - Polynomial::monomial(1, n - k)};
}

/// (1/n) sum_{i=1}^{n} 2^{gcd(i, n)}.
inline BigInt roos_parhizgar(int n) {
    if (n < 1) throw DomainError("roos_parhizgar: n must be >= 1");
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += boost::multiprecision::pow(BigInt(2), std::gcd(i, n));
    return detail::exact_div(sum, n, "roos_parhizgar");
}

} // namespace loopspace

#endif
