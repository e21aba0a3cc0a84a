#ifndef LOOPSPACE_ALGEBRA_HPP
#define LOOPSPACE_ALGEBRA_HPP

// The wedge of spheres W, its graded generators e_i in H_*(ΩW) = T(e_1,...,e_k),
// and enumeration of the monomial basis of each graded piece.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopspace/errors.hpp"

namespace loopspace {

using BigInt = boost::multiprecision::cpp_int;

enum class FieldTag { Rationals, GF2 };

inline const char* to_string(FieldTag f) {
    return f == FieldTag::GF2 ? "GF2" : "Q";
}

/// A finite wedge of spheres S^{d_1} v ... v S^{d_k} together with the
/// coefficient field. Generator e_i has degree d_i - 1.
class WedgeSpec {
public:
    WedgeSpec(std::vector<int> sphere_dims, FieldTag field)
        : sphere_dims_(std::move(sphere_dims)), field_(field) {
        if (sphere_dims_.empty()) throw EmptyWedge();
        generator_degrees_.reserve(sphere_dims_.size());
        for (int d : sphere_dims_) {
            if (d < 2) throw NonSimplyConnected(d);
            generator_degrees_.push_back(d - 1);
        }
    }

    const std::vector<int>& sphere_dims() const noexcept { return sphere_dims_; }
    const std::vector<int>& generator_degrees() const noexcept { return generator_degrees_; }
    int generator_degree(std::size_t i) const { return generator_degrees_.at(i); }
    std::size_t size() const noexcept { return sphere_dims_.size(); }
    FieldTag field() const noexcept { return field_; }

    int min_degree() const {
        return *std::min_element(generator_degrees_.begin(), generator_degrees_.end());
    }

    WedgeSpec with_field(FieldTag f) const { return WedgeSpec(sphere_dims_, f); }

    friend bool operator==(const WedgeSpec&, const WedgeSpec&) = default;

private:
    std::vector<int> sphere_dims_;
    std::vector<int> generator_degrees_;
    FieldTag field_;
};

inline WedgeSpec make_wedge(std::vector<int> sphere_dims, FieldTag field) {
    return WedgeSpec(std::move(sphere_dims), field);
}

using Letter = std::uint16_t;

/// A basis monomial e_{i_1} (x) ... (x) e_{i_m}, letters are 0-based generator indices.
/// Ordering is the basis order: shorter words first, then lexicographic.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t length() const noexcept { return letters_.size(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }

    friend bool operator==(const Word&, const Word&) = default;

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                      b.letters_.begin(), b.letters_.end());
    }

    /// Renders as e1⊗e2⊗... using 1-based generator names.
    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < letters_.size(); ++j) {
            if (j) s += "⊗";
            s += "e" + std::to_string(letters_[j] + 1);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

private:
    std::vector<Letter> letters_;
};

inline bool is_valid_word(const WedgeSpec& w, const Word& x) {
    return x.length() >= 1 &&
           std::all_of(x.letters().begin(), x.letters().end(),
                       [&](Letter l) { return l < w.size(); });
}

inline int word_degree(const WedgeSpec& w, const Word& x) {
    int deg = 0;
    for (Letter l : x.letters()) deg += w.generator_degree(l);
    return deg;
}

namespace detail {

// reach[r][d]: some word of exactly r letters has degree d.
inline std::vector<std::vector<char>> reachability(const WedgeSpec& w, int degree,
                                                   std::size_t max_len) {
    std::vector<std::vector<char>> reach(max_len + 1, std::vector<char>(degree + 1, 0));
    reach[0][0] = 1;
    for (std::size_t r = 1; r <= max_len; ++r)
        for (int d = 1; d <= degree; ++d)
            for (int n : w.generator_degrees())
                if (n <= d && reach[r - 1][d - n]) {
                    reach[r][d] = 1;
                    break;
                }
    return reach;
}

inline void enumerate_rec(const WedgeSpec& w, const std::vector<std::vector<char>>& reach,
                          std::vector<Letter>& prefix, std::size_t length, int remaining,
                          std::vector<Word>& out) {
    if (prefix.size() == length) {
        out.emplace_back(prefix);
        return;
    }
    const std::size_t left = length - prefix.size() - 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int n = w.generator_degree(i);
        if (n > remaining || !reach[left][remaining - n]) continue;
        prefix.push_back(static_cast<Letter>(i));
        enumerate_rec(w, reach, prefix, length, remaining - n, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Words of the given degree and length, in lexicographic order.
inline std::vector<Word> enumerate_words(const WedgeSpec& w, int degree, std::size_t length) {
    std::vector<Word> out;
    if (degree < 1 || length < 1) return out;
    auto reach = detail::reachability(w, degree, length);
    if (!reach[length][degree]) return out;
    std::vector<Letter> prefix;
    prefix.reserve(length);
    detail::enumerate_rec(w, reach, prefix, length, degree, out);
    return out;
}

/// Longest possible word length in the given degree.
inline std::size_t max_word_length(const WedgeSpec& w, int degree) {
    return degree < 1 ? 0 : static_cast<std::size_t>(degree / w.min_degree());
}

/// All basis words of the given degree: by length, then lexicographically.
inline std::vector<Word> enumerate_words(const WedgeSpec& w, int degree) {
    std::vector<Word> out;
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m) {
        auto part = enumerate_words(w, degree, m);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

/// Number of basis words of the given degree, without enumerating them.
inline BigInt count_words(const WedgeSpec& w, int degree) {
    if (degree < 1) return 0;
    std::vector<BigInt> c(degree + 1);
    c[0] = 1;
    for (int d = 1; d <= degree; ++d)
        for (int n : w.generator_degrees())
            if (n <= d) c[d] += c[d - n];
    return c[degree];
}

inline constexpr std::uint64_t default_word_budget = 1'000'000;

/// Throws BudgetExceeded when the degree has more basis words than allowed.
inline void check_budget(const WedgeSpec& w, int degree, std::uint64_t budget) {
    BigInt n = count_words(w, degree);
    if (n > budget) throw BudgetExceeded(degree, n.str(), budget);
}

} // namespace loopspace

#endif
