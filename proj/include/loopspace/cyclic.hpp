#ifndef LOOPSPACE_CYCLIC_HPP
#define LOOPSPACE_CYCLIC_HPP

// Cyclic rotation of words, the Koszul-signed rotation, periods, rotation
// orbits (necklaces) and the signed orbit sums lying in ker(1 - signed rotation).

#include <algorithm>
#include <optional>
#include <vector>

#include "loopspace/algebra.hpp"

namespace loopspace {

/// (i_1, ..., i_m) -> (i_2, ..., i_m, i_1).
inline Word rotate(const Word& x) {
    std::vector<Letter> l(x.letters().begin(), x.letters().end());
    if (!l.empty()) std::rotate(l.begin(), l.begin() + 1, l.end());
    return Word(std::move(l));
}

inline Word rotate(const Word& x, std::size_t times) {
    std::vector<Letter> l(x.letters().begin(), x.letters().end());
    if (!l.empty()) std::rotate(l.begin(), l.begin() + times % l.size(), l.end());
    return Word(std::move(l));
}

/// Koszul sign picked up when the first letter moves past the rest:
/// -1 iff |e_{i_1}| and |e_{i_2}| + ... + |e_{i_m}| are both odd.
/// Raw sign, the field is not consulted.
inline int tau_sign(const WedgeSpec& w, const Word& x) {
    const int first = w.generator_degree(x.front());
    const int rest = word_degree(w, x) - first;
    return (first % 2 != 0 && rest % 2 != 0) ? -1 : 1;
}

/// Least d >= 1 with rotate^d(x) == x.
inline std::size_t period(const Word& x) {
    const std::size_t m = x.length();
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool fixed = true;
        for (std::size_t i = 0; i + d < m && fixed; ++i) fixed = x[i] == x[i + d];
        if (fixed) return d;
    }
    return m;
}

namespace detail {

// Compares rotate^s(x) with x lexicographically without materializing it.
inline bool rotation_less(const Word& x, std::size_t s) {
    const std::size_t m = x.length();
    for (std::size_t i = 0; i < m; ++i) {
        Letter a = x[(i + s) % m], b = x[i];
        if (a != b) return a < b;
    }
    return false;
}

} // namespace detail

inline bool is_least_rotation(const Word& x) {
    for (std::size_t s = 1; s < x.length(); ++s)
        if (detail::rotation_less(x, s)) return false;
    return true;
}

inline Word least_rotation(const Word& x) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < x.length(); ++s) {
        const std::size_t m = x.length();
        for (std::size_t i = 0; i < m; ++i) {
            Letter a = x[(i + s) % m], b = x[(i + best) % m];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    return rotate(x, best);
}

/// Product of the raw tau signs over one full period starting at x.
inline int accumulated_sign(const WedgeSpec& w, const Word& x) {
    const std::size_t d = period(x);
    const std::size_t m = x.length();
    const int total = word_degree(w, x);
    int sign = 1;
    for (std::size_t j = 0; j < d; ++j) {
        const int first = w.generator_degree(x[j % m]);
        if (first % 2 != 0 && (total - first) % 2 != 0) sign = -sign;
    }
    return sign;
}

struct Orbit {
    Word representative; ///< lexicographically least rotation
    std::size_t period = 1;
    std::vector<Word> members; ///< representative, tau(rep), ..., tau^{period-1}(rep)
    int sign_epsilon = 1;      ///< +1 under GF2

    int degree(const WedgeSpec& w) const { return word_degree(w, representative); }
    std::size_t length() const { return representative.length(); }
};

/// Full-period product of tau signs; always +1 over GF2.
inline int orbit_sign(const WedgeSpec& w, const Word& x) {
    return w.field() == FieldTag::GF2 ? 1 : accumulated_sign(w, x);
}

inline int orbit_sign(const WedgeSpec& w, const Orbit& o) {
    return orbit_sign(w, o.representative);
}

inline Orbit make_orbit(const WedgeSpec& w, const Word& x) {
    Orbit o;
    o.representative = least_rotation(x);
    o.period = period(o.representative);
    o.members.reserve(o.period);
    for (std::size_t j = 0; j < o.period; ++j) o.members.push_back(rotate(o.representative, j));
    o.sign_epsilon = orbit_sign(w, o.representative);
    return o;
}

/// Calls fn(representative) once per orbit of words of the given degree and
/// length, in increasing representative order.
template <typename Fn>
void for_each_orbit_representative(const WedgeSpec& w, int degree, std::size_t length, Fn&& fn) {
    for (const Word& x : enumerate_words(w, degree, length))
        if (is_least_rotation(x)) fn(x);
}

inline std::vector<Orbit> enumerate_orbits(const WedgeSpec& w, int degree) {
    std::vector<Orbit> out;
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m)
        for_each_orbit_representative(w, degree, m,
                                      [&](const Word& rep) { out.push_back(make_orbit(w, rep)); });
    return out;
}

struct SignedWord {
    Word word;
    int coefficient = 1;

    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// The signed orbit sum x + s_1 tau(x) + ... + s_{d-1} tau^{d-1}(x), where s_j is
/// the product of the tau signs of x, ..., tau^{j-1}(x). It is fixed by the
/// signed rotation exactly when the full-period sign is +1; otherwise there is
/// no kernel element supported on this orbit and nullopt is returned.
inline std::optional<std::vector<SignedWord>> roos_witness(const WedgeSpec& w, const Word& x) {
    if (orbit_sign(w, x) != 1) return std::nullopt;
    const bool signed_field = w.field() == FieldTag::Rationals;
    const std::size_t d = period(x);
    std::vector<SignedWord> terms;
    terms.reserve(d);
    Word cur = x;
    int s = 1;
    for (std::size_t j = 0; j < d; ++j) {
        terms.push_back({cur, s});
        if (signed_field) s *= tau_sign(w, cur);
        cur = rotate(cur);
    }
    return terms;
}

} // namespace loopspace

#endif
