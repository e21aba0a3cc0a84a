#ifndef LOOPSPACE_EXACTLA_HPP
#define LOOPSPACE_EXACTLA_HPP

// Exact linear algebra over Q and F_2 for the operator 1 - tau_m, where
// tau_m is the Koszul-signed rotation on the length-m words of one degree.
// This is the brute-force route to ker/coker dimensions; it never looks at
// orbits or periods.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopspace/algebra.hpp"
#include "loopspace/cyclic.hpp"
#include "loopspace/kernel_report.hpp"

namespace loopspace {

/// Sparse column-major matrix with small integer entries, read over Q or F_2.
class ExactMatrix {
public:
    struct Entry {
        std::size_t row;
        int value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    using Column = std::vector<Entry>; // sorted by row, no zeros

    ExactMatrix(std::size_t rows, std::size_t cols, FieldTag field)
        : rows_(rows), field_(field), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    FieldTag field() const noexcept { return field_; }
    const Column& column(std::size_t c) const { return columns_.at(c); }

    /// Adds value to entry (row, col); entries that cancel (or vanish mod 2) are dropped.
    void add(std::size_t row, std::size_t col, int value) {
        if (row >= rows_ || col >= cols()) throw std::out_of_range("matrix index out of range");
        Column& c = columns_[col];
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const Entry& e, std::size_t r) { return e.row < r; });
        if (it != c.end() && it->row == row) {
            it->value = reduce(it->value + value);
            if (it->value == 0) c.erase(it);
        } else if (int v = reduce(value); v != 0) {
            c.insert(it, Entry{row, v});
        }
    }

    int at(std::size_t row, std::size_t col) const {
        for (const Entry& e : column(col))
            if (e.row == row) return e.value;
        return 0;
    }

    std::size_t non_zeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    /// Applies the matrix to an integer vector; the result is reduced mod 2 over F_2.
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
        if (v.size() != cols()) throw std::invalid_argument("vector length does not match columns");
        std::vector<BigInt> out(rows_);
        for (std::size_t c = 0; c < cols(); ++c) {
            if (v[c] == 0) continue;
            for (const Entry& e : columns_[c]) out[e.row] += v[c] * e.value;
        }
        if (field_ == FieldTag::GF2)
            for (auto& x : out) x = x % 2 == 0 ? BigInt(0) : BigInt(1);
        return out;
    }

    /// Sparse product: (column, coefficient) pairs in, non-zero (row, value) pairs out.
    std::map<std::size_t, BigInt> apply_sparse(const std::vector<std::pair<std::size_t, BigInt>>& v) const {
        std::map<std::size_t, BigInt> out;
        for (const auto& [c, x] : v)
            for (const Entry& e : column(c)) out[e.row] += x * e.value;
        std::erase_if(out, [&](const auto& kv) {
            return field_ == FieldTag::GF2 ? kv.second % 2 == 0 : kv.second == 0;
        });
        return out;
    }

    /// Same matrix with rows and columns relabelled: new index = perm[old index].
    ExactMatrix permuted(const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm) const {
        ExactMatrix out(rows_, cols(), field_);
        for (std::size_t c = 0; c < cols(); ++c)
            for (const Entry& e : columns_[c]) out.add(row_perm.at(e.row), col_perm.at(c), e.value);
        return out;
    }

private:
    int reduce(int v) const {
        if (field_ == FieldTag::GF2) return ((v % 2) + 2) % 2;
        return v;
    }

    std::size_t rows_;
    FieldTag field_;
    std::vector<Column> columns_;
};

namespace fields {

struct Rationals {
    using value_type = boost::multiprecision::cpp_rational;
    static value_type from_int(int v) { return value_type(v); }
    static bool is_zero(const value_type& v) { return v == 0; }
    // a - f * b with f chosen so that the pivot entries cancel.
    static value_type factor(const value_type& a, const value_type& b) { return a / b; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) {
        return a - f * b;
    }
};

struct GF2 {
    using value_type = std::uint8_t;
    static value_type from_int(int v) { return static_cast<value_type>(((v % 2) + 2) % 2); }
    static bool is_zero(value_type v) { return v == 0; }
    static value_type factor(value_type a, value_type) { return a; }
    static value_type sub_mul(value_type a, value_type f, value_type b) {
        return static_cast<value_type>(a ^ (f & b));
    }
};

} // namespace fields

namespace detail {

template <typename Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::value_type>>;

// col <- col - f * pivot, both sorted by row.
template <typename Field>
SparseVector<Field> eliminate(const SparseVector<Field>& col, const SparseVector<Field>& pivot,
                              const typename Field::value_type& f) {
    SparseVector<Field> out;
    out.reserve(col.size() + pivot.size());
    auto a = col.begin();
    auto b = pivot.begin();
    const typename Field::value_type zero = Field::from_int(0);
    while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
            auto v = Field::sub_mul(zero, f, b->second);
            if (!Field::is_zero(v)) out.emplace_back(b->first, std::move(v));
            ++b;
        } else {
            auto v = Field::sub_mul(a->second, f, b->second);
            if (!Field::is_zero(v)) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace detail

/// Rank by column reduction: each column is reduced against earlier pivots
/// keyed on its largest non-zero row index. Exact over both fields.
template <typename Field>
std::size_t rank_over(const ExactMatrix& a) {
    using Vec = detail::SparseVector<Field>;
    std::vector<Vec> pivots;
    std::vector<std::ptrdiff_t> pivot_of_row(a.rows(), -1);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Vec col;
        for (const auto& e : a.column(c)) {
            auto v = Field::from_int(e.value);
            if (!Field::is_zero(v)) col.emplace_back(e.row, std::move(v));
        }
        while (!col.empty()) {
            const std::size_t low = col.back().first;
            const std::ptrdiff_t p = pivot_of_row[low];
            if (p < 0) {
                pivot_of_row[low] = static_cast<std::ptrdiff_t>(pivots.size());
                pivots.push_back(std::move(col));
                break;
            }
            const Vec& piv = pivots[static_cast<std::size_t>(p)];
            col = detail::eliminate<Field>(col, piv, Field::factor(col.back().second, piv.back().second));
        }
    }
    return pivots.size();
}

inline std::size_t rank(const ExactMatrix& a) {
    return a.field() == FieldTag::GF2 ? rank_over<fields::GF2>(a) : rank_over<fields::Rationals>(a);
}

/// One graded piece: the length-m words of one degree and 1 - tau_m on them.
struct GradedPiece {
    std::vector<Word> basis;
    ExactMatrix matrix;

    /// Position of x in the basis.
    std::size_t index_of(const Word& x) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), x);
        if (it == basis.end() || *it != x) throw std::out_of_range("word not in basis: " + x.str());
        return static_cast<std::size_t>(it - basis.begin());
    }

    /// Coordinates of a signed sum of basis words.
    std::vector<BigInt> coordinates(const std::vector<SignedWord>& terms) const {
        std::vector<BigInt> v(basis.size());
        for (const auto& t : terms) v[index_of(t.word)] += t.coefficient;
        return v;
    }

    /// Non-zero entries of (1 - tau_m) applied to a signed sum of basis words.
    std::map<std::size_t, BigInt> image(const std::vector<SignedWord>& terms) const {
        std::vector<std::pair<std::size_t, BigInt>> v;
        v.reserve(terms.size());
        for (const auto& t : terms) v.emplace_back(index_of(t.word), t.coefficient);
        return matrix.apply_sparse(v);
    }
};

/// Column of word x is e_x - sign(x) e_{tau x}; over F_2 the sign is dropped.
inline GradedPiece one_minus_tau_piece(const WedgeSpec& w, int degree, std::size_t length) {
    GradedPiece piece{enumerate_words(w, degree, length), ExactMatrix(0, 0, w.field())};
    const std::size_t n = piece.basis.size();
    piece.matrix = ExactMatrix(n, n, w.field());
    const bool signed_field = w.field() == FieldTag::Rationals;
    for (std::size_t c = 0; c < n; ++c) {
        const Word& x = piece.basis[c];
        const int s = signed_field ? tau_sign(w, x) : 1;
        piece.matrix.add(c, c, 1);
        piece.matrix.add(piece.index_of(rotate(x)), c, -s);
    }
    return piece;
}

inline ExactMatrix one_minus_tau_matrix(const WedgeSpec& w, int degree, std::size_t length) {
    return one_minus_tau_piece(w, degree, length).matrix;
}

inline ExactMatrix one_minus_tau_matrix(const WedgeSpec& w, int degree, std::size_t length,
                                        FieldTag field) {
    return one_minus_tau_matrix(w.with_field(field), degree, length);
}

/// ker and coker of 1 - tau_m for every word length present in the degree.
inline KernelReport kernel_cokernel_dims(const WedgeSpec& w, int degree,
                                         std::uint64_t budget = default_word_budget) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    check_budget(w, degree, budget);
    KernelReport report{w, degree, 0, 0, {}};
    for (std::size_t m = 1; m <= max_word_length(w, degree); ++m) {
        ExactMatrix a = one_minus_tau_matrix(w, degree, m);
        if (a.cols() == 0) continue;
        const std::uint64_t r = rank(a);
        report.add(m, a.cols() - r, a.rows() - r);
    }
    return report;
}

} // namespace loopspace

#endif
