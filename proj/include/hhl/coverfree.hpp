#pragma once

#include <hhl/bitset.hpp>

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

namespace hhl {

/**
 * A binary N x t code: N rows (tests) by t columns (vertices). Rows and
 * columns are addressed by 0-based index; column c stands for vertex c + 1.
 */
class BinaryCode
{
public:
    BinaryCode(std::size_t rows, std::size_t cols);

    static BinaryCode identity(std::size_t t);
    static BinaryCode filled(std::size_t rows, std::size_t cols, bool value);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t row, std::size_t col) const { return rows_.at(row).test(col); }
    void set(std::size_t row, std::size_t col, bool value);

    const Bitset& row(std::size_t r) const { return rows_.at(r); }
    /// Column c as a bitset over the rows.
    Bitset column(std::size_t c) const;

    /// Appends a row; `bits` must have cols() bits.
    void append_row(Bitset bits);
    BinaryCode without_row(std::size_t r) const;

    /// Every bit flipped.
    BinaryCode complement() const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    std::size_t cols_;
    std::vector<Bitset> rows_;
};

/// A disjoint pair (Σ, Λ) with no row that is 0 on all of Σ and 1 on all of Λ.
struct CoverFreeViolation
{
    std::vector<std::size_t> zero_columns;
    std::vector<std::size_t> one_columns;
};

/**
 * Returns the lexicographically first violating pair (Σ first, then Λ), or
 * nothing if `code` is a cover-free (s,l)-code: for every disjoint Σ, Λ with
 * |Σ| = s and |Λ| = l some row is 0 on Σ and 1 on Λ.
 *
 * `jobs` > 1 splits the Σ enumeration by its smallest column across
 * threads; the result does not depend on `jobs`.
 *
 * Throws std::invalid_argument if s + l > cols().
 */
std::optional<CoverFreeViolation> find_violation(const BinaryCode& code, std::size_t s, std::size_t l,
                                                 unsigned jobs = 1);

bool is_cover_free(const BinaryCode& code, std::size_t s, std::size_t l, unsigned jobs = 1);

/// is_cover_free(complement(code), l, s). Agrees with is_cover_free(code, s, l).
bool symmetry_check(const BinaryCode& code, std::size_t s, std::size_t l);

/// C(t,s) * C(t-s,l) * N, the number of (pair, row) checks of a full verification.
double verification_work(const BinaryCode& code, std::size_t s, std::size_t l);
double verification_work(std::size_t rows, std::size_t t, std::size_t s, std::size_t l);

/// Main terms of the known asymptotic bounds on the rate of CF (s,l)-codes
/// as s grows with l fixed. Advisory only: nothing is claimed at finite s.
struct RateBounds
{
    double lower;
    double upper;
};

/// Requires s >= 2 and l >= 1.
RateBounds cf_rate_bounds(std::size_t s, std::size_t l);

/**
 * Random search for a CF (s,l)-code of size t. Tries lengths 1, 2, 4, ...
 * (and finally max_rows), sampling `attempts_per_length` codes with i.i.d.
 * Bernoulli(l/(s+l)) entries at each length; returns the first verified
 * code.
 */
std::optional<BinaryCode> search_random_cf_code(std::size_t t, std::size_t s, std::size_t l, std::size_t max_rows,
                                                std::uint64_t seed, unsigned attempts_per_length = 8);

/// Text format: a "N t" header line, then N lines of t '0'/'1' characters.
BinaryCode read_code(std::istream& in);
void write_code(std::ostream& out, const BinaryCode& code);

} // namespace hhl
