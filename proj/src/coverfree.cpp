#include <hhl/coverfree.hpp>
#include <hhl/combinatorics.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace hhl {

// ---------------------------------------------------------------------------
// BinaryCode

BinaryCode::BinaryCode(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Bitset(cols))
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("code dimensions must be positive");
}

BinaryCode BinaryCode::identity(std::size_t t)
{
    BinaryCode code(t, t);
    for (std::size_t i = 0; i < t; ++i)
        code.rows_[i].set(i);
    return code;
}

BinaryCode BinaryCode::filled(std::size_t rows, std::size_t cols, bool value)
{
    BinaryCode code(rows, cols);
    if (value)
        for (auto& r : code.rows_)
            r = Bitset::full(cols);
    return code;
}

void BinaryCode::set(std::size_t row, std::size_t col, bool value)
{
    auto& r = rows_.at(row);
    if (col >= cols_)
        throw std::out_of_range("column index out of range");
    if (value)
        r.set(col);
    else
        r.reset(col);
}

Bitset BinaryCode::column(std::size_t c) const
{
    if (c >= cols_)
        throw std::out_of_range("column index out of range");
    Bitset out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].test(c))
            out.set(r);
    return out;
}

void BinaryCode::append_row(Bitset bits)
{
    if (bits.size() != cols_)
        throw std::invalid_argument("row width does not match code");
    rows_.push_back(std::move(bits));
}

BinaryCode BinaryCode::without_row(std::size_t r) const
{
    if (r >= rows_.size())
        throw std::out_of_range("row index out of range");
    if (rows_.size() == 1)
        throw std::invalid_argument("cannot remove the only row");
    BinaryCode out(*this);
    out.rows_.erase(out.rows_.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
}

BinaryCode BinaryCode::complement() const
{
    BinaryCode out(*this);
    for (auto& r : out.rows_)
        r = ~r;
    return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class ViolationSearch
{
public:
    ViolationSearch(const BinaryCode& code, std::size_t s, std::size_t l) : t_(code.cols()), s_(s), l_(l)
    {
        for (std::size_t c = 0; c < t_; ++c) {
            ones_.push_back(code.column(c));
            zeros_.push_back(~ones_.back());
        }
    }

    /// Lexicographically first violation among Σ whose smallest column is
    /// `first` (any Σ when s = 0).
    std::optional<CoverFreeViolation> with_first(std::size_t first) const
    {
        std::optional<CoverFreeViolation> found;
        if (s_ == 0) {
            found = check_sigma({});
            return found;
        }
        const std::size_t tail = t_ - first - 1;
        for_each_combination(tail, s_ - 1, [&](std::span<const std::size_t> idx) {
            std::vector<std::size_t> sigma{first};
            for (auto i : idx)
                sigma.push_back(first + 1 + i);
            found = check_sigma(sigma);
            return !found.has_value();
        });
        return found;
    }

    std::size_t first_limit() const { return s_ == 0 ? 1 : t_ - s_ + 1; }

private:
    std::optional<CoverFreeViolation> check_sigma(const std::vector<std::size_t>& sigma) const
    {
        Bitset allowed = Bitset::full(zeros_.front().size());
        for (auto c : sigma)
            allowed &= zeros_[c];

        std::vector<std::size_t> rest;
        for (std::size_t c = 0, k = 0; c < t_; ++c) {
            if (k < sigma.size() && sigma[k] == c)
                ++k;
            else
                rest.push_back(c);
        }

        std::vector<std::size_t> lambda;
        if (auto hit = descend(allowed, rest, 0, lambda))
            return CoverFreeViolation{sigma, *hit};
        return std::nullopt;
    }

    /// Depth-first over Λ in lexicographic order. Once the surviving rows
    /// run out, the smallest completion of the current prefix is the witness.
    std::optional<std::vector<std::size_t>> descend(const Bitset& rows, const std::vector<std::size_t>& rest,
                                                    std::size_t start, std::vector<std::size_t>& lambda) const
    {
        if (rows.none()) {
            std::vector<std::size_t> witness = lambda;
            for (std::size_t i = start; witness.size() < l_; ++i)
                witness.push_back(rest[i]);
            return witness;
        }
        if (lambda.size() == l_)
            return std::nullopt;
        const std::size_t need = l_ - lambda.size();
        for (std::size_t i = start; i + need <= rest.size(); ++i) {
            lambda.push_back(rest[i]);
            auto hit = descend(rows & ones_[rest[i]], rest, i + 1, lambda);
            lambda.pop_back();
            if (hit)
                return hit;
        }
        return std::nullopt;
    }

    std::size_t t_;
    std::size_t s_;
    std::size_t l_;
    std::vector<Bitset> ones_;
    std::vector<Bitset> zeros_;
};

} // namespace

std::optional<CoverFreeViolation> find_violation(const BinaryCode& code, std::size_t s, std::size_t l, unsigned jobs)
{
    if (s + l > code.cols())
        throw std::invalid_argument("cover-free check needs s + l <= t (s=" + std::to_string(s) +
                                    ", l=" + std::to_string(l) + ", t=" + std::to_string(code.cols()) + ")");
    const ViolationSearch search(code, s, l);
    const std::size_t firsts = search.first_limit();

    if (jobs <= 1 || firsts <= 1) {
        for (std::size_t f = 0; f < firsts; ++f)
            if (auto v = search.with_first(f))
                return v;
        return std::nullopt;
    }

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, firsts));
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<CoverFreeViolation>> results(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t f = w; f < firsts; f += workers) {
                    if (f > best.load())
                        return;
                    if (auto v = search.with_first(f)) {
                        results[w] = std::move(v);
                        auto current = best.load();
                        while (f < current && !best.compare_exchange_weak(current, f)) {
                        }
                        return;
                    }
                }
            });
        }
    }

    std::optional<CoverFreeViolation> winner;
    for (auto& r : results)
        if (r && (!winner || r->zero_columns < winner->zero_columns))
            winner = std::move(r);
    return winner;
}

bool is_cover_free(const BinaryCode& code, std::size_t s, std::size_t l, unsigned jobs)
{
    return !find_violation(code, s, l, jobs).has_value();
}

bool symmetry_check(const BinaryCode& code, std::size_t s, std::size_t l)
{
    return is_cover_free(code.complement(), l, s);
}

double verification_work(std::size_t rows, std::size_t t, std::size_t s, std::size_t l)
{
    if (s + l > t)
        return 0.0;
    auto lc = [](double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); };
    return std::exp(lc(double(t), double(s)) + lc(double(t - s), double(l))) * static_cast<double>(rows);
}

double verification_work(const BinaryCode& code, std::size_t s, std::size_t l)
{
    return verification_work(code.rows(), code.cols(), s, l);
}

// ---------------------------------------------------------------------------
// Rate bounds and random search

RateBounds cf_rate_bounds(std::size_t s, std::size_t l)
{
    if (s < 2 || l < 1)
        throw std::invalid_argument("cf_rate_bounds requires s >= 2 and l >= 1");
    const double sd = static_cast<double>(s);
    const double ld = static_cast<double>(l);
    const double e = std::exp(1.0);
    const double scale = std::pow(sd, ld + 1.0);
    double upper = std::pow(ld + 1.0, ld + 1.0) / (2.0 * std::pow(e, ld - 1.0)) * std::log2(sd) / scale;
    double lower = std::pow(ld, ld) / std::pow(e, ld) * std::log2(e) / scale;
    return {lower, upper};
}

std::optional<BinaryCode> search_random_cf_code(std::size_t t, std::size_t s, std::size_t l, std::size_t max_rows,
                                                std::uint64_t seed, unsigned attempts_per_length)
{
    if (max_rows == 0)
        return std::nullopt;
    if (s + l > t)
        throw std::invalid_argument("random CF search needs s + l <= t");

    std::vector<std::size_t> lengths;
    for (std::size_t n = 1; n < max_rows; n *= 2)
        lengths.push_back(n);
    lengths.push_back(max_rows);

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(static_cast<double>(l) / static_cast<double>(s + l));
    for (auto n : lengths) {
        for (unsigned attempt = 0; attempt < attempts_per_length; ++attempt) {
            BinaryCode code(n, t);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < t; ++c)
                    if (bit(rng))
                        code.set(r, c, true);
            if (is_cover_free(code, s, l))
                return code;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// File format

BinaryCode read_code(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("code file: missing \"N t\" header");
    std::istringstream hs(header);
    long long n = 0;
    long long t = 0;
    std::string trailing;
    if (!(hs >> n >> t) || (hs >> trailing) || n <= 0 || t <= 0)
        throw std::runtime_error("code file: malformed header \"" + header + "\"");

    BinaryCode code(static_cast<std::size_t>(n), static_cast<std::size_t>(t));
    std::string line;
    for (long long r = 0; r < n; ++r) {
        if (!std::getline(in, line))
            throw std::runtime_error("code file: expected " + std::to_string(n) + " rows, got " + std::to_string(r));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.size() != static_cast<std::size_t>(t))
            throw std::runtime_error("code file: row " + std::to_string(r + 1) + " has " +
                                     std::to_string(line.size()) + " characters, expected " + std::to_string(t));
        for (long long c = 0; c < t; ++c) {
            char ch = line[static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1')
                throw std::runtime_error("code file: row " + std::to_string(r + 1) + " has a character other than 0/1");
            if (ch == '1')
                code.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
        }
    }
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw std::runtime_error("code file: trailing content after " + std::to_string(n) + " rows");
    return code;
}

void write_code(std::ostream& out, const BinaryCode& code)
{
    out << code.rows() << ' ' << code.cols() << '\n';
    for (std::size_t r = 0; r < code.rows(); ++r) {
        std::string line(code.cols(), '0');
        for (std::size_t c = 0; c < code.cols(); ++c)
            if (code.get(r, c))
                line[c] = '1';
        out << line << '\n';
    }
}

} // namespace hhl
