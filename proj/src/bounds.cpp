#include <hhl/bounds.hpp>

#include <cmath>
#include <stdexcept>

namespace hhl {

namespace {

BigInt binomial(const BigInt& n, std::uint64_t k)
{
    if (n < k)
        return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace

BigInt family_size_exact(std::uint64_t t, std::uint64_t s, std::uint64_t l)
{
    BigInt candidates = 0;
    for (std::uint64_t j = 1; j <= l && j <= t; ++j)
        candidates += binomial(BigInt(t), j);
    BigInt total = 0;
    for (std::uint64_t k = 0; k <= s; ++k) {
        if (candidates < k)
            break;
        total += binomial(candidates, k);
    }
    return total;
}

BigInt family_size_exact(const FamilyParams& p)
{
    return family_size_exact(p.t, p.s, p.l);
}

double log2_family_size_asymptotic(const FamilyParams& p)
{
    const double s = static_cast<double>(p.s);
    const double l = static_cast<double>(p.l);
    const double ln2 = std::log(2.0);
    double ln = s * l * std::log(static_cast<double>(p.t)) - s * std::lgamma(l + 1.0) - std::lgamma(s + 1.0);
    return ln / ln2;
}

double family_size_asymptotic(const FamilyParams& p)
{
    return std::exp2(log2_family_size_asymptotic(p));
}

std::uint64_t ceil_log2(const BigInt& n)
{
    if (n < 1)
        throw std::invalid_argument("ceil_log2 of a non-positive number");
    if (n == 1)
        return 0;
    auto msb = boost::multiprecision::msb(n);
    bool power_of_two = boost::multiprecision::lsb(n) == msb;
    return power_of_two ? msb : msb + 1;
}

std::uint64_t info_lower_bound(const FamilyParams& p)
{
    return ceil_log2(family_size_exact(p));
}

RatePoint rate_point(std::uint64_t t, std::uint64_t queries)
{
    if (t < 2 || queries < 1)
        throw std::invalid_argument("rate_point requires t >= 2 and queries >= 1");
    return {t, queries, std::log2(static_cast<double>(t)) / static_cast<double>(queries)};
}

} // namespace hhl
