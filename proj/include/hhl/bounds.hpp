#pragma once

#include <hhl/core.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace hhl {

using BigInt = boost::multiprecision::cpp_int;

/// Number of labeled hypergraphs on t vertices with at most s distinct
/// nonempty edges of size at most l, the empty hypergraph included:
/// sum_{k=0..s} C(M, k) with M = sum_{j=1..l} C(t, j).
BigInt family_size_exact(const FamilyParams& p);

/// Same count for raw integers, with no parameter validation.
BigInt family_size_exact(std::uint64_t t, std::uint64_t s, std::uint64_t l);

/// Main term t^(s*l) / ((l!)^s * s!) of the family size, in log2 space.
double log2_family_size_asymptotic(const FamilyParams& p);

/// 2^log2_family_size_asymptotic(p); may overflow to +inf for large inputs.
double family_size_asymptotic(const FamilyParams& p);

/// ceil(log2 |F(t,s,l)|): no searching algorithm can do better in the worst case.
std::uint64_t info_lower_bound(const FamilyParams& p);

/// Exact ceil(log2 n) for n >= 1.
std::uint64_t ceil_log2(const BigInt& n);

/// log2(t) / queries, as a finite-t sample of a rate.
struct RatePoint
{
    std::uint64_t t;
    std::uint64_t queries;
    double rate;
};

/// Requires t >= 2 and queries >= 1.
RatePoint rate_point(std::uint64_t t, std::uint64_t queries);

} // namespace hhl
