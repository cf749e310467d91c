#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hhl {

/**
 * Visits every k-subset of {0..n-1} in lexicographic order, as a sorted
 * index span. The callback returns false to stop early. Returns false iff
 * the enumeration was stopped.
 *
 * k == 0 visits the empty combination once.
 */
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& visit)
{
    if (k > n)
        return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!visit(std::span<const std::size_t>(idx)))
            return false;
        // advance to the next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Visits subsets of {0..n-1} with min_size <= |subset| <= max_size, by
/// increasing size and lexicographically within a size.
template <typename F>
bool for_each_subset_by_size(std::size_t n, std::size_t min_size, std::size_t max_size, F&& visit)
{
    for (std::size_t k = min_size; k <= max_size && k <= n; ++k)
        if (!for_each_combination(n, k, visit))
            return false;
    return true;
}

/// Binomial coefficient C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) noexcept;

/// Ceiling of log2(n) for n >= 1; 0 for n <= 1.
std::uint32_t ceil_log2(std::uint64_t n) noexcept;

/// splitmix64 step, used to derive independent seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) noexcept;

} // namespace hhl
