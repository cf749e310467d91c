#include <hhl/combinatorics.hpp>

#include <bit>
#include <limits>

namespace hhl {

__extension__ using uint128 = unsigned __int128;

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) noexcept
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    uint128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        r = r * (n - k + i) / i;
        if (r > max)
            return max;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint32_t ceil_log2(std::uint64_t n) noexcept
{
    if (n <= 1)
        return 0;
    return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) noexcept
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace hhl
