#include "fupdate/enumerate.hpp"

#include <limits>
#include <numeric>

namespace fupdate {

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > kMax / b) return kMax;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
    return a > kMax - b ? kMax : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r = sat_mul(r, base);
        if (r == kMax) break;
    }
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; split i between the two factors.
        const std::uint64_t g = std::gcd(r, i);
        r = sat_mul(r / g, (n - k + i) / (i / g));
        if (r == kMax) return kMax;
    }
    return r;
}

std::uint64_t low_weight_count(std::size_t n, std::size_t min_w, std::size_t max_w,
                               std::uint64_t q) noexcept {
    std::uint64_t total = 0;
    for (std::size_t w = min_w; w <= max_w && w <= n; ++w) {
        total = sat_add(total, sat_mul(binomial(n, w), sat_pow(q - 1, w)));
    }
    return total;
}

} // namespace fupdate
