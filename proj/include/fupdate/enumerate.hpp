#pragma once

#include "fupdate/matrix.hpp"

#include <cstdint>
#include <vector>

namespace fupdate {

/// Default cap on enumeration sizes (number of vectors visited).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;
/// base^e, saturating.
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) noexcept;

/// Number of nonzero vectors of length n over GF(q) with weight in
/// [min_w, max_w]: sum_w C(n,w)(q-1)^w (saturating).
std::uint64_t low_weight_count(std::size_t n, std::size_t min_w, std::size_t max_w,
                               std::uint64_t q) noexcept;

/// Visits every vector of length n over GF(q) with min_w <= weight <= max_w
/// in canonical order: weight, then support (lexicographic), then nonzero
/// coefficients (lexicographic). `fn(const Vector&)` returns false to stop.
/// Returns false when stopped early.
template <class Fn>
bool for_each_low_weight(std::size_t n, std::size_t min_w, std::size_t max_w, std::uint64_t q,
                         Fn&& fn) {
    Vector v(n, 0);
    const std::size_t top = max_w < n ? max_w : n;
    for (std::size_t w = min_w; w <= top; ++w) {
        if (w == 0) {
            if (!fn(static_cast<const Vector&>(v))) return false;
            continue;
        }
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        while (true) {
            std::vector<Elem> coeff(w, 1);
            while (true) {
                for (std::size_t i = 0; i < w; ++i) v[support[i]] = coeff[i];
                if (!fn(static_cast<const Vector&>(v))) {
                    for (std::size_t i = 0; i < w; ++i) v[support[i]] = 0;
                    return false;
                }
                std::size_t k = w;
                while (k > 0 && coeff[k - 1] == q - 1) {
                    coeff[k - 1] = 1;
                    --k;
                }
                if (k == 0) break;
                ++coeff[k - 1];
            }
            for (std::size_t i = 0; i < w; ++i) v[support[i]] = 0;
            // next combination
            std::size_t k = w;
            while (k > 0 && support[k - 1] == n - w + (k - 1)) --k;
            if (k == 0) break;
            ++support[k - 1];
            for (std::size_t i = k; i < w; ++i) support[i] = support[i - 1] + 1;
        }
    }
    return true;
}

/// Visits all k-subsets of {0..n-1} in lexicographic order; `fn(const
/// std::vector<std::size_t>&)` returns false to stop.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(s))) return false;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

} // namespace fupdate
