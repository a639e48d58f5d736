#pragma once

// Classical linear-code services: k_q(m, d), parity checks, covering radius.

#include "fupdate/enumerate.hpp"
#include "fupdate/matrix.hpp"

#include <string>

namespace fupdate {

enum class KSource { analytic, table, exact_search, bound };

std::string to_string(KSource s);

/// Bracket on k_q(m, d), the largest dimension of a length-m code over GF(q)
/// with minimum distance >= d. Exact when lower == upper.
struct KqValue {
    std::uint64_t q = 2;
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t k_lower = 0;
    std::size_t k_upper = 0;
    KSource source = KSource::bound;
    std::string note;

    bool exact() const noexcept { return k_lower == k_upper; }
};

struct Redundancy {
    std::size_t r;
    Matrix witness; // r x m, every (d-1) columns independent
};

/// Smallest r admitting an r x m matrix whose every (d-1)-subset of columns
/// is independent, found by backtracking over scale-normalized columns.
/// Throws BudgetExceeded when the node count passes `budget`.
Redundancy min_redundancy_exact(const FieldPtr& field, std::size_t m, std::size_t d,
                                std::uint64_t budget = 20'000'000);

/// Singleton / sphere-packing upper bound, Gilbert-Varshamov lower bound,
/// tightened by closed forms and the embedded table.
KqValue kq_bounds(std::uint64_t q, std::size_t m, std::size_t d);

/// kq_bounds, falling back to exact search when the bracket is open. If the
/// search runs out of budget the bracket is returned unchanged.
KqValue kq_value(std::uint64_t q, std::size_t m, std::size_t d,
                 std::uint64_t budget = 20'000'000);

struct ParityCheck {
    Matrix H;         // (m - k) x m
    std::size_t k;
    std::string construction; // empty, repetition, single-parity, identity, mds, hamming, search
};

/// Parity check of a code of length m, distance >= d and the largest
/// dimension this library can certify. Throws NoConstruction when the exact
/// search runs out of budget.
ParityCheck parity_check_best(const FieldPtr& field, std::size_t m, std::size_t d,
                              std::uint64_t budget = 20'000'000);

/// Every min(s, cols)-subset of the columns of h is linearly independent.
bool columns_independent(const Matrix& h, std::size_t s, std::uint64_t budget = kDefaultBudget);

enum class CodeRole { generator, parity };

/// Largest coset-leader weight of the code given by its generator or parity
/// check matrix. Throws BudgetExceeded.
std::size_t covering_radius(const Matrix& g, CodeRole role, std::uint64_t budget = kDefaultBudget);

struct KTableEntry {
    std::uint32_t q;
    std::uint8_t m;
    std::uint8_t d;
    std::uint8_t k;
};

/// Embedded k_q(m, d) values for q in {2, 3, 4}, m <= 12, excluding the
/// cases covered by closed forms.
std::span<const KTableEntry> k_table();

} // namespace fupdate
