#pragma once

// Exact optimal linear codelength by exhaustive subspace search, and the
// general lower/upper bounds it is checked against.

#include "fupdate/codes.hpp"
#include "fupdate/problem.hpp"

namespace fupdate {

struct CodelengthBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::size_t eta = 0;
    KqValue k_lower_side; // k_q(m, 2 eps + 1)
    KqValue k_upper_side; // k_q(m, eta + 1)
};

inline constexpr std::uint64_t kBoundsSearchBudget = 200'000;

/// lower = m - k_q(m, 2eps+1), upper = min(m, m - k_q(m, eta+1)). Open
/// brackets on k_q are resolved conservatively; `search_budget` caps the
/// exact k_q search tried before falling back to the bracket.
CodelengthBounds codelength_bounds(const FunctionUpdateProblem& p, const InterferenceSets& sets,
                                   std::uint64_t search_budget = kBoundsSearchBudget);
CodelengthBounds codelength_bounds(const FunctionUpdateProblem& p,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::uint64_t search_budget = kBoundsSearchBudget);

struct OracleOptions {
    std::uint64_t max_space = 1ull << 20; // largest q^m accepted
    std::uint64_t node_budget = 50'000'000;
    std::uint64_t enumeration_budget = kDefaultBudget;
};

struct OracleResult {
    std::size_t l_opt;
    Matrix S;                    // l_opt x m, ker S avoids I_FU
    std::size_t avoided_dim;     // m - l_opt
    bool certified;              // false when the node budget ran out
    std::uint64_t nodes;
};

/// l_opt = m - max{dim W : W meets I_FU only in 0}. W is searched in reduced
/// echelon form, rows added with decreasing pivot columns. Throws
/// BudgetExceeded when q^m exceeds `max_space`.
OracleResult optimal_codelength(const FunctionUpdateProblem& p, const OracleOptions& opt = {});

} // namespace fupdate
