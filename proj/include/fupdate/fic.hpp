#pragma once

// Functional index coding: user i knows x restricted to X_i and wants A_i x.

#include "fupdate/problem.hpp"

#include <memory>

namespace fupdate {

struct FICUser {
    std::vector<std::size_t> side_info; // X_i, 0-based, increasing
    std::shared_ptr<const Matrix> demand; // A_i
};

class FICProblem {
public:
    FICProblem(FieldPtr field, std::size_t n, std::vector<FICUser> users);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<FICUser>& users() const noexcept { return users_; }

    void add_user(FICUser user);

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<FICUser> users_;
};

/// One user per subset Q of [n] with |Q| = min(2eps, n), lexicographic;
/// X = [n] \ Q and every user demands A (shared).
FICProblem from_function_update(const FunctionUpdateProblem& p,
                                std::uint64_t budget = kDefaultBudget);

/// Union over users of {y != 0 : y on X_i is 0, A_i y != 0}, canonical order.
std::vector<Vector> enumerate_fic_interference(const FICProblem& f,
                                               std::uint64_t budget = kDefaultBudget);

struct FICValidity {
    bool valid = true;
    std::optional<Vector> witness; // first y in canonical order with H y = 0
};

/// Valid iff H y != 0 for every y in the interference set.
FICValidity is_valid_fic_encoder(const FICProblem& f, const Matrix& h,
                                 std::uint64_t budget = kDefaultBudget);
FICValidity is_valid_fic_encoder(const std::vector<Vector>& interference, const Matrix& h);

} // namespace fupdate
