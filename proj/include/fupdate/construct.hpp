#pragma once

// Encoder constructions. Every function returns a scheme that has been
// checked with is_valid_encoder whenever the interference enumeration fits
// the budget.

#include "fupdate/oracle.hpp"
#include "fupdate/problem.hpp"

#include <optional>
#include <string>

namespace fupdate {

struct ConstructionReport {
    EncoderScheme scheme;
    std::size_t length;
    std::string precondition;
    /// Absent when the interference sets are too large to enumerate.
    std::optional<CodelengthBounds> bounds;
    bool checked = false; // is_valid_encoder ran and passed
};

/// S = I_m.
ConstructionReport naive(const FunctionUpdateProblem& p, std::uint64_t budget = kDefaultBudget);

/// S spans the dual of the canonically first nonzero u outside I_FU.
/// Throws NoSavings when no such u exists.
ConstructionReport drop_one(const FunctionUpdateProblem& p, std::uint64_t budget = kDefaultBudget);

/// Striped with single-row C: S = parity check of a length-m code of distance
/// 2eps+1 (optimal). Throws InvalidParams for other shapes.
ConstructionReport striped_t1(const FunctionUpdateProblem& p,
                              std::uint64_t budget = kDefaultBudget);

/// Striped, eps = 1: one t-dimensional subspace of F_q^l per block, pairwise
/// trivially intersecting. Throws BadShape when l < 2t and
/// InsufficientSubspaces when fewer than `a` subspaces are available.
ConstructionReport subspace_eps1(const FunctionUpdateProblem& p, std::size_t target_l,
                                 std::uint64_t budget = kDefaultBudget);

/// The `a` subspaces used by subspace_eps1, each as an l x t basis [I; P].
std::vector<Matrix> trivially_intersecting_family(const FieldPtr& field, std::size_t t,
                                                  std::size_t l, std::size_t a);

/// Striped: parity check over GF(q^t) for a length-a code of distance 2eps+1,
/// with every entry replaced by its t x t multiplication matrix.
ConstructionReport companion_construction(const FunctionUpdateProblem& p,
                                          std::uint64_t budget = kDefaultBudget);

/// Every applicable construction; shortest wins, ties broken in the order
/// t1-ecc, companion, subspace, drop-one, naive.
ConstructionReport auto_construct(const FunctionUpdateProblem& p,
                                  std::uint64_t budget = kDefaultBudget);

/// Dispatch by method; `target_l` is used by subspace only (default: the
/// smallest length the family supports).
ConstructionReport construct(const FunctionUpdateProblem& p, Method method,
                             std::optional<std::size_t> target_l = std::nullopt,
                             std::uint64_t budget = kDefaultBudget);

} // namespace fupdate
