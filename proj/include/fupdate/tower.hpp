#pragma once

// Matrix representations of extension fields over their base.

#include "fupdate/gf.hpp"
#include "fupdate/matrix.hpp"

namespace fupdate {

/// t x t companion matrix of the tower modulus p(x) = p_0 + ... + x^t, over
/// the base field: ones on the subdiagonal, last column (-p_0, ..., -p_{t-1}).
/// Throws NotATower for a prime field.
Matrix companion_matrix(const FieldPtr& tower);

/// Matrix of multiplication by `e` acting on coordinate column vectors in the
/// polynomial basis (1, x, ..., x^{t-1}). This is a ring embedding of the
/// tower into t x t matrices over the base; with M the companion matrix,
/// phi(x^k) = M^k. Throws NotATower for a prime field.
Matrix phi_expand(const FieldPtr& tower, Elem e);

/// Replace every entry of `m` (over the tower) with its phi_expand block.
Matrix expand_blocks(const Matrix& m);

} // namespace fupdate
