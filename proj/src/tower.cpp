#include "fupdate/tower.hpp"

#include "fupdate/error.hpp"

namespace fupdate {

Matrix companion_matrix(const FieldPtr& tower) {
    if (!tower || tower->is_prime_field()) throw NotATower();
    const auto& base = tower->base();
    const unsigned t = tower->degree();
    const auto& mod = tower->modulus();
    Matrix m(base, t, t);
    for (unsigned i = 1; i < t; ++i) m(i, i - 1) = 1;
    for (unsigned i = 0; i < t; ++i) m(i, t - 1) = base->neg(mod[i]);
    return m;
}

Matrix phi_expand(const FieldPtr& tower, Elem e) {
    if (!tower || tower->is_prime_field()) throw NotATower();
    if (!tower->contains(e)) throw InvalidParams("element outside the tower");
    const unsigned t = tower->degree();
    Matrix m(tower->base(), t, t);
    // Column j holds the coordinates of e * x^j.
    Elem basis = 1;
    const Elem x = tower->residue_x();
    for (unsigned j = 0; j < t; ++j) {
        const auto coords = tower->coefficients(tower->mul(e, basis));
        for (unsigned i = 0; i < t; ++i) m(i, j) = coords[i];
        basis = tower->mul(basis, x);
    }
    return m;
}

Matrix expand_blocks(const Matrix& m) {
    const auto& tower = m.field();
    if (!tower || tower->is_prime_field()) throw NotATower();
    const unsigned t = tower->degree();
    Matrix out(tower->base(), m.rows() * t, m.cols() * t);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            const Matrix block = phi_expand(tower, m(i, j));
            for (unsigned r = 0; r < t; ++r)
                for (unsigned c = 0; c < t; ++c) out(i * t + r, j * t + c) = block(r, c);
        }
    return out;
}

} // namespace fupdate
