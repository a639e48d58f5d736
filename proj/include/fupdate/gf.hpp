#pragma once

// Exact arithmetic in GF(p), GF(p^k) and towers GF(q^t) over a base GF(q).
//
// Elements are stored as integer indices: the coefficient vector of the
// residue polynomial, written in positional form with base = order of the
// coefficient field (constant term least significant). Because every level
// of a tower uses the same convention, the index of any element is the
// base-p positional number of its absolute GF(p) coordinates; index 0 is
// zero and index 1 is one in every field.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fupdate {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    /// GF(p). Throws InvalidParams unless p is a prime below 2^31.
    static FieldPtr prime(std::uint32_t p);

    /// Degree-k extension of `base` by a monic irreducible modulus, given as
    /// k+1 coefficients over the base, constant term first.
    static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);

    /// GF(q) for a prime power q: the prime field when q is prime, otherwise
    /// the extension of GF(p) by the first primitive modulus.
    static FieldPtr standard(std::uint64_t q);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Degree over the base field (1 for a prime field).
    unsigned degree() const noexcept { return degree_; }
    /// Degree over GF(p).
    unsigned absolute_degree() const noexcept { return abs_degree_; }
    /// Coefficient field; null for a prime field.
    const FieldPtr& base() const noexcept { return base_; }
    bool is_prime_field() const noexcept { return base_ == nullptr; }
    /// Monic modulus over the base, constant term first ({0, 1} for GF(p)).
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    /// Order of the coefficient field (p for a prime field).
    std::uint64_t base_order() const noexcept;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem div(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Residue class of x modulo the modulus.
    Elem residue_x() const;
    /// A generator of the multiplicative group (smallest index with full order).
    Elem generator() const noexcept { return generator_; }
    /// True when the residue of x generates the multiplicative group.
    bool is_primitive_modulus() const;
    std::uint64_t multiplicative_order(Elem a) const;

    /// Coefficients over the base field, length degree(), constant first.
    std::vector<Elem> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const Elem> coeffs) const;

    bool contains(std::uint64_t index) const noexcept { return index < order_; }
    /// Structural equality: same characteristic, modulus and base chain.
    bool same_as(const Field& other) const noexcept;
    std::string describe() const;

private:
    struct Key {};

public:
    Field(Key, std::uint32_t p, FieldPtr base, std::vector<Elem> modulus);

private:
    Elem mul_slow(Elem a, Elem b) const;
    Elem pow_slow(Elem a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_ = 2;
    unsigned degree_ = 1;
    unsigned abs_degree_ = 1;
    std::uint64_t order_ = 2;
    FieldPtr base_;
    std::vector<Elem> modulus_;
    Elem generator_ = 1;

    std::vector<Elem> exp_; // length 2(q-1)
    std::vector<Elem> log_;
    std::vector<Elem> add_table_;
    std::vector<Elem> neg_table_;

    friend FieldPtr find_primitive_modulus(const FieldPtr& base, unsigned t);
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && a->same_as(*b));
}

/// Tower GF(q^t) over `base` whose modulus is the lexicographically smallest
/// primitive polynomial (coefficients compared from x^{t-1} down to x^0).
FieldPtr find_primitive_modulus(const FieldPtr& base, unsigned t);

/// True when the monic polynomial (constant first) is irreducible over `f`.
bool is_irreducible(const Field& f, std::span<const Elem> monic);

bool is_prime(std::uint64_t n) noexcept;

enum class FieldOp { add, sub, mul, div, neg, inv, pow };

/// A field element carrying its field. Arithmetic between elements of
/// different fields throws SpecMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;

private:
    FieldPtr field_;
    Elem value_;
};

/// Binary/unary arithmetic dispatch. For neg and inv `b` is ignored; for pow
/// the exponent is b's index.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

} // namespace fupdate
