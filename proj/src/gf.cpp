#include "fupdate/gf.hpp"

#include "fupdate/error.hpp"

#include <algorithm>
#include <limits>

namespace fupdate {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;
constexpr std::uint64_t kAddTableOrder = 256;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Elem add_digits(std::uint32_t p, Elem a, Elem b) {
    if (p == 2) return a ^ b;
    std::uint64_t r = 0, pw = 1;
    while (a != 0 || b != 0) {
        r += ((a % p + b % p) % p) * pw;
        a /= p;
        b /= p;
        pw *= p;
    }
    return static_cast<Elem>(r);
}

Elem neg_digits(std::uint32_t p, Elem a) {
    if (p == 2) return a;
    std::uint64_t r = 0, pw = 1;
    while (a != 0) {
        r += ((p - a % p) % p) * pw;
        a /= p;
        pw *= p;
    }
    return static_cast<Elem>(r);
}

// Remainder of `num` modulo a monic `den` over f; both constant-first.
std::vector<Elem> poly_rem(const Field& f, std::vector<Elem> num, std::span<const Elem> den) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t i = num.size(); i-- > dd;) {
        const Elem c = num[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] = f.sub(num[i - dd + j], f.mul(c, den[j]));
        }
    }
    num.resize(std::min(num.size(), dd));
    return num;
}

std::vector<Elem> digits(std::uint64_t value, std::uint64_t radix, std::size_t count) {
    std::vector<Elem> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Elem>(value % radix);
        value /= radix;
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > kMaxOrder / base) {
            throw InvalidParams("field order exceeds 2^31");
        }
        r *= base;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const Field& f, std::span<const Elem> monic) {
    if (monic.size() < 2 || monic.back() != 1) {
        throw InvalidParams("modulus must be monic of degree >= 1");
    }
    const std::size_t k = monic.size() - 1;
    const std::uint64_t q = f.order();
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t c = 0; c < count; ++c) {
            auto g = digits(c, q, d);
            g.push_back(1);
            const auto r = poly_rem(f, std::vector<Elem>(monic.begin(), monic.end()), g);
            if (std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; })) return false;
        }
    }
    return true;
}

Field::Field(Key, std::uint32_t p, FieldPtr base, std::vector<Elem> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
    if (!base_) {
        degree_ = 1;
        abs_degree_ = 1;
        order_ = p_;
        modulus_ = {0, 1};
    } else {
        if (modulus_.size() < 2 || modulus_.back() != 1) {
            throw InvalidParams("modulus must be monic of degree >= 1");
        }
        for (Elem c : modulus_) {
            if (!base_->contains(c)) throw InvalidParams("modulus coefficient outside base field");
        }
        degree_ = static_cast<unsigned>(modulus_.size() - 1);
        abs_degree_ = base_->absolute_degree() * degree_;
        order_ = checked_pow(base_->order(), degree_);
    }
}

std::uint64_t Field::base_order() const noexcept { return base_ ? base_->order() : p_; }

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= kMaxOrder) {
        throw InvalidParams("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
    auto f = std::make_shared<Field>(Key{}, p, nullptr, std::vector<Elem>{});
    f->build_tables();
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
    if (!base) throw InvalidParams("extension needs a base field");
    auto f = std::make_shared<Field>(Key{}, base->characteristic(), base, std::move(modulus));
    if (!is_irreducible(*base, f->modulus_)) {
        throw InvalidParams("modulus is reducible over " + base->describe());
    }
    f->build_tables();
    return f;
}

FieldPtr Field::standard(std::uint64_t q) {
    if (q < 2) throw InvalidParams("field order must be at least 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw InvalidParams(std::to_string(q) + " is not a prime power");
    auto gfp = prime(static_cast<std::uint32_t>(p));
    if (k == 1) return gfp;
    return find_primitive_modulus(gfp, k);
}

FieldPtr find_primitive_modulus(const FieldPtr& base, unsigned t) {
    if (!base) throw InvalidParams("base field required");
    if (t == 0) throw InvalidParams("extension degree must be >= 1");
    const std::uint64_t qb = base->order();
    const std::uint64_t count = checked_pow(qb, t);
    for (std::uint64_t c = 0; c < count; ++c) {
        auto mod = digits(c, qb, t);
        mod.push_back(1);
        if (t > 1 && !is_irreducible(*base, mod)) continue;
        auto f = std::make_shared<Field>(Field::Key{}, base->characteristic(), base, mod);
        if (!f->is_primitive_modulus()) continue;
        f->build_tables();
        return f;
    }
    throw InvalidParams("no primitive polynomial found"); // unreachable for finite fields
}

void Field::build_tables() {
    if (order_ <= kAddTableOrder && p_ != 2) {
        add_table_.resize(order_ * order_);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digits(p_, a, b);
    }
    if (order_ > kTableOrder) {
        for (Elem g = 1; g < order_; ++g) {
            if (multiplicative_order(g) == order_ - 1) {
                generator_ = g;
                break;
            }
        }
        return;
    }
    if (p_ != 2) {
        neg_table_.resize(order_);
        for (Elem a = 0; a < order_; ++a) neg_table_[a] = neg_digits(p_, a);
    }
    for (Elem g = 1; g < order_; ++g) {
        if (multiplicative_order(g) == order_ - 1) {
            generator_ = g;
            break;
        }
    }
    const std::uint64_t n = order_ - 1;
    std::vector<Elem> exp(2 * n);
    std::vector<Elem> log(order_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp[i] = x;
        exp[i + n] = x;
        log[x] = static_cast<Elem>(i);
        x = mul_slow(x, generator_);
    }
    exp_ = std::move(exp);
    log_ = std::move(log);
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    if (!base_) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
    return add_digits(p_, a, b);
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    if (!base_) return a == 0 ? 0 : p_ - a;
    return neg_digits(p_, a);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<Elem> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
            prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
        }
    }
    const auto r = poly_rem(*base_, std::move(prod), modulus_);
    std::vector<Elem> full(degree_, 0);
    std::copy(r.begin(), r.end(), full.begin());
    return from_coefficients(full);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow_slow(a, order_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e != 0) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) {
        const std::uint64_t n = order_ - 1;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
    }
    return pow_slow(a, e);
}

Elem Field::residue_x() const {
    if (!base_) return 0;
    if (degree_ == 1) return base_->neg(modulus_[0]);
    return static_cast<Elem>(base_->order());
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0) throw DivisionByZero();
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t r : prime_factors(order_ - 1)) {
        while (ord % r == 0 && pow_slow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

bool Field::is_primitive_modulus() const {
    const Elem x = residue_x();
    return x != 0 && multiplicative_order(x) == order_ - 1;
}

std::vector<Elem> Field::coefficients(Elem a) const {
    return digits(a, base_order(), degree_);
}

Elem Field::from_coefficients(std::span<const Elem> coeffs) const {
    const std::uint64_t qb = base_order();
    std::uint64_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * qb + coeffs[i];
    return static_cast<Elem>(r);
}

bool Field::same_as(const Field& other) const noexcept {
    if (this == &other) return true;
    if (p_ != other.p_ || order_ != other.order_ || modulus_ != other.modulus_) return false;
    if (!base_ || !other.base_) return !base_ && !other.base_;
    return base_->same_as(*other.base_);
}

std::string Field::describe() const {
    if (!base_) return "GF(" + std::to_string(p_) + ")";
    if (base_->is_prime_field()) {
        return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
    }
    return "GF(" + base_->describe() + "^" + std::to_string(degree_) + ")";
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw InvalidParams("field element without a field");
    if (!field_->contains(value_)) throw InvalidParams("element index outside the field");
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    const auto& f = *a.field();
    const bool unary = op == FieldOp::neg || op == FieldOp::inv || op == FieldOp::pow;
    if (!unary && !same_field(a.field(), b.field())) {
        throw SpecMismatch("operands over " + f.describe() + " and " + b.field()->describe());
    }
    switch (op) {
    case FieldOp::add: return {a.field(), f.add(a.value(), b.value())};
    case FieldOp::sub: return {a.field(), f.sub(a.value(), b.value())};
    case FieldOp::mul: return {a.field(), f.mul(a.value(), b.value())};
    case FieldOp::div: return {a.field(), f.div(a.value(), b.value())};
    case FieldOp::neg: return {a.field(), f.neg(a.value())};
    case FieldOp::inv: return {a.field(), f.inv(a.value())};
    case FieldOp::pow: return {a.field(), f.pow(a.value(), b.value())};
    }
    return a;
}

FieldElement FieldElement::inverse() const { return field_arith(*this, *this, FieldOp::inv); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    return {field_, field_->pow(value_, e)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return field_arith(a, b, FieldOp::add);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return field_arith(a, b, FieldOp::sub);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return field_arith(a, b, FieldOp::mul);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return field_arith(a, b, FieldOp::div);
}
FieldElement operator-(const FieldElement& a) { return field_arith(a, a, FieldOp::neg); }

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
}

} // namespace fupdate
