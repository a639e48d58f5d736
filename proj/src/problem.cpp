#include "fupdate/problem.hpp"

#include "fupdate/error.hpp"

#include <numeric>
#include <random>

namespace fupdate {

FunctionUpdateProblem::FunctionUpdateProblem(Matrix a, std::size_t epsilon)
    : a_(std::move(a)), epsilon_(epsilon) {
    if (epsilon_ == 0) throw InvalidParams("epsilon must be at least 1");
    if (a_.rows() == 0) throw InvalidParams("A must have at least one row");
    const auto r = rank(a_);
    if (r != a_.rows()) {
        throw InvalidParams("A is rank deficient: rank " + std::to_string(r) + " < m = " +
                            std::to_string(a_.rows()));
    }
}

FunctionUpdateProblem::FunctionUpdateProblem(Matrix a, std::size_t epsilon, StripedForm striped)
    : FunctionUpdateProblem(std::move(a), epsilon) {
    if (striped.copies == 0) throw InvalidParams("striped form needs at least one copy");
    const Matrix expected =
        kron(Matrix::identity(striped.block.field(), striped.copies), striped.block);
    if (!(expected == a_)) throw InvalidParams("A does not equal kron(I_a, C)");
    striped_ = std::move(striped);
}

FunctionUpdateProblem FunctionUpdateProblem::striped(Matrix block, std::size_t copies,
                                                     std::size_t epsilon) {
    if (copies == 0) throw InvalidParams("striped form needs at least one copy");
    Matrix a = kron(Matrix::identity(block.field(), copies), block);
    return {std::move(a), epsilon, StripedForm{std::move(block), copies}};
}

std::string to_string(Method m) {
    switch (m) {
    case Method::naive: return "naive";
    case Method::drop_one: return "drop-one";
    case Method::t1_ecc: return "t1-ecc";
    case Method::subspace: return "subspace";
    case Method::companion: return "companion";
    case Method::external: return "external";
    case Method::oracle: return "oracle";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    for (Method m : {Method::naive, Method::drop_one, Method::t1_ecc, Method::subspace,
                     Method::companion, Method::external, Method::oracle}) {
        if (to_string(m) == s) return m;
    }
    throw InvalidParams("unknown method '" + s + "'");
}

EncoderScheme EncoderScheme::from_reduction(const FunctionUpdateProblem& p, Matrix s,
                                            Method method) {
    if (s.cols() != p.m()) {
        throw DimensionMismatch("S has " + std::to_string(s.cols()) + " columns, expected m = " +
                                std::to_string(p.m()));
    }
    Matrix h = s * p.A();
    return {std::move(s), std::move(h), method};
}

InterferenceSets enumerate_interference(const FunctionUpdateProblem& p, std::uint64_t budget) {
    const std::size_t w_max = 2 * p.epsilon();
    const std::uint64_t size = low_weight_count(p.n(), 1, w_max, p.q());
    if (size > budget) throw BudgetExceeded("interference enumeration", size, budget);

    InterferenceSets out;
    const Matrix& a = p.A();
    for_each_low_weight(p.n(), 1, w_max, p.q(), [&](const Vector& y) {
        Vector z = a.apply(y);
        if (is_zero_vector(z)) return true;
        out.deltas.push_back(y);
        if (out.lookup_.insert(z).second) {
            out.eta = std::max(out.eta, hamming_weight(z));
            out.first_preimage.push_back(out.deltas.size() - 1);
            out.syndromes.push_back(std::move(z));
        }
        return true;
    });
    return out;
}

Validity is_valid_encoder(const FunctionUpdateProblem& p, const InterferenceSets& sets,
                          const Matrix& s) {
    if (s.cols() != p.m()) {
        throw DimensionMismatch("S has " + std::to_string(s.cols()) + " columns, expected m = " +
                                std::to_string(p.m()));
    }
    if (!same_field(s.field(), p.field())) throw SpecMismatch("S and A over different fields");
    for (std::size_t i = 0; i < sets.syndromes.size(); ++i) {
        if (is_zero_vector(s.apply(sets.syndromes[i]))) {
            return {false, sets.syndromes[i], sets.deltas[sets.first_preimage[i]]};
        }
    }
    return {};
}

Validity is_valid_encoder(const FunctionUpdateProblem& p, const Matrix& s, std::uint64_t budget) {
    return is_valid_encoder(p, enumerate_interference(p, budget), s);
}

EncoderScheme reduce_encoder(const FunctionUpdateProblem& p, const Matrix& h_external) {
    if (h_external.cols() != p.n()) throw DimensionMismatch("H has the wrong number of columns");
    const Matrix common = code_intersection(p.A(), h_external);
    auto s = solve_left(p.A(), common);
    // common lies in rowspace(A) by construction.
    if (!s) throw std::logic_error("internal: intersection not expressible over A");
    return EncoderScheme::from_reduction(p, std::move(*s), Method::external);
}

Vector encode(const EncoderScheme& scheme, std::span<const Elem> x_new) {
    return scheme.H.apply(x_new);
}

Decoder::Decoder(const FunctionUpdateProblem& p, const Matrix& s, std::uint64_t budget)
    : field_(p.field()), s_(s), m_(p.m()) {
    if (s.cols() != p.m()) throw DimensionMismatch("S has the wrong number of columns");
    const std::uint64_t size = low_weight_count(p.n(), 0, p.epsilon(), p.q());
    if (size > budget) throw BudgetExceeded("decoder table", size, budget);
    std::unordered_set<Vector, VectorHash> seen;
    for_each_low_weight(p.n(), 0, p.epsilon(), p.q(), [&](const Vector& e) {
        Vector z = p.A().apply(e);
        if (!seen.insert(z).second) return true;
        Vector key = s_.apply(z);
        auto [it, inserted] = table_.emplace(std::move(key), candidates_.size());
        if (!inserted) {
            it->second = kAmbiguous;
            ++collisions_;
        }
        candidates_.push_back(std::move(z));
        return true;
    });
}

Vector Decoder::decode(std::span<const Elem> codeword, std::span<const Elem> stale) const {
    if (codeword.size() != s_.rows()) throw DimensionMismatch("codeword length differs from l");
    if (stale.size() != m_) throw DimensionMismatch("stale vector length differs from m");
    const Vector delta = vec_sub(*field_, codeword, s_.apply(stale));
    const auto it = table_.find(delta);
    if (it == table_.end()) throw NoCandidate();
    if (it->second == kAmbiguous) throw AmbiguousCandidate();
    return vec_add(*field_, stale, candidates_[it->second]);
}

Vector decode(const FunctionUpdateProblem& p, const EncoderScheme& scheme,
              std::span<const Elem> codeword, std::span<const Elem> stale) {
    return Decoder(p, scheme.S).decode(codeword, stale);
}

namespace {

bool round_trip(const FunctionUpdateProblem& p, const Decoder& dec, const Matrix& h,
                const Vector& x, const Vector& e) {
    const Vector x_new = vec_add(*p.field(), x, e);
    try {
        return dec.decode(h.apply(x_new), p.A().apply(x)) == p.A().apply(x_new);
    } catch (const NoCandidate&) {
        return false;
    } catch (const AmbiguousCandidate&) {
        return false;
    }
}

Vector random_vector(std::mt19937_64& gen, std::size_t n, std::uint64_t q) {
    Vector v(n);
    for (auto& x : v) x = static_cast<Elem>(gen() % q);
    return v;
}

} // namespace

RoundTripStats random_round_trips(const FunctionUpdateProblem& p, const Matrix& s,
                                  std::uint64_t trials, std::uint64_t seed) {
    const Decoder dec(p, s);
    const Matrix h = s * p.A();
    const std::uint64_t q = p.q();
    const std::size_t n = p.n();
    std::mt19937_64 gen(seed);
    RoundTripStats st;
    std::vector<std::size_t> idx(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Vector x = random_vector(gen, n, q);
        const std::size_t w = gen() % (std::min(p.epsilon(), n) + 1);
        // Partial Fisher-Yates for the support.
        std::iota(idx.begin(), idx.end(), 0);
        Vector e(n, 0);
        for (std::size_t i = 0; i < w; ++i) {
            std::swap(idx[i], idx[i + gen() % (n - i)]);
            e[idx[i]] = static_cast<Elem>(1 + gen() % (q - 1));
        }
        ++st.trials;
        if (!round_trip(p, dec, h, x, e)) {
            if (!st.first_failure) st.first_failure = e;
            ++st.failures;
        }
    }
    return st;
}

RoundTripStats exhaustive_round_trips(const FunctionUpdateProblem& p, const Matrix& s,
                                      std::uint64_t seed, std::uint64_t budget) {
    const std::uint64_t size = low_weight_count(p.n(), 0, p.epsilon(), p.q());
    if (size > budget) throw BudgetExceeded("exhaustive round trips", size, budget);
    const Decoder dec(p, s, budget);
    const Matrix h = s * p.A();
    std::mt19937_64 gen(seed);
    RoundTripStats st;
    for_each_low_weight(p.n(), 0, p.epsilon(), p.q(), [&](const Vector& e) {
        const Vector x = random_vector(gen, p.n(), p.q());
        ++st.trials;
        if (!round_trip(p, dec, h, x, e)) {
            if (!st.first_failure) st.first_failure = e;
            ++st.failures;
        }
        return true;
    });
    return st;
}

bool saving_possible(const FunctionUpdateProblem& p, const InterferenceSets& sets) {
    const std::uint64_t nonzero = sat_pow(p.q(), p.m()) - 1;
    return sets.syndromes.size() < nonzero;
}

bool saving_possible(const FunctionUpdateProblem& p, std::uint64_t budget) {
    return saving_possible(p, enumerate_interference(p, budget));
}

bool sufficient_field_check(std::size_t n, std::size_t m, std::size_t epsilon, std::uint64_t q) {
    if (m <= 2 * epsilon) {
        throw InvalidParams("sufficient field check needs m > 2 eps");
    }
    // Both sides saturate at UINT64_MAX, which only matters if both do.
    const std::uint64_t lhs = sat_pow(q, m - 2 * epsilon);
    const std::uint64_t rhs = binomial(n, 2 * epsilon);
    return lhs >= rhs;
}

Normalized normalize(const FunctionUpdateProblem& p) {
    const auto ech = rref(p.A());
    const Matrix k_prime = p.A().select_columns(ech.pivots);
    Matrix k = inverse(k_prime);
    Matrix a_prime = k * p.A();
    return {FunctionUpdateProblem(std::move(a_prime), p.epsilon()), std::move(k), ech.pivots};
}

} // namespace fupdate
