#pragma once

// The (A, eps) function update problem: a receiver holding A x must learn
// A(x + e) from a codeword H(x + e), for any update e of weight <= eps.

#include "fupdate/enumerate.hpp"
#include "fupdate/matrix.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace fupdate {

/// A = kron(I_a, C).
struct StripedForm {
    Matrix block;       // C, t x K
    std::size_t copies; // a
};

class FunctionUpdateProblem {
public:
    /// Throws InvalidParams if A is not full row rank or eps == 0.
    FunctionUpdateProblem(Matrix a, std::size_t epsilon);
    FunctionUpdateProblem(Matrix a, std::size_t epsilon, StripedForm striped);

    static FunctionUpdateProblem striped(Matrix block, std::size_t copies, std::size_t epsilon);

    const Matrix& A() const noexcept { return a_; }
    const FieldPtr& field() const noexcept { return a_.field(); }
    std::uint64_t q() const noexcept { return a_.field()->order(); }
    std::size_t m() const noexcept { return a_.rows(); }
    std::size_t n() const noexcept { return a_.cols(); }
    std::size_t epsilon() const noexcept { return epsilon_; }
    const std::optional<StripedForm>& striped_form() const noexcept { return striped_; }

    /// m <= 2 eps: transmitting A(x+e) is already optimal.
    bool naive_optimal() const noexcept { return m() <= 2 * epsilon_; }

private:
    Matrix a_;
    std::size_t epsilon_;
    std::optional<StripedForm> striped_;
};

enum class Method { naive, drop_one, t1_ecc, subspace, companion, external, oracle };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Linear scheme H = S A.
struct EncoderScheme {
    Matrix S;
    Matrix H;
    Method method;

    std::size_t length() const noexcept { return S.rows(); }

    static EncoderScheme from_reduction(const FunctionUpdateProblem& p, Matrix s, Method method);
};

/// I(A, eps) and I_FU(A, eps).
struct InterferenceSets {
    /// y with 0 < wt(y) <= 2 eps and A y != 0, canonical order.
    std::vector<Vector> deltas;
    /// Distinct A y in order of first appearance.
    std::vector<Vector> syndromes;
    /// Index into `deltas` of the first preimage of each syndrome.
    std::vector<std::size_t> first_preimage;
    /// Maximum Hamming weight over the syndromes (0 when empty).
    std::size_t eta = 0;

    bool contains_syndrome(const Vector& z) const { return lookup_.contains(z); }

private:
    std::unordered_set<Vector, VectorHash> lookup_;
    friend InterferenceSets enumerate_interference(const FunctionUpdateProblem&, std::uint64_t);
};

/// Throws BudgetExceeded when sum_{w<=2eps} C(n,w)(q-1)^w exceeds `budget`.
InterferenceSets enumerate_interference(const FunctionUpdateProblem& p,
                                        std::uint64_t budget = kDefaultBudget);

struct Validity {
    bool valid = true;
    /// First z in I_FU with S z = 0.
    std::optional<Vector> witness_syndrome;
    /// First y in I(A, eps) with A y = witness and H y = 0.
    std::optional<Vector> witness_delta;
};

/// Valid iff S z != 0 for every z in I_FU(A, eps).
Validity is_valid_encoder(const FunctionUpdateProblem& p, const Matrix& s,
                          std::uint64_t budget = kDefaultBudget);
Validity is_valid_encoder(const FunctionUpdateProblem& p, const InterferenceSets& sets,
                          const Matrix& s);

/// Reduce an arbitrary encoder H' to the generator of rowspace(A) ∩
/// rowspace(H'), written as S A.
EncoderScheme reduce_encoder(const FunctionUpdateProblem& p, const Matrix& h_external);

Vector encode(const EncoderScheme& scheme, std::span<const Elem> x_new);

/// Maps S z -> z for every z = A e with wt(e) <= eps (z = 0 included).
/// Two distinct such z share an image iff S is not a valid encoder.
class Decoder {
public:
    Decoder(const FunctionUpdateProblem& p, const Matrix& s, std::uint64_t budget = kDefaultBudget);

    /// Returns A(x+e) from c = H(x+e) and stale = A x. Throws NoCandidate or
    /// AmbiguousCandidate.
    Vector decode(std::span<const Elem> codeword, std::span<const Elem> stale) const;

    /// True when two candidates share an image under S.
    bool has_collisions() const noexcept { return collisions_ > 0; }

private:
    FieldPtr field_;
    Matrix s_;
    std::size_t m_;
    // Index into candidates_, or kAmbiguous.
    std::unordered_map<Vector, std::size_t, VectorHash> table_;
    std::vector<Vector> candidates_;
    std::size_t collisions_ = 0;
};

inline constexpr std::size_t kAmbiguous = static_cast<std::size_t>(-1);

Vector decode(const FunctionUpdateProblem& p, const EncoderScheme& scheme,
              std::span<const Elem> codeword, std::span<const Elem> stale);

struct RoundTripStats {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    /// First failing update, if any.
    std::optional<Vector> first_failure;
};

/// `trials` random (x, e) with wt(e) <= eps, drawn from std::mt19937_64
/// seeded with `seed` (entries are gen() % q; weight, support and values of
/// e likewise). A round trip fails when decode throws or returns anything
/// other than A(x + e).
RoundTripStats random_round_trips(const FunctionUpdateProblem& p, const Matrix& s,
                                  std::uint64_t trials, std::uint64_t seed);

/// Every e with wt(e) <= eps, each paired with a random x.
RoundTripStats exhaustive_round_trips(const FunctionUpdateProblem& p, const Matrix& s,
                                      std::uint64_t seed, std::uint64_t budget = kDefaultBudget);

/// |I_FU| < q^m - 1, i.e. some linear scheme of length m - 1 exists.
bool saving_possible(const FunctionUpdateProblem& p, std::uint64_t budget = kDefaultBudget);
bool saving_possible(const FunctionUpdateProblem& p, const InterferenceSets& sets);

/// q^(m - 2 eps) >= C(n, 2 eps), in exact integer arithmetic. Throws
/// InvalidParams when m <= 2 eps.
bool sufficient_field_check(std::size_t n, std::size_t m, std::size_t epsilon, std::uint64_t q);

struct Normalized {
    FunctionUpdateProblem problem; // A' = K A
    Matrix K;                      // inverse of K'
    std::vector<std::size_t> pivot_columns;
};

/// K' = the first m independent columns of A; A' = K'^{-1} A has I_m there.
Normalized normalize(const FunctionUpdateProblem& p);

} // namespace fupdate
