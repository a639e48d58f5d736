#include "fupdate/oracle.hpp"

#include "fupdate/error.hpp"

#include <algorithm>

namespace fupdate {

CodelengthBounds codelength_bounds(const FunctionUpdateProblem& p, const InterferenceSets& sets,
                                   std::uint64_t search_budget) {
    CodelengthBounds b;
    const std::size_t m = p.m();
    b.eta = sets.eta;
    b.k_lower_side = kq_value(p.q(), m, 2 * p.epsilon() + 1, search_budget);
    b.k_upper_side = kq_value(p.q(), m, sets.eta + 1, search_budget);
    b.lower = m - std::min(m, b.k_lower_side.k_upper);
    b.upper = std::min(m, m - std::min(m, b.k_upper_side.k_lower));
    return b;
}

CodelengthBounds codelength_bounds(const FunctionUpdateProblem& p, std::uint64_t budget,
                                   std::uint64_t search_budget) {
    return codelength_bounds(p, enumerate_interference(p, budget), search_budget);
}

namespace {

class SubspaceSearch {
public:
    SubspaceSearch(const FunctionUpdateProblem& p, const InterferenceSets& sets,
                   std::size_t target, std::uint64_t budget)
        : f_(*p.field()), m_(p.m()), q_(p.q()), target_(target), budget_(budget) {
        pw_.resize(m_);
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            pw_[i] = w;
            w *= q_;
        }
        forbidden_.assign(w, 0);
        for (const auto& z : sets.syndromes) forbidden_[key(z)] = 1;
        elements_.push_back(0);
    }

    void run() {
        try {
            dfs(m_);
        } catch (const Stop&) {
        }
    }

    bool certified() const { return certified_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<Vector>& best() const { return best_; }

private:
    struct Stop {};

    std::uint64_t key(std::span<const Elem> v) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < m_; ++i) k += pw_[i] * v[i];
        return k;
    }
    std::uint64_t add_keys(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            out += pw_[i] * f_.add(static_cast<Elem>(a / pw_[i] % q_),
                                   static_cast<Elem>(b / pw_[i] % q_));
        }
        return out;
    }

    // Rows below `top` may still be added, each with a smaller pivot.
    void dfs(std::size_t top) {
        if (rows_.size() > best_.size()) best_ = rows_;
        if (best_.size() >= target_) throw Stop{};
        for (std::size_t p = top; p-- > 0;) {
            if (rows_.size() + p + 1 <= best_.size()) return;
            std::vector<std::size_t> free_cols;
            for (std::size_t c = p + 1; c < m_; ++c)
                if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end())
                    free_cols.push_back(c);
            Vector v(m_, 0);
            v[p] = 1;
            const std::uint64_t count = sat_pow(q_, free_cols.size());
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                if (rows_.size() + p + 1 <= best_.size()) return;
                std::uint64_t t = idx;
                for (std::size_t c : free_cols) {
                    v[c] = static_cast<Elem>(t % q_);
                    t /= q_;
                }
                if (++nodes_ > budget_) {
                    certified_ = false;
                    throw Stop{};
                }
                if (!admissible(key(v))) continue;
                push(v, p);
                dfs(p);
                pop();
            }
        }
    }

    bool admissible(std::uint64_t kv) const {
        // Scalar closure of I_FU: checking v + W covers every a v + W.
        for (std::uint64_t w : elements_)
            if (forbidden_[add_keys(kv, w)]) return false;
        return true;
    }

    void push(const Vector& v, std::size_t pivot) {
        rows_.push_back(v);
        pivots_.push_back(pivot);
        const std::size_t n = elements_.size();
        for (Elem a = 1; a < q_; ++a) {
            std::uint64_t av = 0;
            for (std::size_t i = 0; i < m_; ++i) av += pw_[i] * f_.mul(a, v[i]);
            for (std::size_t i = 0; i < n; ++i) elements_.push_back(add_keys(elements_[i], av));
        }
    }

    void pop() {
        rows_.pop_back();
        pivots_.pop_back();
        elements_.resize(elements_.size() / q_);
    }

    const Field& f_;
    std::size_t m_;
    std::uint64_t q_;
    std::size_t target_;
    std::uint64_t budget_;
    std::vector<std::uint64_t> pw_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<std::uint64_t> elements_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Vector> best_;
    std::uint64_t nodes_ = 0;
    bool certified_ = true;
};

} // namespace

OracleResult optimal_codelength(const FunctionUpdateProblem& p, const OracleOptions& opt) {
    const std::uint64_t space = sat_pow(p.q(), p.m());
    if (space > opt.max_space) throw BudgetExceeded("subspace search (q^m)", space, opt.max_space);
    const InterferenceSets sets = enumerate_interference(p, opt.enumeration_budget);

    // No avoiding subspace is larger than k_q(m, 2eps+1).
    const KqValue k = kq_bounds(p.q(), p.m(), 2 * p.epsilon() + 1);
    SubspaceSearch search(p, sets, k.k_upper, opt.node_budget);
    search.run();

    const auto& w = search.best();
    const Matrix basis = Matrix::from_rows(p.field(), w, p.m());
    Matrix s = orthogonal_complement(basis);
    const std::size_t l = s.rows();
    return {l, std::move(s), w.size(), search.certified(), search.nodes()};
}

} // namespace fupdate
