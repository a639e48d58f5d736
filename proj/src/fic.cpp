#include "fupdate/fic.hpp"

#include "fupdate/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace fupdate {

FICProblem::FICProblem(FieldPtr field, std::size_t n, std::vector<FICUser> users)
    : field_(std::move(field)), n_(n) {
    for (auto& u : users) add_user(std::move(u));
}

void FICProblem::add_user(FICUser user) {
    if (!user.demand) throw InvalidParams("user without a demand matrix");
    if (user.demand->cols() != n_) throw DimensionMismatch("demand matrix width differs from n");
    if (!same_field(user.demand->field(), field_)) throw SpecMismatch("demand over another field");
    std::sort(user.side_info.begin(), user.side_info.end());
    user.side_info.erase(std::unique(user.side_info.begin(), user.side_info.end()),
                         user.side_info.end());
    if (!user.side_info.empty() && user.side_info.back() >= n_) {
        throw InvalidParams("side information index out of range");
    }
    users_.push_back(std::move(user));
}

FICProblem from_function_update(const FunctionUpdateProblem& p, std::uint64_t budget) {
    const std::size_t n = p.n();
    const std::size_t size = std::min(2 * p.epsilon(), n);
    const std::uint64_t count = binomial(n, size);
    if (count > budget) throw BudgetExceeded("function-update reduction (users)", count, budget);

    auto a = std::make_shared<const Matrix>(p.A());
    std::vector<FICUser> users;
    users.reserve(count);
    for_each_subset(n, size, [&](const std::vector<std::size_t>& q) {
        FICUser u{{}, a};
        std::size_t j = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (j < q.size() && q[j] == i) {
                ++j;
            } else {
                u.side_info.push_back(i);
            }
        }
        users.push_back(std::move(u));
        return true;
    });
    return FICProblem(p.field(), n, std::move(users));
}

std::vector<Vector> enumerate_fic_interference(const FICProblem& f, std::uint64_t budget) {
    const std::uint64_t q = f.field()->order();
    std::uint64_t total = 0;
    for (const auto& u : f.users()) total = sat_add(total, sat_pow(q, f.n() - u.side_info.size()));
    if (total > budget) throw BudgetExceeded("index coding interference", total, budget);

    std::unordered_set<Vector, VectorHash> seen;
    for (const auto& u : f.users()) {
        std::vector<std::size_t> free_idx;
        for (std::size_t i = 0, j = 0; i < f.n(); ++i) {
            if (j < u.side_info.size() && u.side_info[j] == i) {
                ++j;
            } else {
                free_idx.push_back(i);
            }
        }
        for_each_low_weight(free_idx.size(), 1, free_idx.size(), q, [&](const Vector& local) {
            Vector y(f.n(), 0);
            for (std::size_t i = 0; i < free_idx.size(); ++i) y[free_idx[i]] = local[i];
            if (!is_zero_vector(u.demand->apply(y))) seen.insert(std::move(y));
            return true;
        });
    }
    std::vector<Vector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(),
              [](const Vector& a, const Vector& b) { return canonical_less(a, b); });
    return out;
}

FICValidity is_valid_fic_encoder(const std::vector<Vector>& interference, const Matrix& h) {
    for (const auto& y : interference) {
        if (is_zero_vector(h.apply(y))) return {false, y};
    }
    return {};
}

FICValidity is_valid_fic_encoder(const FICProblem& f, const Matrix& h, std::uint64_t budget) {
    if (h.cols() != f.n()) throw DimensionMismatch("encoder width differs from n");
    if (!same_field(h.field(), f.field())) throw SpecMismatch("encoder over another field");
    return is_valid_fic_encoder(enumerate_fic_interference(f, budget), h);
}

} // namespace fupdate
