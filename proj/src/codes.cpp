#include "fupdate/codes.hpp"

#include "fupdate/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace fupdate {

namespace {

// Generated by tools/gen_k_table.cpp (exact search over GF(q)).
constexpr KTableEntry kTable[] = {
#include "k_table.inc"
    {0, 0, 0, 0},
};

std::size_t hamming_rmin(std::uint64_t q, std::size_t m) {
    // Smallest r with (q^r - 1)/(q - 1) >= m.
    std::size_t r = 1;
    std::uint64_t points = 1;
    while (points < m) {
        points = sat_add(sat_mul(points, q), 1);
        ++r;
    }
    return r;
}

// Keys store a column of length r in base q, entry 0 most significant.
class KeySpace {
public:
    KeySpace(const Field& f, std::size_t r) : f_(f), r_(r), q_(f.order()) {
        size_ = sat_pow(q_, r);
        pw_.resize(r);
        std::uint64_t p = 1;
        for (std::size_t i = r; i-- > 0;) {
            pw_[i] = p;
            p *= q_;
        }
    }
    std::uint64_t size() const { return size_; }
    Elem digit(std::uint64_t key, std::size_t i) const {
        return static_cast<Elem>((key / pw_[i]) % q_);
    }
    std::uint64_t scale(Elem a, std::uint64_t c) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < r_; ++i) out += pw_[i] * f_.mul(a, digit(c, i));
        return out;
    }
    std::uint64_t add(std::uint64_t v, std::uint64_t w) const {
        if (f_.characteristic() == 2) return v ^ w; // digits add bitwise
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < r_; ++i) out += pw_[i] * f_.add(digit(v, i), digit(w, i));
        return out;
    }
    bool normalized(std::uint64_t key) const {
        for (std::size_t i = 0; i < r_; ++i) {
            const Elem d = digit(key, i);
            if (d != 0) return d == 1;
        }
        return false;
    }
    std::uint64_t unit(std::size_t i) const { return pw_[i]; }

private:
    const Field& f_;
    std::size_t r_;
    std::uint64_t q_;
    std::uint64_t size_;
    std::vector<std::uint64_t> pw_;
};

// Backtracking for an r x m matrix with every (d-1) columns independent.
// level_[v] = fewest chosen columns whose span reaches v (kUnreached if
// more than d-2 are needed); a new column must stay unreached.
class ColumnSearch {
public:
    ColumnSearch(const Field& f, std::size_t r, std::size_t m, std::size_t d,
                 std::uint64_t budget, std::uint64_t& nodes)
        : f_(f), keys_(f, r), r_(r), m_(m), d_(d), budget_(budget), nodes_(nodes) {
        level_.assign(keys_.size(), kUnreached);
        level_[0] = 0;
        reached_.push_back(0);
        for (std::uint64_t k = 1; k < keys_.size(); ++k)
            if (keys_.normalized(k)) candidates_.push_back(k);
    }

    std::optional<std::vector<std::uint64_t>> run() {
        // Any d-1 columns of a solution are independent, so after a change
        // of basis and a column permutation they are unit vectors.
        const std::size_t forced = std::min(d_ - 1, m_);
        for (std::size_t i = 0; i < forced; ++i) {
            const std::uint64_t u = keys_.unit(r_ - 1 - i);
            if (level_[u] != kUnreached) return std::nullopt;
            push(u);
        }
        if (extend(0)) return chosen_;
        return std::nullopt;
    }

private:
    static constexpr std::uint8_t kUnreached = 0xff;

    bool extend(std::size_t from) {
        if (chosen_.size() == m_) return true;
        if (++nodes_ > budget_) throw BudgetExceeded("exact redundancy search", nodes_, budget_);
        const std::size_t need = m_ - chosen_.size();
        for (std::size_t i = from; i + need <= candidates_.size(); ++i) {
            const std::uint64_t c = candidates_[i];
            if (level_[c] != kUnreached) continue;
            const std::size_t mark = undo_.size();
            const std::size_t reach_mark = reached_.size();
            push(c);
            if (extend(i + 1)) return true;
            pop(mark, reach_mark);
        }
        return false;
    }

    void push(std::uint64_t c) {
        chosen_.push_back(c);
        if (d_ < 3) return;
        const std::size_t limit = d_ - 3; // extend combos of <= d-3 columns
        const std::size_t n = reached_.size();
        multiples_.clear();
        for (Elem a = 1; a < f_.order(); ++a) multiples_.push_back(keys_.scale(a, c));
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t v = reached_[i];
            const std::uint8_t lv = level_[v];
            if (lv > limit) continue;
            for (const std::uint64_t ac : multiples_) {
                const std::uint64_t w = keys_.add(v, ac);
                if (level_[w] > lv + 1) {
                    if (level_[w] == kUnreached) reached_.push_back(w);
                    undo_.emplace_back(w, level_[w]);
                    level_[w] = static_cast<std::uint8_t>(lv + 1);
                }
            }
        }
    }

    void pop(std::size_t mark, std::size_t reach_mark) {
        while (undo_.size() > mark) {
            level_[undo_.back().first] = undo_.back().second;
            undo_.pop_back();
        }
        reached_.resize(reach_mark);
        chosen_.pop_back();
    }

    const Field& f_;
    KeySpace keys_;
    std::size_t r_, m_, d_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<std::uint8_t> level_;
    std::vector<std::uint64_t> reached_;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> undo_;
    std::vector<std::uint64_t> candidates_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::uint64_t> multiples_;
};

Matrix keys_to_matrix(const FieldPtr& field, std::size_t r,
                      const std::vector<std::uint64_t>& cols) {
    KeySpace keys(*field, r);
    Matrix h(field, r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) h(i, j) = keys.digit(cols[j], i);
    return h;
}

Matrix repetition_check(const FieldPtr& field, std::size_t m) {
    Matrix h(field, m - 1, m);
    const Elem minus_one = field->neg(1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        h(i, i) = 1;
        h(i, m - 1) = minus_one;
    }
    return h;
}

Matrix vandermonde_check(const FieldPtr& field, std::size_t m, std::size_t d) {
    Matrix h(field, d - 1, m);
    for (std::size_t j = 0; j < m; ++j) {
        const Elem alpha = static_cast<Elem>(j);
        for (std::size_t i = 0; i + 1 < d; ++i) h(i, j) = i == 0 ? 1 : field->pow(alpha, i);
    }
    return h;
}

Matrix hamming_check(const FieldPtr& field, std::size_t m, std::size_t r) {
    KeySpace keys(*field, r);
    std::vector<std::uint64_t> cols;
    for (std::uint64_t k = 1; cols.size() < m; ++k)
        if (keys.normalized(k)) cols.push_back(k);
    return keys_to_matrix(field, r, cols);
}

std::size_t kq_upper_counting(std::uint64_t q, std::size_t m, std::size_t d) {
    std::size_t k = m + 1 >= d ? m + 1 - d : 0; // Singleton
    // Sphere packing: q^k * V(m, t) <= q^m.
    const std::size_t t = (d - 1) / 2;
    const std::uint64_t vol = sat_add(1, low_weight_count(m, 1, t, q));
    std::size_t red = 0;
    while (sat_pow(q, red) < vol) ++red;
    k = std::min(k, m >= red ? m - red : 0);
    // Griesmer: sum_{i<k} ceil(d / q^i) <= m.
    std::size_t len = 0, g = 0;
    std::uint64_t qi = 1;
    while (g < k) {
        len += qi >= d ? 1 : static_cast<std::size_t>((d + qi - 1) / qi);
        if (len > m) break;
        ++g;
        qi = sat_mul(qi, q);
    }
    return g;
}

std::size_t kq_lower_gv(std::uint64_t q, std::size_t m, std::size_t d) {
    // A parity check with r rows exists when sum_{i<=d-2} C(m-1,i)(q-1)^i < q^r.
    const std::uint64_t vol = sat_add(1, low_weight_count(m - 1, 1, d - 2, q));
    std::size_t r = 0;
    while (sat_pow(q, r) <= vol) ++r;
    return m >= r ? m - r : 0;
}

} // namespace

std::string to_string(KSource s) {
    switch (s) {
    case KSource::analytic: return "analytic";
    case KSource::table: return "table";
    case KSource::exact_search: return "exact-search";
    case KSource::bound: return "bound";
    }
    return "unknown";
}

std::span<const KTableEntry> k_table() {
    return {kTable, std::size(kTable) - 1}; // last entry is a sentinel
}

Redundancy min_redundancy_exact(const FieldPtr& field, std::size_t m, std::size_t d,
                                std::uint64_t budget) {
    if (m == 0) throw InvalidParams("code length must be positive");
    if (d <= 1) return {0, Matrix(field, 0, m)};
    if (d == 2) return {1, Matrix::from_rows(field, {Vector(m, 1)})};
    if (d > m) return {m, Matrix::identity(field, m)};

    const std::uint64_t q = field->order();
    const std::size_t k_up = kq_upper_counting(q, m, d);
    std::uint64_t nodes = 0;
    for (std::size_t r = std::max(d - 1, m - k_up); r <= m; ++r) {
        if (r == m) return {m, Matrix::identity(field, m)};
        const std::uint64_t space = sat_pow(q, r);
        if (space > (1ull << 26) || space > budget) {
            throw BudgetExceeded("exact redundancy search (q^r keys)", space, budget);
        }
        ColumnSearch search(*field, r, m, d, budget, nodes);
        if (auto cols = search.run()) return {r, keys_to_matrix(field, r, *cols)};
    }
    return {m, Matrix::identity(field, m)};
}

KqValue kq_bounds(std::uint64_t q, std::size_t m, std::size_t d) {
    KqValue v;
    v.q = q;
    v.m = m;
    v.d = d;
    auto exact = [&](std::size_t k, KSource src, std::string note) {
        v.k_lower = v.k_upper = k;
        v.source = src;
        v.note = std::move(note);
        return v;
    };
    if (d <= 1) return exact(m, KSource::analytic, "whole space");
    if (m == 0) return exact(0, KSource::analytic, "empty length");
    if (d == 2) return exact(m - 1, KSource::analytic, "single parity check");
    if (d > m) return exact(0, KSource::analytic, "distance exceeds length");
    if (d == m) return exact(1, KSource::analytic, "repetition code");
    if (q >= m) return exact(m - d + 1, KSource::analytic, "MDS (Vandermonde)");
    if (d == 3) return exact(m - hamming_rmin(q, m), KSource::analytic, "Hamming");
    if (q == 2 && d % 2 == 0) {
        // overall parity bit: k_2(m, 2s) = k_2(m - 1, 2s - 1)
        KqValue odd = kq_bounds(q, m - 1, d - 1);
        odd.m = m;
        odd.d = d;
        odd.note += " (parity extension)";
        return odd;
    }
    for (const auto& e : k_table()) {
        if (e.q == q && e.m == m && e.d == d) {
            return exact(e.k, KSource::table, "embedded table (exact search)");
        }
    }
    v.k_upper = kq_upper_counting(q, m, d);
    if (v.k_upper == 1) return exact(1, KSource::analytic, "repetition code meets the upper bound");
    v.k_lower = std::min(kq_lower_gv(q, m, d), v.k_upper);
    v.source = KSource::bound;
    v.note = "Singleton/sphere-packing vs Gilbert-Varshamov";
    return v;
}

KqValue kq_value(std::uint64_t q, std::size_t m, std::size_t d, std::uint64_t budget) {
    KqValue v = kq_bounds(q, m, d);
    if (v.exact()) return v;
    try {
        const auto red = min_redundancy_exact(Field::standard(q), m, d, budget);
        v.k_lower = v.k_upper = m - red.r;
        v.source = KSource::exact_search;
        v.note = "backtracking search";
    } catch (const BudgetExceeded&) {
        v.note += " (exact search over budget)";
    }
    return v;
}

ParityCheck parity_check_best(const FieldPtr& field, std::size_t m, std::size_t d,
                              std::uint64_t budget) {
    if (m == 0) throw InvalidParams("code length must be positive");
    const std::uint64_t q = field->order();
    ParityCheck out{Matrix(field, 0, m), m, "empty"};
    if (d <= 1) return out;
    if (d > m) return {Matrix::identity(field, m), 0, "identity"};
    if (d == 2) return {Matrix::from_rows(field, {Vector(m, 1)}), m - 1, "single-parity"};
    if (d == m) return {repetition_check(field, m), 1, "repetition"};

    if (q >= m) {
        out = {vandermonde_check(field, m, d), m - d + 1, "mds"};
    } else if (d == 3) {
        const std::size_t r = hamming_rmin(q, m);
        out = {hamming_check(field, m, r), m - r, "hamming"};
    } else {
        try {
            auto red = min_redundancy_exact(field, m, d, budget);
            out = {std::move(red.witness), m - red.r, "search"};
        } catch (const BudgetExceeded& e) {
            throw NoConstruction(std::string("no parity check within budget: ") + e.what());
        }
    }
    if (out.k == 1) return {repetition_check(field, m), 1, "repetition"};
    if (out.k == 0) return {Matrix::identity(field, m), 0, "identity"};

    if (binomial(m, d - 1) <= 200'000 && !columns_independent(out.H, d - 1)) {
        throw std::logic_error("internal: parity check fails the column independence check");
    }
    return out;
}

bool columns_independent(const Matrix& h, std::size_t s, std::uint64_t budget) {
    s = std::min(s, h.cols()); // no kernel word of weight <= s
    if (s == 0) return true;
    if (s > h.rows()) return false;
    const std::uint64_t count = binomial(h.cols(), s);
    if (count > budget) throw BudgetExceeded("column subset check", count, budget);
    return for_each_subset(h.cols(), s, [&](const std::vector<std::size_t>& cols) {
        return rank(h.select_columns(cols)) == s;
    });
}

std::size_t covering_radius(const Matrix& g, CodeRole role, std::uint64_t budget) {
    const Matrix h = role == CodeRole::parity ? g : orthogonal_complement(g);
    const std::size_t n = h.cols();
    const std::size_t rho = rank(h);
    const std::uint64_t q = h.field()->order();
    const std::uint64_t cosets = sat_pow(q, rho);
    if (cosets > budget) throw BudgetExceeded("coset enumeration", cosets, budget);

    std::unordered_set<Vector, VectorHash> seen;
    seen.reserve(cosets);
    std::size_t radius = 0;
    std::uint64_t visited = 0;
    for (std::size_t w = 0; w <= n && seen.size() < cosets; ++w) {
        for_each_low_weight(n, w, w, q, [&](const Vector& y) {
            if (++visited > budget) throw BudgetExceeded("coset enumeration", visited, budget);
            if (seen.insert(h.apply(y)).second) radius = w;
            return seen.size() < cosets;
        });
    }
    return radius;
}

} // namespace fupdate
