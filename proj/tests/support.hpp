#pragma once

// Brute-force reference implementations. They only use field arithmetic and
// walk the whole space, so they share no logic with the library's searches.

#include "fupdate/gf.hpp"
#include "fupdate/matrix.hpp"
#include "fupdate/problem.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fut {

using fupdate::Elem;
using fupdate::FieldPtr;
using fupdate::Matrix;
using fupdate::Vector;

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// i-th vector of F_q^n, first coordinate least significant
inline Vector nth_vector(std::uint64_t i, std::size_t n, std::uint64_t q) {
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = static_cast<Elem>(i % q);
        i /= q;
    }
    return v;
}

inline std::vector<Vector> all_vectors(std::size_t n, std::uint64_t q) {
    std::vector<Vector> out;
    const auto total = ipow(q, n);
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(nth_vector(i, n, q));
    return out;
}

inline std::size_t weight(const Vector& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e; }));
}

inline bool zero(const Vector& v) { return weight(v) == 0; }

inline Vector mul(const Matrix& a, const Vector& x) {
    const auto& f = *a.field();
    Vector y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
    return y;
}

inline Vector add(const fupdate::Field& f, const Vector& a, const Vector& b) {
    Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
    return c;
}

// All combinations of the rows of g (q^k of them).
inline std::vector<Vector> span_of(const FieldPtr& f, const std::vector<Vector>& g,
                                   std::size_t len) {
    std::vector<Vector> out{Vector(len, 0)};
    for (const auto& row : g) {
        std::vector<Vector> next;
        for (const auto& v : out)
            for (Elem c = 0; c < f->order(); ++c) {
                Vector w = v;
                for (std::size_t i = 0; i < len; ++i) w[i] = f->add(w[i], f->mul(c, row[i]));
                next.push_back(w);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct BruteSets {
    std::set<Vector> deltas;
    std::set<Vector> syndromes;
};

inline BruteSets brute_interference(const fupdate::FunctionUpdateProblem& p) {
    BruteSets s;
    for (const auto& y : all_vectors(p.n(), p.q())) {
        if (zero(y) || weight(y) > 2 * p.epsilon()) continue;
        auto z = mul(p.A(), y);
        if (zero(z)) continue;
        s.deltas.insert(y);
        s.syndromes.insert(z);
    }
    return s;
}

// S is valid iff no two images A e1, A e2 (wt <= eps) collide under S unless equal.
inline bool brute_valid(const fupdate::FunctionUpdateProblem& p, const Matrix& s) {
    std::vector<Vector> images;
    for (const auto& e : all_vectors(p.n(), p.q()))
        if (weight(e) <= p.epsilon()) images.push_back(mul(p.A(), e));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::set<Vector> seen;
    for (const auto& z : images)
        if (!seen.insert(mul(s, z)).second) return false;
    return true;
}

inline std::size_t min_distance(const FieldPtr& f, const std::vector<Vector>& g, std::size_t len) {
    std::size_t d = len + 1;
    for (const auto& c : span_of(f, g, len))
        if (!zero(c)) d = std::min(d, weight(c));
    return d;
}

// Largest k with some k-dim subspace of F^m whose nonzero vectors all avoid
// `bad` (bad given as a predicate). Exhausts increasing tuples of vectors.
template <class Bad>
std::size_t brute_max_avoiding(const FieldPtr& f, std::size_t m, Bad&& bad) {
    const auto vs = all_vectors(m, f->order());
    std::size_t best = 0;
    std::vector<Vector> basis;
    std::vector<Vector> members{Vector(m, 0)};
    auto rec = [&](auto&& self, std::size_t start) -> void {
        best = std::max(best, basis.size());
        if (best == m) return;
        for (std::size_t i = start; i < vs.size(); ++i) {
            const auto& v = vs[i];
            if (std::binary_search(members.begin(), members.end(), v)) continue;
            auto old = members;
            std::vector<Vector> grown;
            bool ok = true;
            for (const auto& w : old) {
                for (Elem c = 1; c < f->order() && ok; ++c) {
                    Vector x = w;
                    for (std::size_t j = 0; j < m; ++j) x[j] = f->add(x[j], f->mul(c, v[j]));
                    if (bad(x)) ok = false;
                    grown.push_back(x);
                }
                if (!ok) break;
            }
            if (!ok) continue;
            for (auto& w : old) grown.push_back(w);
            std::sort(grown.begin(), grown.end());
            grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
            basis.push_back(v);
            members = std::move(grown);
            self(self, i + 1);
            members = std::move(old);
            basis.pop_back();
            if (best == m) return;
        }
    };
    rec(rec, 1);
    return best;
}

inline std::size_t brute_kq(const FieldPtr& f, std::size_t m, std::size_t d) {
    return brute_max_avoiding(f, m, [&](const Vector& x) { return weight(x) < d; });
}

inline std::size_t brute_lopt(const fupdate::FunctionUpdateProblem& p) {
    const auto sets = brute_interference(p);
    const auto dim = brute_max_avoiding(p.field(), p.m(), [&](const Vector& x) {
        return sets.syndromes.contains(x);
    });
    return p.m() - dim;
}

// max over x of the distance from x to the row space of g
inline std::size_t brute_covering_radius(const FieldPtr& f, const std::vector<Vector>& g,
                                         std::size_t len) {
    const auto code = span_of(f, g, len);
    std::size_t r = 0;
    for (const auto& x : all_vectors(len, f->order())) {
        std::size_t best = len;
        for (const auto& c : code) {
            std::size_t dist = 0;
            for (std::size_t i = 0; i < len; ++i) dist += x[i] != c[i];
            best = std::min(best, dist);
        }
        r = std::max(r, best);
    }
    return r;
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& g) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(g() % f->order());
    return m;
}

inline Matrix random_full_rank(const FieldPtr& f, std::size_t r, std::size_t c,
                               std::mt19937_64& g) {
    while (true) {
        Matrix m = random_matrix(f, r, c, g);
        if (fupdate::rank(m) == r) return m;
    }
}

inline Matrix rows(const FieldPtr& f, std::vector<std::vector<Elem>> r) {
    return Matrix::from_rows(f, r);
}

// q from `qs`, m in [m_lo, m_hi], n in [m, n_hi]
inline fupdate::FunctionUpdateProblem random_problem(std::mt19937_64& g,
                                                     std::vector<std::uint64_t> qs,
                                                     std::size_t m_lo, std::size_t m_hi,
                                                     std::size_t n_hi, std::size_t eps) {
    const auto f = fupdate::Field::standard(qs[g() % qs.size()]);
    const std::size_t m = m_lo + g() % (m_hi - m_lo + 1);
    const std::size_t n = m + g() % (n_hi - m + 1);
    return {random_full_rank(f, m, n, g), eps};
}

#ifdef FUPDATE_FIXTURE_DIR
inline std::string fixture(const std::string& name) {
    return std::string(FUPDATE_FIXTURE_DIR) + "/" + name;
}
#endif

} // namespace fut
