#include "fupdate/enumerate.hpp"
#include "fupdate/error.hpp"
#include "fupdate/matrix.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fupdate;
using namespace fut;

namespace {

std::vector<Vector> row_list(const Matrix& m) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

std::size_t brute_rank(const Matrix& m) {
    const auto sp = span_of(m.field(), row_list(m), m.cols());
    std::size_t r = 0;
    for (std::uint64_t s = 1; s < sp.size(); s *= m.field()->order()) ++r;
    return r;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("rank and rref against span sizes") {
    std::mt19937_64 g(7);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        const auto f = Field::standard(q);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + g() % 4, c = 1 + g() % 5;
            Matrix m = random_matrix(f, r, c, g);
            if (trial % 3 == 0 && r > 1) { // force a dependent row
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = f->mul(2 % q, m(0, j));
            }
            const auto e = rref(m);
            REQUIRE(e.rank == brute_rank(m));
            CHECK(rank(m) == e.rank);
            CHECK(span_of(f, row_list(e.reduced), c) == span_of(f, row_list(m), c));
            for (std::size_t i = 0; i < e.rank; ++i) {
                CHECK(e.reduced(i, e.pivots[i]) == 1);
                for (std::size_t k = 0; k < r; ++k)
                    if (k != i) CHECK(e.reduced(k, e.pivots[i]) == 0);
                for (std::size_t j = 0; j < e.pivots[i]; ++j) CHECK(e.reduced(i, j) == 0);
            }
            CHECK(std::is_sorted(e.pivots.begin(), e.pivots.end()));
        }
    }
}

TEST_CASE("kernel, complement and intersection") {
    std::mt19937_64 g(11);
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const auto f = Field::standard(q);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + g() % 4;
            const Matrix a = random_matrix(f, 1 + g() % 3, n, g);
            const Matrix b = random_matrix(f, 1 + g() % 3, n, g);
            const Matrix k = kernel_basis(a);
            CHECK(k.rows() == n - rank(a));
            CHECK(rank(k) == k.rows());
            for (std::size_t i = 0; i < k.rows(); ++i)
                CHECK(zero(mul(a, Vector(k.row(i).begin(), k.row(i).end()))));
            const Matrix perp = orthogonal_complement(a);
            CHECK(same_row_space(perp, k));

            const auto sa = span_of(f, row_list(a), n);
            const auto sb = span_of(f, row_list(b), n);
            std::vector<Vector> both;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(both));
            const Matrix inter = code_intersection(a, b);
            CHECK(span_of(f, row_list(inter), n) == both);
            CHECK(rank(inter) == inter.rows());
            for (const auto& v : sa) CHECK(row_space_contains(a, v));
        }
    }
}

TEST_CASE("inverse and solve_left") {
    std::mt19937_64 g(3);
    for (std::uint64_t q : {2u, 3u, 8u}) {
        const auto f = Field::standard(q);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + g() % 5;
            const Matrix a = random_full_rank(f, n, n, g);
            CHECK(inverse(a) * a == Matrix::identity(f, n));
            CHECK(a * inverse(a) == Matrix::identity(f, n));
            const Matrix x = random_matrix(f, 2, n, g);
            const auto sol = solve_left(a, x * a);
            REQUIRE(sol);
            CHECK(*sol == x);
        }
        Matrix sing(f, 2, 2);
        sing(0, 0) = 1;
        CHECK_THROWS_AS(inverse(sing), Singular);
        CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), DimensionMismatch);
    }
    const auto f2 = Field::prime(2);
    CHECK_FALSE(solve_left(rows(f2, {{1, 0}}), rows(f2, {{0, 1}})));
    CHECK_THROWS_AS(rows(f2, {{1, 0}}) * rows(f2, {{1, 0}}), DimensionMismatch);
}

TEST_CASE("kron and stacking") {
    const auto f = Field::prime(3);
    const Matrix c = rows(f, {{1, 2}});
    const Matrix k = kron(Matrix::identity(f, 2), c);
    CHECK(k == rows(f, {{1, 2, 0, 0}, {0, 0, 1, 2}}));
    CHECK(vstack(c, c).rows() == 2);
    CHECK(hstack(c, c) == rows(f, {{1, 2, 1, 2}}));
    CHECK(scale(c, 2) == rows(f, {{2, 1}}));
    CHECK(c.transpose().rows() == 2);
}

TEST_CASE("low-weight enumeration order and counts") {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<Vector> seen;
            for_each_low_weight(n, 1, 3, q, [&](const Vector& v) {
                seen.push_back(v);
                return true;
            });
            CHECK(seen.size() == low_weight_count(n, 1, 3, q));
            for (std::size_t i = 1; i < seen.size(); ++i)
                REQUIRE(canonical_less(seen[i - 1], seen[i]));
            std::size_t brute = 0;
            for (const auto& v : all_vectors(n, q))
                brute += weight(v) >= 1 && weight(v) <= 3;
            CHECK(brute == seen.size());
        }
    }
    std::size_t subsets = 0;
    for_each_subset(6, 3, [&](const std::vector<std::size_t>&) { return ++subsets, true; });
    CHECK(subsets == 20);
}

TEST_CASE("saturating helpers") {
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK(binomial(200, 100) == UINT64_MAX);
    CHECK(binomial(3, 5) == 0);
    CHECK(sat_pow(2, 63) == (1ull << 63));
    CHECK(sat_pow(2, 64) == UINT64_MAX);
    CHECK(sat_add(UINT64_MAX, 1) == UINT64_MAX);
    CHECK(low_weight_count(8, 1, 2, 2) == 36);
}

TEST_CASE("canonical order") {
    CHECK(canonical_less(Vector{0, 0, 1}, Vector{1, 1, 0}));  // weight first
    CHECK(canonical_less(Vector{1, 1, 0}, Vector{1, 0, 1}));  // then support
    CHECK(canonical_less(Vector{1, 2, 0}, Vector{2, 1, 0}));  // then values
    CHECK_FALSE(canonical_less(Vector{1, 0}, Vector{1, 0}));
}

}
