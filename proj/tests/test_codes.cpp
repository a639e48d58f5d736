#include "fupdate/codes.hpp"
#include "fupdate/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fupdate;
using namespace fut;

namespace {

std::vector<Vector> row_list(const Matrix& m) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

// distance of ker(h), by enumerating the kernel
std::size_t kernel_distance(const Matrix& h) {
    return min_distance(h.field(), row_list(kernel_basis(h)), h.cols());
}

} // namespace

TEST_SUITE("codes") {

TEST_CASE("anchor values") {
    CHECK(min_redundancy_exact(Field::standard(2), 4, 3).r == 3);
    CHECK(min_redundancy_exact(Field::standard(4), 4, 3).r == 2);
    CHECK(min_redundancy_exact(Field::standard(2), 7, 3).r == 3);
    CHECK(kq_value(2, 4, 3).k_upper == 1);
    CHECK(kq_value(4, 4, 3).k_lower == 2);
    CHECK(kq_value(2, 7, 3).exact());
    CHECK(kq_value(2, 7, 3).k_lower == 4);
    CHECK(kq_value(2, 15, 5, 0).k_upper >= 7); // open bracket still brackets BCH
}

TEST_CASE("k_q against subspace brute force") {
    struct Case {
        std::uint64_t q;
        std::size_t m_max;
    };
    for (auto [q, m_max] : {Case{2, 6}, Case{3, 4}, Case{4, 4}}) {
        const auto f = Field::standard(q);
        for (std::size_t m = 1; m <= m_max; ++m)
            for (std::size_t d = 3; d <= m + 1; ++d) {
                const auto v = kq_value(q, m, d);
                REQUIRE(v.exact());
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(d);
                CHECK(v.k_lower == brute_kq(f, m, d));
                CHECK(m - min_redundancy_exact(f, m, d).r == v.k_lower);
            }
    }
}

TEST_CASE("closed forms for small distance") {
    for (std::uint64_t q : {2u, 3u, 5u})
        for (std::size_t m = 1; m <= 9; ++m) {
            CHECK(kq_value(q, m, 1).k_lower == m);
            CHECK(kq_value(q, m, 2).k_lower == m - 1);
            CHECK(kq_value(q, m, m + 1).k_upper == 0);
        }
}

TEST_CASE("brackets contain the exact value") {
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::size_t m = 4; m <= 9; ++m)
            for (std::size_t d = 3; d < m; ++d) {
                const auto b = kq_bounds(q, m, d);
                const auto v = kq_value(q, m, d, 3'000'000);
                CHECK(b.k_lower <= v.k_lower);
                CHECK(v.k_upper <= b.k_upper);
                CHECK(v.k_lower <= v.k_upper);
            }
}

TEST_CASE("embedded table entries") {
    const auto table = k_table();
    for (const auto& e : table) {
        CAPTURE(e.q);
        CAPTURE(int(e.m));
        CAPTURE(int(e.d));
        const auto v = kq_bounds(e.q, e.m, e.d);
        CHECK(v.exact());
        CHECK(v.k_lower == e.k);
    }
    // published binary values
    CHECK(kq_bounds(2, 8, 4).k_lower == 4);  // extended Hamming
    CHECK(kq_bounds(2, 10, 5).k_lower == 3);
    CHECK(kq_bounds(2, 11, 5).k_lower == 4);
    CHECK(kq_bounds(2, 12, 4).k_lower == 7);
}

TEST_CASE("parity checks certify their distance") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u}) {
        const auto f = Field::standard(q);
        for (std::size_t m = 1; m <= 7; ++m)
            for (std::size_t d = 1; d <= m + 1; ++d) {
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(d);
                const auto pc = parity_check_best(f, m, d);
                REQUIRE(pc.H.cols() == m);
                CHECK(pc.H.rows() == m - pc.k);
                CHECK(rank(pc.H) == pc.H.rows());
                if (pc.k > 0 && ipow(q, pc.k) <= 5000) CHECK(kernel_distance(pc.H) >= d);
                const auto v = kq_value(q, m, d);
                if (v.exact()) CHECK(pc.k == v.k_lower);
                if (d >= 2 && d - 1 <= m) CHECK(columns_independent(pc.H, d - 1));
            }
    }
}

TEST_CASE("canonical parity checks") {
    const auto f2 = Field::standard(2);
    CHECK(parity_check_best(f2, 5, 5).H ==
          rows(f2, {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}}));
    CHECK(parity_check_best(f2, 4, 2).H == rows(f2, {{1, 1, 1, 1}}));
    CHECK(parity_check_best(f2, 3, 4).H == Matrix::identity(f2, 3));
    CHECK(parity_check_best(f2, 3, 4).k == 0);
    const auto f3 = Field::standard(3);
    // repetition over GF(3): [I | -1]
    CHECK(parity_check_best(f3, 3, 3).H == rows(f3, {{1, 0, 2}, {0, 1, 2}}));
    CHECK(parity_check_best(Field::standard(4), 4, 3).construction == "mds");
    CHECK(parity_check_best(f2, 7, 3).construction == "hamming");
}

TEST_CASE("column independence against brute force") {
    std::mt19937_64 g(21);
    for (std::uint64_t q : {2u, 3u}) {
        const auto f = Field::standard(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + g() % 3, m = 2 + g() % 4, s = 1 + g() % 3;
            const Matrix h = random_matrix(f, r, m, g);
            // every s columns independent iff no nonzero kernel word of weight <= s
            bool brute = true;
            for (const auto& x : all_vectors(m, q))
                if (!zero(x) && weight(x) <= s && zero(mul(h, x))) brute = false;
            CHECK(columns_independent(h, s) == brute);
        }
    }
}

TEST_CASE("covering radius against brute force") {
    std::mt19937_64 g(22);
    for (std::uint64_t q : {2u, 3u}) {
        const auto f = Field::standard(q);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t len = 2 + g() % 4;
            const Matrix gen = random_matrix(f, 1 + g() % len, len, g);
            CHECK(covering_radius(gen, CodeRole::generator) ==
                  brute_covering_radius(f, row_list(gen), len));
            const Matrix par = random_matrix(f, 1 + g() % len, len, g);
            CHECK(covering_radius(par, CodeRole::parity) ==
                  brute_covering_radius(f, row_list(kernel_basis(par)), len));
        }
    }
    const auto f2 = Field::standard(2);
    CHECK(covering_radius(parity_check_best(f2, 7, 3).H, CodeRole::parity) == 1); // perfect
    CHECK(covering_radius(rows(f2, {{1, 1, 1}}), CodeRole::generator) == 1);
}

TEST_CASE("budgets and errors") {
    CHECK_THROWS_AS(min_redundancy_exact(Field::standard(2), 12, 5, 10), BudgetExceeded);
    CHECK_THROWS_AS(min_redundancy_exact(Field::standard(2), 0, 3), InvalidParams);
    CHECK_FALSE(kq_value(2, 12, 5, 10).note.empty());
    CHECK(to_string(KSource::exact_search) == "exact-search");
}

}
