#include "fupdate/error.hpp"
#include "fupdate/fic.hpp"
#include "fupdate/io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fupdate;
using namespace fut;

namespace {

std::set<Vector> brute_fic(const FICProblem& f) {
    std::set<Vector> out;
    for (const auto& y : all_vectors(f.n(), f.field()->order())) {
        for (const auto& u : f.users()) {
            bool off = true;
            for (auto i : u.side_info) off = off && y[i] == 0;
            if (off && !zero(mul(*u.demand, y))) {
                out.insert(y);
                break;
            }
        }
    }
    return out;
}

FICUser user(std::vector<std::size_t> x, Matrix a) {
    return {std::move(x), std::make_shared<const Matrix>(std::move(a))};
}

} // namespace

TEST_SUITE("fic") {

TEST_CASE("reduction users") {
    const auto f2 = Field::standard(2);
    const auto small = from_function_update(FunctionUpdateProblem(rows(f2, {{1, 1, 0}}), 1));
    REQUIRE(small.users().size() == 3);
    CHECK(small.users()[0].side_info == std::vector<std::size_t>{2});
    CHECK(small.users()[1].side_info == std::vector<std::size_t>{1});
    CHECK(small.users()[2].side_info == std::vector<std::size_t>{0});

    const auto tiny = from_function_update(FunctionUpdateProblem(rows(f2, {{1, 1}}), 1));
    REQUIRE(tiny.users().size() == 1);
    CHECK(tiny.users()[0].side_info.empty());

    const auto ex1 = from_function_update(load_problem(fixture("example1_problem.json")));
    CHECK(ex1.users().size() == 28);
    for (const auto& u : ex1.users()) {
        CHECK(u.side_info.size() == 6);
        CHECK(u.demand == ex1.users().front().demand);
    }
}

TEST_CASE("interference equals the update interference") {
    std::mt19937_64 g(51);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_problem(g, {2, 3}, 1, 4, 6, 1 + (trial % 4 == 0));
        const auto f = from_function_update(p);
        const auto fi = enumerate_fic_interference(f);
        CHECK(fi == enumerate_interference(p).deltas);
        CHECK(std::set<Vector>(fi.begin(), fi.end()) == brute_fic(f));
    }
}

TEST_CASE("heterogeneous users") {
    std::mt19937_64 g(52);
    for (int trial = 0; trial < 40; ++trial) {
        const auto field = Field::standard(trial % 2 ? 3 : 2);
        const std::size_t n = 2 + g() % 4;
        FICProblem f(field, n, {});
        std::set<Vector> prev;
        for (int k = 0; k < 3; ++k) {
            std::vector<std::size_t> x;
            for (std::size_t i = 0; i < n; ++i)
                if (g() % 2) x.push_back(i);
            f.add_user(user(x, random_full_rank(field, 1 + g() % 2, n, g)));
            const auto fi = enumerate_fic_interference(f);
            const std::set<Vector> now(fi.begin(), fi.end());
            CHECK(now == brute_fic(f));
            CHECK(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
            for (std::size_t i = 1; i < fi.size(); ++i) CHECK(canonical_less(fi[i - 1], fi[i]));
            prev = now;
        }
    }
}

TEST_CASE("trivial users") {
    const auto f3 = Field::standard(3);
    const FICProblem all(f3, 3, {user({0, 1, 2}, Matrix::identity(f3, 3))});
    CHECK(enumerate_fic_interference(all).empty());
    CHECK(is_valid_fic_encoder(all, Matrix(f3, 1, 3)).valid);
    const FICProblem none(f3, 3, {user({}, Matrix::identity(f3, 3))});
    CHECK(enumerate_fic_interference(none).size() == 26);
    CHECK(is_valid_fic_encoder(none, Matrix::identity(f3, 3)).valid);
    const auto bad = is_valid_fic_encoder(none, Matrix(f3, 2, 3));
    CHECK_FALSE(bad.valid);
    CHECK(*bad.witness == Vector{1, 0, 0});
    CHECK_THROWS(FICProblem(f3, 3, {user({5}, Matrix::identity(f3, 3))}));
}

TEST_CASE("validity verdicts agree with the update problem") {
    std::mt19937_64 g(53);
    int invalid = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_problem(g, {2, 3}, 2, 4, 6, 1);
        const auto f = from_function_update(p);
        const auto fi = enumerate_fic_interference(f);
        const auto sets = enumerate_interference(p);
        for (int k = 0; k < 20; ++k) {
            const Matrix s = random_matrix(p.field(), 1 + g() % p.m(), p.m(), g);
            const Matrix h = s * p.A();
            const auto a = is_valid_encoder(p, sets, s);
            const auto b = is_valid_fic_encoder(fi, h);
            REQUIRE(a.valid == b.valid);
            if (!b.valid) {
                ++invalid;
                CHECK(*b.witness == *a.witness_delta);
            }
        }
    }
    CHECK(invalid > 0);
}

TEST_CASE("budget") {
    std::mt19937_64 g(54);
    const auto p = FunctionUpdateProblem(random_full_rank(Field::standard(2), 4, 60, g), 3);
    CHECK_THROWS_AS(from_function_update(p, 1000), BudgetExceeded);
}

}
