// Regenerates src/k_table.inc: exact k_q(m, d) for q in {2, 3, 4}, m <= 12,
// skipping cases kq_bounds already settles in closed form.
//
//   gen_k_table [budget [q]] > src/k_table.inc

#include "fupdate/codes.hpp"
#include "fupdate/error.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace fupdate;
    const std::uint64_t budget = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 50'000'000;
    const std::uint64_t only = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
    for (std::uint64_t q : {2u, 3u, 4u}) {
        if (only && q != only) continue;
        const auto field = Field::standard(q);
        for (std::size_t m = 4; m <= 12; ++m) {
            for (std::size_t d = 4; d < m; ++d) {
                const KqValue known = kq_bounds(q, m, d);
                if (known.source == KSource::analytic) continue;
                const auto t0 = std::chrono::steady_clock::now();
                try {
                    const auto red = min_redundancy_exact(field, m, d, budget);
                    const double secs = std::chrono::duration<double>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count();
                    std::cout << "    {" << q << ", " << m << ", " << d << ", " << (m - red.r)
                              << "}, // " << secs << " s" << std::endl;
                } catch (const BudgetExceeded&) {
                    std::cerr << "skip q=" << q << " m=" << m << " d=" << d << std::endl;
                }
            }
        }
    }
}
