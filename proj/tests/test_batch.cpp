#include "molop/batch.hpp"

#include "molop/rng.hpp"
#include "molop/scheduler.hpp"
#include "support/reference.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace molop;

TEST_CASE("parallel batch centroids equal the serial ones bit for bit") {
    Rng rng(404);
    const DomainScale scale;
    const DomainGrid grid;
    std::vector<IT2TrapezoidFOU> fous;
    for (int i = 0; i < 64; ++i)
        fous.push_back(reference::random_fou(rng, scale));
    const auto serial = batch::centroids(fous, grid, Exec::Serial);
    const auto parallel = batch::centroids(fous, grid, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].left == parallel[i].left);
        CHECK(serial[i].right == parallel[i].right);
    }
}

TEST_CASE("parallel similarity matrix equals the serial one bit for bit") {
    Rng rng(405);
    const DomainScale scale;
    const DomainGrid grid;
    std::vector<IT2TrapezoidFOU> a, b;
    for (int i = 0; i < 12; ++i)
        a.push_back(reference::random_fou(rng, scale));
    for (int i = 0; i < 9; ++i)
        b.push_back(reference::random_fou(rng, scale));
    const auto serial = batch::similarity_matrix(a, b, grid, Exec::Serial);
    const auto parallel = batch::similarity_matrix(a, b, grid, Exec::Parallel);
    CHECK(serial == parallel);
}

TEST_CASE("exceptions from parallel items reach the caller") {
    CHECK_THROWS_AS(batch::for_each_index(16, Exec::Parallel,
                                          [](std::size_t i) {
                                              if (i == 7)
                                                  throw std::runtime_error("boom");
                                          }),
                    std::runtime_error);
    CHECK_THROWS_AS(batch::for_each_index(4, Exec::Serial,
                                          [](std::size_t) { throw std::runtime_error("boom"); }),
                    std::runtime_error);
}
