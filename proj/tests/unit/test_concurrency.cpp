#include "hopfknots/cabling.hpp"
#include "hopfknots/closedform.hpp"
#include "hopfknots/jclass.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

using namespace hopfknots;

// The memoized evaluations behave as idempotent insert-only caches:
// concurrent use must stay deterministic.
TEST_CASE("shared caches are safe and deterministic under concurrent use") {
  const LaurentPoly expected =
      bracket_family(Family::Kpp, 5, 4, BracketStrategy::Closed);
  const std::size_t census_size = enumerate_family(25).size();

  std::atomic<bool> ok{true};
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&] {
      for (int rep = 0; rep < 5; ++rep) {
        for (long long a = 1; a <= 8; ++a)
          for (long long b = 1; b <= a; ++b)
            if (bracket_family(Family::K, a, b, BracketStrategy::Recursion) !=
                bracket_family(Family::K, a, b, BracketStrategy::Closed))
              ok = false;
        if (bracket_family(Family::Kpp, 5, 4, BracketStrategy::Recursion) != expected)
          ok = false;
        if (enumerate_family(25).size() != census_size) ok = false;
        if (identify(j_polynomial(KnotId::fam_k(2, 1))).matches.size() != 2) ok = false;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(ok);
}
