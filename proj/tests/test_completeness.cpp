#include <gtest/gtest.h>

#include <cmath>

#include "liegeom/einstein.hpp"

using namespace liegeom;

// Three seeds of 2000 starts on the gamma = delta slice of U1_I. Every seed must
// find the same three classes, and each class must be hit often enough that
// missing it in 2000 independent starts has probability below 1%.
TEST(Completeness, U1IGammaEqualsDeltaSlice) {
  std::vector<std::vector<double>> reference;
  for (std::uint64_t seed : {7ULL, 1234ULL, 987654321ULL}) {
    SolveOptions o;
    o.starts = 2000;
    o.seed = seed;
    o.constraints = {"gamma=delta"};
    auto r = solve_family(Family::U1_I, o);
    ASSERT_EQ(r.solutions.size(), 3u) << "seed " << seed;
    for (const auto& s : r.solutions) {
      double p = static_cast<double>(s.hits) / o.starts;
      double miss = std::pow(1.0 - p, o.starts);
      EXPECT_LT(miss, 0.01) << "seed " << seed << " class kappa=" << s.kappa << " hits=" << s.hits;
    }
    if (reference.empty()) {
      for (const auto& s : r.solutions) reference.push_back(s.key);
    } else {
      for (std::size_t i = 0; i < reference.size(); ++i)
        EXPECT_TRUE(same_key(reference[i], r.solutions[i].key)) << "seed " << seed << " class " << i;
    }
  }
}
