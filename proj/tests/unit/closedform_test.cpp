#include <doctest.h>

#include <kissing/closedform.hpp>
#include <kissing/errors.hpp>
#include <kissing/search.hpp>

#include <stdexcept>

using namespace kissing;

TEST_CASE("planar closed form") {
  CHECK(epsilon2_squared(1).str() == "1/2");
  CHECK(epsilon2_squared(2).str() == "1/5");
  CHECK(epsilon2_squared(3).str() == "1/13");
  CHECK(epsilon2_squared(4).str() == "1/25");
  CHECK(epsilon2_squared(10).str() == "1/181");
  CHECK_THROWS_AS(epsilon2_squared(0), std::invalid_argument);
  CHECK_THROWS_AS(epsilon2_squared(-3), std::invalid_argument);
}

TEST_CASE("planar quotient scan hits the closed form") {
  CHECK(min_quotient_2d_squared(1).str() == "1/2");
  CHECK(min_quotient_2d_squared(2).str() == "1/5");
  CHECK(min_quotient_2d_squared(3).str() == "1/13");
  CHECK(min_quotient_2d_squared(4).str() == "1/25");
  CHECK(min_quotient_2d_squared(5).str() == "1/41");
  CHECK(min_quotient_2d_squared(6).str() == "1/61");
  for (int k = 1; k <= 6; ++k)
    CHECK(min_quotient_2d_squared(k) == epsilon2_squared(k));
  CHECK_THROWS_AS(min_quotient_2d_squared(0), std::invalid_argument);
}

TEST_CASE("planar value, quotient scan, and search agree") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const SearchResult r = epsilon(2, k);
    CHECK(r.certified);
    CHECK(r.min_squared_distance == epsilon2_squared(k));
    CHECK(r.min_squared_distance == min_quotient_2d_squared(k));
  }
}

TEST_CASE("spatial quotient scan") {
  CHECK(min_quotient_3d_squared(1).str() == "1/6");
  CHECK(min_quotient_3d_squared(2).str() == "1/65");
  CHECK(min_quotient_3d_squared(3).str() == "1/418");
  CHECK_THROWS_AS(min_quotient_3d_squared(0), std::invalid_argument);
  CHECK_THROWS_AS(min_quotient_3d_squared(4), ResourceGuardError);
}

TEST_CASE("spatial quotient bounds the spatial value from below") {
  // Attained at k = 1...
  const SearchResult r1 = epsilon(3, 1);
  CHECK(min_quotient_3d_squared(1) == r1.min_squared_distance);
  // ...but strictly below from k = 2 on: the box scan drops the
  // lattice-polytope structure, so 1/65 < 1/50.
  const SearchResult r2 = epsilon(3, 2);
  CHECK(min_quotient_3d_squared(2) < r2.min_squared_distance);
  const SearchResult r3 = epsilon(3, 3);
  CHECK(min_quotient_3d_squared(3) < r3.min_squared_distance);
}

TEST_CASE("segment pair closed form") {
  CHECK(segment_pair_3k_squared(2).str() == "1/50");
  CHECK(segment_pair_3k_squared(3).str() == "1/286");
  CHECK(segment_pair_3k_squared(4).str() == "1/1050");
  CHECK(segment_pair_3k_squared(5).str() == "1/2870");
  CHECK(segment_pair_3k_squared(6).str() == "1/6466");
  CHECK(segment_pair_3k_squared(7).str() == "1/12750");
  CHECK(segment_pair_3k_squared(8).str() == "1/22826");
  CHECK_THROWS_AS(segment_pair_3k_squared(1), std::invalid_argument);
}

TEST_CASE("segment pair matches the search except at k = 3") {
  // Equality at k = 2 and k = 4; at k = 3 an exceptional pair wins,
  // so the segment value only bounds from above: 1/286 > 1/299.
  CHECK(segment_pair_3k_squared(2) == epsilon(3, 2).min_squared_distance);
  const SearchResult r3 = epsilon(3, 3);
  CHECK(segment_pair_3k_squared(3) > r3.min_squared_distance);
  CHECK(r3.min_squared_distance.str() == "1/299");
  CHECK(segment_pair_3k_squared(4) == epsilon(3, 4).min_squared_distance);
}
