#include <doctest.h>

#include <vwseries/checks.hpp>

using namespace vwseries;

TEST_CASE("full verification sweep passes") {
  const auto results = run_checks();
  REQUIRE(results.size() == 12);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == "C" + std::to_string(i + 1));
    INFO(results[i].id, ": ", results[i].details);
    CHECK(results[i].pass);
    CHECK_FALSE(results[i].description.empty());
  }
}

TEST_CASE("filtering by id") {
  const auto one = run_checks("C3");
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == "C3");
  CHECK(run_checks("C99").empty());
}
