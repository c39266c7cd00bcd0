#include <doctest.h>

#include <stdexcept>

#include "gfdiag/claims.hpp"
#include "gfdiag/report_json.hpp"

using namespace gfdiag;

namespace {

bool contains_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (contains_float(v)) return true;
  return false;
}

const ClaimReport& by_id(const std::vector<ClaimReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("catalog ids are unique and sorted") {
  const auto& cat = claim_catalog();
  REQUIRE(cat.size() >= 20);
  for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id < cat[i].id);
}

TEST_CASE("run_claim") {
  auto fib = run_claim("fib.closed_form", 200);
  REQUIRE(fib.size() == 1);
  CHECK(fib[0].status == ClaimStatus::pass);
  CHECK(fib[0].lhs == fib[0].rhs);

  auto trib = run_claim("trib.diag.printed", 60);
  REQUIRE(trib.size() == 2);
  CHECK(by_id(trib, "trib.diag.printed[shifted]").status == ClaimStatus::pass);
  CHECK(by_id(trib, "trib.diag.printed[unit]").status == ClaimStatus::fail);

  CHECK(run_claim("trib.diag.printed[unit]", 10).size() == 1);
  CHECK_THROWS_AS(run_claim("no.such"), std::out_of_range);
}

TEST_CASE("failures carry witnesses") {
  auto d = run_claim("fib.diag.printed", 50);
  REQUIRE(d.size() == 1);
  CHECK(d[0].status == ClaimStatus::fail);
  REQUIRE(d[0].first_mismatch);
  CHECK(*d[0].first_mismatch == 2);
  CHECK(d[0].lhs == "1");
  CHECK(d[0].rhs == "2");
  CHECK(d[0].matches_expectation());

  auto h = run_claim("fib.H.printed", 50);
  CHECK(h[0].status == ClaimStatus::fail);
  CHECK(h[0].first_mismatch.has_value());
}

TEST_CASE("reports are deterministic, order independent and monotone in N") {
  auto first = run_all(60);
  auto second = run_all(60);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].same_outcome(second[i]));

  for (const auto& info : claim_catalog()) {
    auto single = run_claim(info.id, 60);
    REQUIRE(single.size() == 1);
    CHECK(single[0].same_outcome(by_id(first, info.id)));
  }

  auto small = run_all(20);
  for (const auto& r : small) {
    const ClaimReport& big = by_id(first, r.id);
    if (r.status == ClaimStatus::fail) {
      CHECK(big.status == ClaimStatus::fail);
      CHECK(big.first_mismatch == r.first_mismatch);
    }
  }
  CHECK(all_as_expected(first));
}

TEST_CASE("json serialization has no floating point") {
  auto reports = run_all(30);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  nlohmann::json env = envelope("verify", 0, {{"claims", list}});
  CHECK_FALSE(contains_float(env));
  const auto& first = env["result"]["claims"][0];
  for (const char* field : {"id", "status", "first_mismatch", "lhs", "rhs"}) CHECK(first.contains(field));
}
