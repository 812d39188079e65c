#include <doctest.h>

#include <cstdio>
#include <vector>

#include "pasym/errors.hpp"
#include "pasym/partition_table.hpp"
#include "test_helpers.hpp"

using namespace pasym;

namespace {

// Independent oracle: count partitions by dynamic programming over part
// sizes (no pentagonal recurrence involved).
std::vector<mpz_class> partitions_by_enumeration(std::size_t n_max) {
  std::vector<mpz_class> count(n_max + 1, mpz_class(0));
  count[0] = 1;
  for (std::size_t part = 1; part <= n_max; ++part)
    for (std::size_t total = part; total <= n_max; ++total)
      count[total] += count[total - part];
  return count;
}

}  // namespace

TEST_CASE("degenerate table n_max = 0") {
  PartitionTable table(0);
  CHECK(table.n_max() == 0);
  CHECK(table.at(0) == 1);
  CHECK_THROWS_AS(table.at(1), RangeError);
}

TEST_CASE("pentagonal table matches enumeration up to 60") {
  PartitionTable table(60);
  auto brute = partitions_by_enumeration(60);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(table.at(n) == brute[n]);
  CHECK(table.at(0) == 1);
  CHECK(table.at(1) == 1);
  CHECK(table.at(10) == 42);
  CHECK(table.at(60) == 966467);
}

TEST_CASE("table is strictly increasing from n = 1") {
  PartitionTable table(400);
  for (std::size_t n = 2; n <= 400; ++n) CHECK(table.at(n) > table.at(n - 1));
}

TEST_CASE("rebuilding a prefix reproduces identical integers") {
  PartitionTable big(300);
  PartitionTable small(120);
  for (std::size_t n = 0; n <= 120; ++n) CHECK(big.at(n) == small.at(n));
}

TEST_CASE("exact quotients") {
  PartitionTable table(20);
  auto ctx = pasym_test::ctx256();
  CHECK(table.exact_quotient(1, 1) == 2);            // p(2)/p(1)
  CHECK(table.exact_quotient(5, 2) == mpq_class(15, 7));  // p(7)/p(5)
  CHECK(table.quotient(1, 1, ctx.bits) == Real::from_long(2, ctx.bits));
  CHECK_THROWS_AS(table.exact_quotient(10, 0), DomainError);
  CHECK_THROWS_AS(table.exact_quotient(19, 5), RangeError);
}

TEST_CASE("delta sign") {
  PartitionTable table(60);
  CHECK(table.delta_sign(1, 1, 1) == 0);   // p(1) - p(0) = 0
  CHECK(table.delta_sign(2, 1, 26) > 0);   // second difference positive
  CHECK(table.delta_sign(1, 2, 4) > 0);    // p(4) - p(2) = 3
  CHECK_THROWS_AS(table.delta_sign(2, 3, 5), RangeError);
  CHECK_THROWS_AS(table.delta_sign(0, 1, 5), DomainError);
}

TEST_CASE("log-concavity for 26 <= n <= 1000") {
  PartitionTable table(1001);
  for (std::size_t n = 26; n <= 1000; ++n) CHECK(table.log_concave_at(n));
  // known failure below the threshold: p(1)^2 = 1 < p(0) p(2) = 2
  CHECK_FALSE(table.log_concave_at(1));
}

TEST_CASE("binary cache round trip") {
  PartitionTable table(137);
  std::string path = "pasym_cache_test.bin";
  table.save(path);
  PartitionTable loaded = PartitionTable::load(path);
  REQUIRE(loaded.n_max() == 137);
  for (std::size_t n = 0; n <= 137; ++n) CHECK(loaded.at(n) == table.at(n));
  std::remove(path.c_str());
}
