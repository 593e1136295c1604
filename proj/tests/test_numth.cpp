#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wps/numth.hpp"

using namespace wps;

TEST_CASE("factorize small values") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(12).factors == std::map<Weight, unsigned>{{2, 2}, {3, 1}});
  const auto f360 = factorize(360);
  CHECK(f360.factors == std::map<Weight, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(f360.value() == 360);
  CHECK(factorize(4294967291LL).factors ==
        std::map<Weight, unsigned>{{4294967291ULL, 1}});
}

TEST_CASE("factorize rejects non-positive input") {
  CHECK_THROWS_AS(factorize(0), InvalidInput);
  CHECK_THROWS_AS(factorize(-6), InvalidInput);
  CHECK_THROWS_AS(factorize_weight(0), InvalidInput);
}

TEST_CASE("factorize round trip, sampled up to 10^6") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto m = dist(rng);
    const auto f = factorize(m);
    REQUIRE(f.value() == m);
    for (const auto& [p, e] : f.factors) {
      CHECK(is_prime(p));
      CHECK(e >= 1);
    }
  }
}

TEST_CASE("p_part") {
  CHECK(p_part(2, 2) == 2);
  CHECK(p_part(3, 2) == 1);
  CHECK(p_part(12, 3) == oracle::p_part(12, 3));
  CHECK(p_part(12, 3) == 3);
  CHECK(valuation(96, 2) == 5);
  CHECK_THROWS_AS(p_part(12, 4), InvalidInput);
  CHECK_THROWS_AS(p_part(12, 1), InvalidInput);
  CHECK_THROWS_AS(p_part(0, 2), InvalidInput);
}

TEST_CASE("p_part is multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Weight> dist(1, 10000);
  const Weight primes[] = {2, 3, 5, 7, 11, 13, 97};
  for (int trial = 0; trial < 5000; ++trial) {
    const Weight a = dist(rng);
    const Weight b = dist(rng);
    for (Weight p : primes) {
      REQUIRE(p_part(a * b, p) == p_part(a, p) * p_part(b, p));
      CHECK((a / p_part(a, p)) % p != 0);
    }
  }
}

TEST_CASE("PrimeSet validation") {
  CHECK_THROWS_AS(PrimeSet({2, 4}), InvalidInput);
  CHECK_THROWS_AS(PrimeSet({3, 3}), InvalidInput);
  PrimeSet P{5, 2};
  CHECK(std::vector<Weight>(P.begin(), P.end()) == std::vector<Weight>{2, 5});
  CHECK(P.supports(BigInt(50)));
  CHECK_FALSE(P.supports(BigInt(30)));
  CHECK(P.supports(BigInt(1)));
}

TEST_CASE("PLocalRational keeps lowest terms") {
  PLocalRational x(BigInt(6), BigInt(-4));
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x.to_string() == "-3/2");
  CHECK(PLocalRational::parse(" -4/9 ") == PLocalRational(BigInt(-4), BigInt(9)));
  CHECK(PLocalRational::parse("7") == PLocalRational(7));
  CHECK(PLocalRational::parse("0/5").to_string() == "0/1");
  CHECK_THROWS_AS(PLocalRational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(PLocalRational::parse("1/-2"), InvalidInput);
  CHECK_THROWS_AS(PLocalRational::parse("x/2"), InvalidInput);
  CHECK_THROWS_AS(PLocalRational::parse(""), InvalidInput);
}

TEST_CASE("is_p_local_unit") {
  CHECK(is_p_local_unit(PLocalRational(BigInt(5), BigInt(3)), PrimeSet{2}));
  CHECK_FALSE(is_p_local_unit(PLocalRational(2), PrimeSet{2}));
  CHECK_THROWS_AS(is_p_local_unit(PLocalRational(BigInt(3), BigInt(2)), PrimeSet{2}),
                  NotAnElement);
  CHECK_FALSE(is_p_local_unit(PLocalRational(0), PrimeSet{2}));
  CHECK(is_p_local_unit(PLocalRational(0), PrimeSet{}) == true);
}

TEST_CASE("products of P-local units are units") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
  std::uniform_int_distribution<std::int64_t> den(1, 5000);
  const PrimeSet P{2, 3, 7};
  int seen = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    PLocalRational a(BigInt(num(rng)), BigInt(den(rng)));
    PLocalRational b(BigInt(num(rng)), BigInt(den(rng)));
    if (!is_p_local(a, P) || !is_p_local(b, P)) continue;
    if (is_p_local_unit(a, P) && is_p_local_unit(b, P)) {
      ++seen;
      REQUIRE(is_p_local_unit(a * b, P));
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("unit_split examples") {
  auto s = unit_split(PLocalRational(BigInt(6), BigInt(5)), PrimeSet{2, 3});
  CHECK(s.unit_part.to_string() == "1/5");
  CHECK(s.prime_part.to_string() == "6/1");

  s = unit_split(PLocalRational(1), PrimeSet{2, 3});
  CHECK(s.unit_part == PLocalRational(1));
  CHECK(s.prime_part == PLocalRational(1));

  s = unit_split(PLocalRational(BigInt(-4), BigInt(9)), PrimeSet{2});
  CHECK(s.unit_part.to_string() == "-1/9");
  CHECK(s.prime_part.to_string() == "4/1");

  CHECK_THROWS_AS(unit_split(PLocalRational(0), PrimeSet{2}), InvalidInput);
}

TEST_CASE("unit_split agrees with reconstruction by factoring") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> mag(1, 100000);
  std::vector<Weight> small_primes;
  for (Weight p = 2; p <= 97; ++p) {
    if (is_prime(p)) small_primes.push_back(p);
  }
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<oracle::U> chosen;
    for (Weight p : small_primes) {
      if (rng() % 3 == 0) chosen.insert(p);
    }
    const PrimeSet P(std::vector<Weight>(chosen.begin(), chosen.end()));
    const auto n = mag(rng);
    const auto d = mag(rng);
    const bool negative = rng() % 2;
    const PLocalRational x(negative ? -BigInt(n) : BigInt(n), BigInt(d));

    const auto [u, v] = unit_split(x, P);
    const auto expect = oracle::split_by_factoring(
        static_cast<oracle::U>(abs(x.numerator())),
        static_cast<oracle::U>(x.denominator()), chosen);
    const BigInt sign = negative ? -1 : 1;
    REQUIRE(u == PLocalRational(sign * expect.unit_num, expect.unit_den));
    REQUIRE(v == PLocalRational(expect.prime_num, expect.prime_den));
  }
}
