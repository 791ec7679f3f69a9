#include <catch2/catch_amalgamated.hpp>

#include "braid/boxed.hpp"
#include "braid/oracle.hpp"
#include "braid/random_spec.hpp"

using namespace braid;

namespace {

// Naive point counter over the full q^n cube, no symmetry tricks.
BigInt naive_complement_count(const ArrangementSpec& spec, long long q) {
  int n = spec.dimension();
  std::vector<long long> x(n + 1, 0);
  BigInt count = 0;
  std::function<void(int)> rec = [&](int level) {
    if (level > n) {
      ++count;
      return;
    }
    for (long long v = 0; v < q; ++v) {
      x[level] = v;
      bool ok = true;
      for (int i = 1; i < level && ok; ++i)
        for (int j = i + 1; j <= level && ok; ++j) {
          if (j != level) continue;
          for (int s : spec.offsets_of(i, j))
            if (((x[i] - x[j] - s) % q + q) % q == 0) {
              ok = false;
              break;
            }
        }
      if (ok) rec(level + 1);
    }
  };
  rec(1);
  return count;
}

}  // namespace

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(primes_above(10, 3) == std::vector<long long>{11, 13, 17});
}

TEST_CASE("complement counts for simple arrangements") {
  CHECK(complement_count_mod_q(preset_braid(2), 5) == 20);
  ArrangementSpec empty3 = parse_arrangement(R"({"n":3})");
  CHECK(complement_count_mod_q(empty3, 5) == 125);
  CHECK_THROWS_AS(complement_count_mod_q(preset_braid(2), 6), UsageError);
  CHECK_THROWS_AS(complement_count_mod_q(preset_ish(3), 5), UsageError);  // q <= 2m+2
}

TEST_CASE("complement count matches the naive triple loop") {
  ArrangementSpec ish3 = preset_ish(3);
  for (long long q : {7LL, 11LL, 13LL})
    CHECK(complement_count_mod_q(ish3, q) == naive_complement_count(ish3, q));
  SplitMix64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    ArrangementSpec spec = sample_spec(rng, n, 2, 0.5);
    long long q = next_prime_above(2 * spec.max_offset() + 2 + rng.next_below(10));
    CHECK(complement_count_mod_q(spec, q) == naive_complement_count(spec, q));
  }
}

TEST_CASE("ish-shaped fast path agrees with the generic DFS") {
  // Force both paths by comparing against the naive counter on Ish-type
  // specs (the fast bitmask path is selected automatically for them).
  for (int n = 3; n <= 4; ++n) {
    ArrangementSpec spec = preset_ish(n);
    long long q = next_prime_above(2 * spec.max_offset() + 2);
    CHECK(complement_count_mod_q(spec, q) == naive_complement_count(spec, q));
  }
  std::map<int, std::vector<int>> cols = {{2, {0}}, {3, {-1, 0, 1}}, {4, {-2, -1, 0, 1}}};
  ArrangementSpec mixed = preset_ish_type(4, cols);
  long long q = next_prime_above(2 * mixed.max_offset() + 2);
  CHECK(complement_count_mod_q(mixed, q) == naive_complement_count(mixed, q));
}

TEST_CASE("translation invariance") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    ArrangementSpec spec = sample_spec(rng, n, 1, 0.5);
    long long q = next_prime_above(2 * spec.max_offset() + 2 + rng.next_below(8));
    CHECK(complement_count_mod_q(spec, q) % q == 0);
  }
}

TEST_CASE("interpolation recovers integer polynomials") {
  // y = x^3 - 3x^2 + 2x sampled at four points.
  std::vector<long long> xs = {5, 7, 11, 13};
  std::vector<BigInt> ys;
  for (long long x : xs) ys.push_back(BigInt(x) * x * x - 3 * BigInt(x) * x + 2 * x);
  std::vector<BigInt> coeffs = interpolate_integer_polynomial(xs, ys);
  CHECK(coeffs == std::vector<BigInt>{0, 2, -3, 1});
  CHECK(evaluate_polynomial(coeffs, 10) == 720);

  // Non-integer data is rejected.
  std::vector<BigInt> bad = {1, 1, 1, 2};
  CHECK_THROWS_AS(interpolate_integer_polynomial(xs, bad), UsageError);
}

TEST_CASE("characteristic polynomials of the classics") {
  // Braid n=3: q(q-1)(q-2).
  CHECK(characteristic_polynomial(preset_braid(3)) == std::vector<BigInt>{0, 2, -3, 1});
  // Empty arrangement in dimension 2: q^2.
  CHECK(characteristic_polynomial(parse_arrangement(R"({"n":2})")) ==
        std::vector<BigInt>{0, 0, 1});
  // Ish n=3: monic cubic with chi(-1) = -16.
  std::vector<BigInt> ish3 = characteristic_polynomial(preset_ish(3));
  REQUIRE(ish3.size() == 4);
  CHECK(ish3[3] == 1);
  CHECK(evaluate_polynomial(ish3, -1) == -16);
}

TEST_CASE("region counts via Zaslavsky evaluation") {
  CHECK(count_regions_oracle(preset_braid(3)) == 6);
  CHECK(count_regions_oracle(preset_ish(3)) == 16);
  CHECK(count_regions_oracle(preset_shi(3)) == 16);
  CHECK(count_regions_oracle(parse_arrangement(R"({"n":1})")) == 1);
}

TEST_CASE("oracle equals brute on sampled specs") {
  SplitMix64 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    int m = static_cast<int>(rng.next_below(3));
    ArrangementSpec spec = sample_spec(rng, n, m, 0.5);
    CHECK(count_regions_oracle(spec) == count_regions_brute(spec));
  }
}

TEST_CASE("oracle positivity on random specs") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    ArrangementSpec spec = sample_spec(rng, 3, 2, 0.6);
    CHECK(count_regions_oracle(spec) > 0);
  }
}

TEST_CASE("prime bound override is honored") {
  BigInt a = count_regions_oracle(preset_ish(3));
  BigInt b = count_regions_oracle(preset_ish(3), 50);
  CHECK(a == b);
}
