#ifndef BRAID_ORACLE_HPP
#define BRAID_ORACLE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "braid/arrangement.hpp"
#include "braid/common.hpp"

namespace braid {

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline long long next_prime_above(long long q) {
  long long c = q + 1;
  while (!is_prime(c)) ++c;
  return c;
}

inline std::vector<long long> primes_above(long long bound, int count) {
  std::vector<long long> out;
  long long q = bound;
  while (static_cast<int>(out.size()) < count) {
    q = next_prime_above(q);
    out.push_back(q);
  }
  return out;
}

namespace detail {

// Forbidden differences x_i - x_j (mod q) per ordered pair, as flat bitmaps.
struct ModConstraints {
  int n;
  long long q;
  std::vector<char> forbidden;  // [(i*(n+1)+j)*q + d]

  bool bad(int i, int j, long long diff) const {
    return forbidden[(static_cast<std::size_t>(i) * (n + 1) + j) * q + diff] != 0;
  }
};

inline ModConstraints build_constraints(const ArrangementSpec& spec, long long q) {
  ModConstraints c;
  c.n = spec.dimension();
  c.q = q;
  c.forbidden.assign(static_cast<std::size_t>(c.n + 1) * (c.n + 1) * q, 0);
  for (const auto& [key, set] : spec.offsets()) {
    auto [i, j] = key;
    for (int s : set) {
      long long d = ((s % q) + q) % q;
      c.forbidden[(static_cast<std::size_t>(i) * (c.n + 1) + j) * q + d] = 1;
    }
  }
  return c;
}

// Depth-first count with x_1 = 0 and forward checking of every earlier
// coordinate. Exact but exponential in n.
inline unsigned long long count_dfs(const ModConstraints& c) {
  int n = c.n;
  long long q = c.q;
  std::vector<long long> x(n + 1, 0);
  unsigned long long count = 0;
  std::vector<int> value(n + 1, 0);
  int level = 2;
  if (n == 1) return 1;
  value[2] = 0;
  while (level >= 2) {
    if (value[level] == q) {
      --level;
      if (level >= 2) ++value[level];
      continue;
    }
    x[level] = value[level];
    bool ok = true;
    for (int i = 1; i < level && ok; ++i) {
      long long diff = ((x[i] - x[level]) % q + q) % q;
      if (c.bad(i, level, diff)) ok = false;
    }
    if (!ok) {
      ++value[level];
      continue;
    }
    if (level == n) {
      ++count;
      ++value[level];
      continue;
    }
    ++level;
    value[level] = 0;
  }
  return count;
}

// When every pair 2 <= i < j has S_{i,j} = {0} exactly (Ish-type shape),
// coordinates 2..n must take pairwise distinct values from per-coordinate
// allowed sets; count injective assignments by a bitmask DP over values.
inline bool ish_shaped(const ArrangementSpec& spec) {
  int n = spec.dimension();
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (spec.offsets_of(i, j) != std::vector<int>{0}) return false;
  return true;
}

inline unsigned long long count_ish_dp(const ArrangementSpec& spec, long long q) {
  int n = spec.dimension();
  int coords = n - 1;  // x_2..x_n, with x_1 = 0
  std::vector<std::vector<char>> allowed(coords, std::vector<char>(q, 1));
  for (int j = 2; j <= n; ++j)
    for (int s : spec.offsets_of(1, j)) {
      long long v = ((-static_cast<long long>(s)) % q + q) % q;  // x_j = -s is banned
      allowed[j - 2][v] = 0;
    }
  std::vector<unsigned long long> dp(1ull << coords, 0);
  dp[0] = 1;
  for (long long v = 0; v < q; ++v) {
    for (std::size_t mask = (1ull << coords); mask-- > 0;) {
      if (dp[mask] == 0) continue;
      for (int j = 0; j < coords; ++j) {
        if ((mask >> j) & 1) continue;
        if (!allowed[j][v]) continue;
        dp[mask | (1ull << j)] += dp[mask];
      }
    }
  }
  return dp[(1ull << coords) - 1];
}

}  // namespace detail

// Number of points of (Z/q)^n avoiding every hyperplane, for odd prime q.
// Translation invariance of the difference constraints lets us fix x_1 = 0
// and multiply by q.
inline BigInt complement_count_mod_q(const ArrangementSpec& spec, long long q) {
  if (!is_prime(q) || q <= 2 * spec.max_offset() + 2 || q == 2)
    throw UsageError("q must be an odd prime exceeding 2m+2");
  int n = spec.dimension();
  // Overflow guard for the raw counter: q^(n-1) must fit comfortably.
  long double est = 1;
  for (int i = 1; i < n; ++i) est *= static_cast<long double>(q);
  if (est > 4e18) throw GuardError("point count q^(n-1) too large for the oracle");
  unsigned long long fixed;
  if (n >= 3 && n <= 20 && detail::ish_shaped(spec))
    fixed = detail::count_ish_dp(spec, q);
  else
    fixed = detail::count_dfs(detail::build_constraints(spec, q));
  return BigInt(fixed) * q;
}

// ---------------------------------------------------------------------------
// Exact interpolation.
// ---------------------------------------------------------------------------

namespace detail {

struct Rational {
  BigInt num;
  BigInt den;  // > 0

  Rational(BigInt n = 0, BigInt d = 1) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::logic_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  bool is_integer() const { return den == 1; }
};

}  // namespace detail

// Exact Lagrange interpolation through integer points; coefficients ascending
// by degree. Throws if any coefficient fails to be an integer.
inline std::vector<BigInt> interpolate_integer_polynomial(const std::vector<long long>& xs,
                                                          const std::vector<BigInt>& ys) {
  using detail::Rational;
  std::size_t k = xs.size();
  std::vector<Rational> coeffs(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j), built up as
    // integer polynomial over a scalar denominator.
    std::vector<BigInt> basis = {1};
    BigInt denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<BigInt> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= BigInt(xs[i]) - xs[j];
    }
    for (std::size_t d = 0; d < basis.size(); ++d)
      coeffs[d] = coeffs[d] + Rational(ys[i] * basis[d], denom);
  }
  std::vector<BigInt> out(k);
  for (std::size_t d = 0; d < k; ++d) {
    if (!coeffs[d].is_integer())
      throw UsageError("interpolation produced a non-integer coefficient");
    out[d] = coeffs[d].num;
  }
  return out;
}

inline BigInt evaluate_polynomial(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
  return acc;
}

// Default prime bound for the finite-field method.
inline long long default_prime_bound(const ArrangementSpec& spec) {
  long long n = spec.dimension();
  long long m = spec.max_offset();
  return std::max(n * (2 * m + 2), 2 * n + 1);
}

// Interpolates the degree-n characteristic polynomial through complement
// counts at n+1 primes above the bound, then demands integrality, monicity
// and stability against a second disjoint prime set. On instability the
// bound is doubled once before giving up.
inline std::vector<BigInt> characteristic_polynomial(const ArrangementSpec& spec,
                                                     long long prime_bound = 0) {
  int n = spec.dimension();
  long long bound = prime_bound > 0 ? prime_bound : default_prime_bound(spec);
  bound = std::max(bound, static_cast<long long>(2 * spec.max_offset() + 2));
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<long long> primes = primes_above(bound, 2 * (n + 1));
    auto poly_from = [&](int offset) {
      std::vector<long long> xs(primes.begin() + offset, primes.begin() + offset + n + 1);
      std::vector<BigInt> ys;
      for (long long q : xs) ys.push_back(complement_count_mod_q(spec, q));
      return interpolate_integer_polynomial(xs, ys);
    };
    std::vector<BigInt> first = poly_from(0);
    std::vector<BigInt> second = poly_from(n + 1);
    if (first == second && static_cast<int>(first.size()) == n + 1 && first.back() == 1)
      return first;
    bound *= 2;
  }
  throw UsageError("characteristic polynomial unstable across prime sets; raise --prime-bound");
}

// Region count as (-1)^n chi(-1).
inline BigInt count_regions_oracle(const ArrangementSpec& spec, long long prime_bound = 0) {
  std::vector<BigInt> chi = characteristic_polynomial(spec, prime_bound);
  BigInt value = evaluate_polynomial(chi, BigInt(-1));
  BigInt regions = (spec.dimension() % 2 == 0) ? value : -value;
  if (regions <= 0) throw std::logic_error("region count from the oracle must be positive");
  return regions;
}

}  // namespace braid

#endif  // BRAID_ORACLE_HPP
