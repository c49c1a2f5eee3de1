#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace tightpoly {

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> factors;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Solutions of x^2 = 1 modulo a prime power P^e, as residues in [0, P^e).
inline std::vector<long long> square_roots_of_unity_prime_power(long long prime, int exponent) {
  long long m = 1;
  for (int k = 0; k < exponent; ++k) m *= prime;
  if (m == 2) return {1};
  if (prime != 2) return {1, m - 1};
  if (m == 4) return {1, 3};
  return {1, m / 2 - 1, m / 2 + 1, m - 1};
}

/// x with x = r1 (mod m1), x = r2 (mod m2) for coprime moduli, in [0, m1 m2).
inline long long crt_pair(long long r1, long long m1, long long r2, long long m2) {
  // Extended Euclid for the inverse of m1 modulo m2.
  long long old_r = m1 % m2, r = m2, old_s = 1, s = 0;
  while (r != 0) {
    const long long quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_s = std::exchange(s, old_s - quotient * s);
  }
  const long long inv = ((old_s % m2) + m2) % m2;
  const long long m = m1 * m2;
  const long long t = (((r2 - r1) % m2 + m2) % m2) * inv % m2;
  return ((r1 + m1 * t) % m + m) % m;
}

/// All x in [1, n] with x^2 = 1 (mod n), built prime power by prime power and
/// combined with the Chinese remainder theorem. For n = 1 this is {1}.
inline std::vector<long long> square_roots_of_unity(long long n) {
  if (n <= 1) return {1};
  std::vector<long long> roots{0};
  long long modulus = 1;
  for (const auto& [prime, exponent] : factorize(n)) {
    long long pe = 1;
    for (int k = 0; k < exponent; ++k) pe *= prime;
    std::vector<long long> next;
    for (long long r : roots) {
      for (long long s : square_roots_of_unity_prime_power(prime, exponent)) next.push_back(crt_pair(r, modulus, s, pe));
    }
    roots = std::move(next);
    modulus *= pe;
  }
  for (long long& r : roots) {
    if (r == 0) r = n;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace tightpoly
