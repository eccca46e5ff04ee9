#include "gncg/numthy.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gncg::numthy {

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 reassemble(const Factorization& f) {
  u64 n = 1;
  for (const auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(u64 n) { return n > 1 && factorize(n).size() == 1; }

u64 euler_phi(u64 n) {
  u64 result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

u64 tau(u64 n) {
  u64 count = 1;
  for (const auto& pp : factorize(n)) count *= pp.exponent + 1;
  return count;
}

unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).size()); }

bool is_squarefree(u64 n) {
  for (const auto& pp : factorize(n))
    if (pp.exponent > 1) return false;
  return true;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::set<u64> theta(u64 m) {
  std::set<u64> primes;
  for (const auto& pp : factorize(m)) primes.insert(pp.prime);
  return primes;
}

DivisorSplit divisor_split_unchecked(u64 n, u64 h) {
  DivisorSplit split{n, h, {}, {}};
  for (u64 d : divisors(n)) {
    if (d == 1) continue;
    (std::gcd(d, h) > 1 ? split.omega : split.bar_omega).insert(d);
  }
  return split;
}

DivisorSplit divisor_split(u64 n, u64 h) {
  if (n < 2 || h < 1 || n % h != 0)
    throw std::invalid_argument("divisor_split: invalid subgroup order " + std::to_string(h) +
                                " for group order " + std::to_string(n));
  return divisor_split_unchecked(n, h);
}

}  // namespace gncg::numthy
