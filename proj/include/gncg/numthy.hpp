#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace gncg::numthy {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// Trial division. Inputs are desk-scale, so no probabilistic tests.
Factorization factorize(u64 n);

u64 reassemble(const Factorization& f);

bool is_prime(u64 n);
bool is_prime_power(u64 n);
u64 euler_phi(u64 n);
u64 tau(u64 n);

/// Number of distinct primes dividing n.
unsigned omega(u64 n);

bool is_squarefree(u64 n);

/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);

/// Distinct prime divisors of m (empty iff m == 1).
std::set<u64> theta(u64 m);

/// Partition of {d | n : d > 1} by whether d shares a prime with h.
struct DivisorSplit {
  u64 n = 0;
  u64 h = 0;
  std::set<u64> omega;      // gcd(d, h) > 1
  std::set<u64> bar_omega;  // gcd(d, h) == 1
};

/// Throws std::invalid_argument unless n >= 2, h >= 1 and h | n.
DivisorSplit divisor_split(u64 n, u64 h);

/// Same partition without the h | n requirement; the degree formula needs
/// splits such as (|H|, |x|) where |x| need not divide |H|.
DivisorSplit divisor_split_unchecked(u64 n, u64 h);

}  // namespace gncg::numthy
