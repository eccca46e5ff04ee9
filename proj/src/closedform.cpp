#include "gncg/closedform.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gncg::closedform {

namespace {

u64 phi_sum(const std::set<u64>& ds) {
  u64 s = 0;
  for (u64 d : ds) s += numthy::euler_phi(d);
  return s;
}

bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

CyclicInstance::CyclicInstance(u64 n, u64 h) : n_(n), h_(h) {
  if (n < 3 || h < 2 || n % h != 0)
    throw std::invalid_argument("cyclic instance needs n >= 3, h >= 2, h | n (got n=" +
                                std::to_string(n) + ", h=" + std::to_string(h) + ")");
  fn_ = numthy::factorize(n);
  fh_ = numthy::factorize(h);
}

u64 degree_formula(const CyclicInstance& inst, u64 d) {
  if (d <= 1 || inst.n() % d != 0)
    throw std::invalid_argument("element order " + std::to_string(d) + " is not a divisor > 1 of " +
                                std::to_string(inst.n()));
  if (inst.h() % d == 0) return phi_sum(numthy::divisor_split(inst.n(), d).omega) - 1;
  return phi_sum(numthy::divisor_split_unchecked(inst.h(), d).omega);
}

MaxDegree max_degree_formula(const CyclicInstance& inst) {
  const u64 n = inst.n();
  if (inst.rad_divides_h()) return {n - 2, n - 2};
  const u64 isolated = phi_sum(numthy::divisor_split(n, inst.h()).bar_omega);
  return {n - (isolated + 1), n - isolated - 2};
}

u64 min_degree_formula(const CyclicInstance& inst) {
  if (inst.r() == 1) return inst.h() == inst.n() ? inst.n() - 2 : inst.h() - 1;
  if (!inst.rad_divides_h()) return 0;
  u64 best = std::numeric_limits<u64>::max();
  for (const auto& [p, e] : inst.n_factors()) {
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    best = std::min(best, degree_formula(inst, q));
  }
  return best;
}

bool is_connected_formula(const CyclicInstance& inst) { return inst.rad_divides_h(); }

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    case Tri::Unclassified:
      return "unclassified";
  }
  return {};
}

PropertyPrediction classify_formula(const CyclicInstance& inst) {
  const u64 n = inst.n(), h = inst.h();
  const unsigned r = inst.r();
  const auto h_primes = static_cast<unsigned>(inst.h_factors().size());
  const bool h_prime_power = h_primes == 1;

  PropertyPrediction p;
  p.star = (is_power_of_two(n) && n >= 4 && h == 2) || (n == 3 && h == 3);
  p.path = (n == 3 && h == 3) || (n == 4 && h == 2);
  p.cycle = n == 4 && h == 4;
  p.unicyclic = p.cycle;
  p.triangle_free = p.star;
  p.complete_bipartite = p.star;
  p.complete = r == 1 && h == n;
  p.split = h_prime_power || (n == 6 && h == 6);
  p.claw_free = (h == n && r <= 2) || (h < n && (n == 4 || n == 6));
  p.chordal = h_prime_power || (h == n && r <= 3);
  p.connected = is_connected_formula(inst);
  p.eulerian = false;

  p.corrected.eulerian = is_power_of_two(n) && h == n;
  const auto& nf = inst.n_factors();
  const bool two_p_k = nf.size() == 2 && nf[0].prime == 2 && nf[0].exponent == 1;
  p.corrected.split = h_prime_power || (h == n && two_p_k);
  p.corrected.triangle_free = h == 2 || (n == 3 && h == 3);

  const bool squarefree = numthy::is_squarefree(n);
  if (r <= 3 || (r == 4 && squarefree) || (r >= 5 && h_primes <= 3))
    p.perfect = Tri::True;
  else if (h_primes >= 4 && (r >= 5 || (r == 4 && !squarefree && h < n)))
    p.perfect = Tri::False;
  else
    p.perfect = Tri::Unclassified;

  p.max_degree = max_degree_formula(inst);
  p.min_degree = min_degree_formula(inst);
  for (u64 d : numthy::divisors(n))
    if (d > 1) p.degree_by_order[d] = degree_formula(inst, d);
  return p;
}

}  // namespace gncg::closedform
