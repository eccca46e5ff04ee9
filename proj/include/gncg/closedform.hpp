#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gncg/numthy.hpp"

namespace gncg::closedform {

using numthy::u64;

/// (n, h) for Gamma_{Z_n, Z_h}: n >= 3, h >= 2, h | n.
class CyclicInstance {
 public:
  /// Throws std::invalid_argument when the constraints fail.
  CyclicInstance(u64 n, u64 h);

  u64 n() const { return n_; }
  u64 h() const { return h_; }
  const numthy::Factorization& n_factors() const { return fn_; }
  const numthy::Factorization& h_factors() const { return fh_; }
  /// Number of distinct primes dividing n.
  unsigned r() const { return static_cast<unsigned>(fn_.size()); }
  /// Every prime dividing n also divides h.
  bool rad_divides_h() const { return fn_.size() == fh_.size(); }

 private:
  u64 n_, h_;
  numthy::Factorization fn_, fh_;
};

/// Degree of every element of order d (d | n, d > 1).
u64 degree_formula(const CyclicInstance& inst, u64 d);

struct MaxDegree {
  u64 paper_value;      // as printed: n - (sum phi(bar omega) + 1) when disconnected
  u64 corrected_value;  // also excludes the vertex itself in that branch
};
MaxDegree max_degree_formula(const CyclicInstance& inst);

u64 min_degree_formula(const CyclicInstance& inst);

bool is_connected_formula(const CyclicInstance& inst);

enum class Tri { False, True, Unclassified };
std::string to_string(Tri t);

struct PropertyPrediction {
  bool star = false;
  bool path = false;
  bool cycle = false;
  bool triangle_free = false;
  bool complete_bipartite = false;
  bool complete = false;
  bool unicyclic = false;
  bool split = false;
  bool claw_free = false;
  bool chordal = false;
  bool connected = false;
  bool eulerian = false;  // never
  Tri perfect = Tri::Unclassified;
  // Versions of three characterizations that also cover the instances the
  // printed statements miss; the printed ones above are kept verbatim.
  struct {
    bool eulerian = false;       // n = h = 2^k, k >= 2 (a complete graph on an odd number of vertices)
    bool split = false;          // h a prime power, or h = n = 2p^k with p odd
    bool triangle_free = false;  // h = 2, or n = h = 3
  } corrected;
  MaxDegree max_degree{0, 0};
  u64 min_degree = 0;
  std::map<u64, u64> degree_by_order;  // d -> degree of elements of order d
};

PropertyPrediction classify_formula(const CyclicInstance& inst);

}  // namespace gncg::closedform
