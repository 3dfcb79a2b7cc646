// Evidence about Gal(f) from factorization patterns modulo primes. Nothing
// here proves a Galois group; it ranks candidate groups.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "endocert/bigint.hpp"
#include "endocert/intpoly.hpp"
#include "endocert/named_groups.hpp"
#include "endocert/permgroup.hpp"

namespace endocert {

struct CycleTypeCensus {
  std::size_t degree = 0;
  std::size_t sampled = 0;
  std::map<Partition, std::size_t> counts;
  /// Primes skipped before the budget filled (leading coefficient or a
  /// repeated factor mod p).
  std::vector<std::uint64_t> excluded;
  std::uint64_t last_prime = 0;

  /// Stable text rendering, one partition per line.
  std::string to_text() const;
};

/// The first `prime_budget` good odd primes, ascending from 3. Per-prime work
/// runs on worker threads; the result does not depend on scheduling.
CycleTypeCensus census(const IntPoly& f, std::size_t prime_budget = 200);

struct CycleTypeDistribution {
  BigInt order;
  std::map<Partition, BigInt> counts;  // number of elements with each cycle type
};

/// Exact distribution: closed form for S_n and A_n, otherwise summed over
/// conjugacy classes. Throws std::invalid_argument when |G| exceeds limit
/// and G is neither S_n nor A_n.
CycleTypeDistribution cycle_type_distribution(const PermGroup& g, std::uint64_t limit = 1000000);

Partition cycle_partition(const Perm& p);

struct IdentifyOptions {
  double p_threshold = 0.01;
  std::uint64_t class_limit = 1000000;
};

struct GroupHypothesis {
  std::string name;
  std::vector<Perm> generators;
  BigInt order;
  bool evaluated = false;  // false when the group is beyond the class limit
  bool matched = false;
  std::vector<Partition> unexplained;  // observed, but no element has this cycle type
  double chi_square = 0;
  unsigned dof = 0;
  double p_value = 0;
  /// Posterior share among matched candidates under a uniform prior, scaled
  /// by N/(N+1) for N sampled primes. Always < 1.
  BigRational confidence = 0;
  bool transitivity_evidence = false;  // an n-cycle or (n-1)-cycle was observed
  std::string evidence;
};

/// One hypothesis per candidate, in candidate order. Throws
/// std::invalid_argument on an empty census or a candidate of the wrong
/// degree.
std::vector<GroupHypothesis> identify(const CycleTypeCensus& c, const std::vector<groups::NamedGroup>& candidates,
                                      const IdentifyOptions& opts = {});

/// Pair patterns of (f mod p, h mod p) over primes good for both, with a
/// chi-square independence test of the two marginals.
struct JointCensus {
  std::size_t sampled = 0;
  std::map<std::pair<Partition, Partition>, std::size_t> counts;
  std::map<Partition, std::size_t> first, second;
  double chi_square = 0;
  unsigned dof = 0;
  double p_value = 1;
};

JointCensus joint_census(const IntPoly& f, const IntPoly& h, std::size_t prime_budget = 200);

}  // namespace endocert
