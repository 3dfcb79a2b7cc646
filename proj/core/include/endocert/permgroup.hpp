// Permutation groups with a deterministic stabilizer chain.
//
// The base is the full point sequence 0, 1, ..., n-1, so level i of the
// chain is the pointwise stabilizer of {0, ..., i-1} acting on point i.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "endocert/bigint.hpp"
#include "endocert/errors.hpp"
#include "endocert/perm.hpp"

namespace endocert {

class PermGroup {
 public:
  PermGroup() = default;
  /// Throws std::invalid_argument when a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  /// Order as a machine integer; throws std::overflow_error past 2^64.
  std::uint64_t order_u64() const;

  bool contains(const Perm& p) const;
  bool is_trivial() const { return order_ == 1; }
  /// Group generated by this group and p, reusing the existing chain.
  PermGroup with_generator(const Perm& p) const;

  // Stabilizer chain access.
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  const Perm& transversal(std::size_t level, Point beta) const;
  const std::vector<Perm>& strong_generators(std::size_t level) const { return levels_[level].gens; }
  /// Pointwise stabilizer of {0, ..., k-1}, read off the chain.
  PermGroup base_prefix_stabilizer(std::size_t k) const;

  /// Orbits on points, each sorted, listed by least element.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  Perm random_element(std::mt19937_64& rng) const;
  /// Mixed-radix position of an element in the chain enumeration order.
  std::uint64_t element_index(const Perm& p) const;
  Perm element_at(std::uint64_t index) const;
  /// Visit every element in index order. Requires order_u64().
  void for_each_element(const std::function<void(const Perm&)>& visit) const;

 private:
  struct Level {
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<int> where;  // position of a point in orbit, or -1
    std::vector<Perm> trans;
    std::vector<Perm> trans_inv;
  };

  void init_levels();
  void extend_orbit(std::size_t level);
  void add_strong_generator(const Perm& p, std::size_t from, std::size_t to);
  /// Sift through levels [from, n). Returns the residue and the level where
  /// sifting stopped (n when the residue is the identity).
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const;
  void complete_from(std::size_t level);
  void finish();

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
  std::vector<std::uint64_t> stride_;
};

// ---- group-level operations ------------------------------------------------

/// Exact order (same as G.order()).
inline BigInt group_order(const PermGroup& g) { return g.order(); }

/// Largest k such that G is transitive on ordered k-tuples of distinct points.
std::size_t transitivity_degree(const PermGroup& g);

bool is_abelian(const PermGroup& g);
/// Smallest normal subgroup of G containing the given elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elements);
PermGroup derived_subgroup(const PermGroup& g);
/// G, [G,G], ... until the order stops dropping; the last entry is repeated
/// only once.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_perfect(const PermGroup& g);
bool is_solvable(const PermGroup& g);

struct ConjugacyClass {
  Perm representative;
  std::uint64_t size = 0;
};

/// Exhaustive class enumeration; requires |G| <= limit.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, std::uint64_t limit = 1000000);

/// Optional external knowledge (a cited fact) about simplicity.
using SimplicityOracle = std::function<std::optional<bool>(const PermGroup&)>;

struct GroupCheckOptions {
  std::uint64_t exhaustive_limit = 1000000;
  std::uint64_t seed = 0x5eedULL;
  int random_trials = 64;
  SimplicityOracle oracle;
};

struct SimplicityResult {
  Tri value = Tri::Unknown;
  std::string method;    // "exact", "random+cited-fact", "random-certificate", "unknown"
  std::string evidence;
};

SimplicityResult is_simple(const PermGroup& g, const GroupCheckOptions& opts = {});

struct NormalIndexResult {
  Tri value = Tri::Unknown;
  std::string evidence;
};

/// Does G have a proper normal subgroup N with [G:N] dividing m?
NormalIndexResult has_normal_subgroup_of_index_dividing(const PermGroup& g, std::uint64_t m,
                                                        const GroupCheckOptions& opts = {});

/// Order of the center; exact for |G| within the exhaustive limit, otherwise
/// only answered when G is known to be nonabelian simple.
std::optional<std::uint64_t> center_order(const PermGroup& g, const GroupCheckOptions& opts = {});

/// Distinct prime divisors of a positive integer.
std::vector<std::uint64_t> prime_divisors(std::uint64_t m);
std::vector<std::uint64_t> prime_divisors(const BigInt& m);

}  // namespace endocert
