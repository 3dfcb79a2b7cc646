// Bounded search for proper subgroups of small index.
//
// A subgroup of index r is the same thing as a transitive action on r
// points, so the search enumerates candidate images of the generators in
// Sym(r) and keeps those that extend to a homomorphism.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endocert/permgroup.hpp"

namespace endocert {

enum class SearchMethod { LagrangeShortcut, ActionBacktrack, Exhaustive };

const char* to_string(SearchMethod m);

struct SearchOptions {
  /// Skip r when G is simple and |G| does not divide r!.
  bool allow_shortcut = true;
  bool allow_exhaustive = true;
  /// Largest r for which Sym(r) is enumerated by the backtrack.
  int max_backtrack_degree = 9;
  /// Homomorphism tests allowed per index before giving up.
  std::uint64_t budget = 2000000;
  std::uint64_t exhaustive_limit = 10000;
  /// Simplicity of G if already known; Unknown means compute it.
  Tri known_simple = Tri::Unknown;
  GroupCheckOptions group;
};

struct IndexSearchResult {
  Tri exists = Tri::Unknown;
  SearchMethod method = SearchMethod::ActionBacktrack;
  /// Generators of a subgroup of index r, when one was found.
  std::vector<Perm> certificate;
  /// Images of G's generators in the transitive action on r points.
  std::vector<Perm> action;
  std::string note;
};

struct SubgroupSearchReport {
  int bound = 0;
  std::optional<int> found_index;
  SearchMethod method = SearchMethod::LagrangeShortcut;
  /// False when some index could not be decided within the resource limits.
  bool complete = true;
  std::vector<Perm> certificate;
  std::vector<Perm> action;
  std::string note;
};

/// Does G have a subgroup of index exactly r (r >= 2)?
IndexSearchResult subgroup_of_index(const PermGroup& g, int r, const SearchOptions& opts = {});

/// Least r with 1 < r <= bound such that G has a subgroup of index r.
SubgroupSearchReport min_proper_subgroup_index(const PermGroup& g, int bound, const SearchOptions& opts = {});

/// All subgroup orders found by lattice enumeration (|G| <= limit); empty
/// optional when the enumeration cap is hit.
std::optional<std::vector<std::uint64_t>> subgroup_orders_exhaustive(const PermGroup& g,
                                                                     std::uint64_t limit = 10000);

/// Arithmetic test for PSL_2(F_q), q an odd prime power >= 5: true when no
/// proper subgroup has index dividing (q-1)/2. Throws std::invalid_argument
/// for even q, q < 5 or q not a prime power.
bool psl2_subgroup_criterion(std::uint64_t q);

}  // namespace endocert
