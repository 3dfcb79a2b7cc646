// Rule engine for endomorphism rings of hyperelliptic jacobians y^2 = f(x)
// from the Galois action on the roots of f. Every conclusion comes with a
// checklist saying which hypotheses were computed, which were taken from the
// facts table, and which are only supported by sampling.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endocert/bigint.hpp"
#include "endocert/errors.hpp"
#include "endocert/facts.hpp"
#include "endocert/galois.hpp"
#include "endocert/heart.hpp"
#include "endocert/intpoly.hpp"
#include "endocert/permgroup.hpp"

namespace endocert {

enum class Outcome {
  EndIsZ,
  End0SimpleQAlgebra,
  End0MatrixOverQ,
  SupersingularPossible,
  ProductOfEllipticCurvesPossible,
  HomVanishes,
  Inconclusive,
};
/// "END_IS_Z", "END0_SIMPLE_Q_ALGEBRA", ...
std::string to_string(Outcome o);

enum class Status { Verified, Failed, Assumed, Heuristic, Unknown };
std::string to_string(Status s);

struct ChecklistEntry {
  std::string hypothesis;
  Status status = Status::Unknown;
  std::string citation;
  std::string evidence;
  std::string fact_id;  // set when the entry rests on a FactRecord
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  /// Characteristics left open by SUPERSINGULAR_POSSIBLE.
  std::vector<std::uint64_t> characteristics;
  std::vector<ChecklistEntry> checklist;
  std::vector<std::string> caveats;
  /// Rule that produced the outcome, or the first failed hypothesis for
  /// INCONCLUSIVE.
  std::string rule;
  std::string reason;
  /// False when the group came from polynomial identification.
  bool group_supplied = true;
  std::string group_name;
  std::size_t degree = 0;
  std::size_t genus = 0;
  std::uint64_t characteristic = 0;

  /// Appends unless an entry with the same hypothesis already exists.
  void add(ChecklistEntry e);
  const ChecklistEntry* find(const std::string& hypothesis) const;
};

struct CaseInput {
  PermGroup group;
  std::uint64_t characteristic = 0;  // 0 or a prime other than 2
  std::string label;                 // display name; recognized names take precedence
  bool group_supplied = true;
  std::uint64_t seed = 0x5eedULL;
};

// ---- GL(n, Z) ----

struct GlOrderResult {
  bool exists = false;
  /// Smallest n admitting an element of order m.
  std::uint64_t min_dimension = 0;
  /// Block-diagonal witness padded to n x n, when exists.
  std::vector<std::vector<BigInt>> witness;
  std::uint64_t verified_order = 0;
};

/// Euler-phi criterion: sum phi(p^a) over the odd prime powers of m, plus
/// phi(2^a) unless a = 1; an element of order m exists iff the sum is <= n.
/// The witness uses companion matrices of cyclotomic polynomials and its
/// order is checked by powering.
GlOrderResult gl_element_of_order(std::uint64_t n, std::uint64_t m);
inline bool gl_has_element_of_order(std::uint64_t n, std::uint64_t m) { return gl_element_of_order(n, m).exists; }

/// |GL(k, F_2)|.
BigInt gl2_order(std::uint64_t k);

struct MultiplicationBound {
  std::uint64_t d = 0;
  std::uint64_t bound = 0;
};
/// For an embedding of a degree-e number field in End^0(X): d = 2 dim X / e
/// and dim_E End^0(X, i) <= d^2. Throws std::invalid_argument unless e
/// divides 2 dim X.
MultiplicationBound multiplication_bound(std::uint64_t dim_x, std::uint64_t field_degree);

// ---- Group recognition ----

struct Recognition {
  std::string name;  // "A5", "PSL2(7)", "M12", ...
  std::vector<std::string> fact_ids;
  std::string evidence;
};

/// Names the group when its degree, order, transitivity and simplicity pin it
/// down; used only to select group-specific facts.
std::optional<Recognition> recognize_group(const PermGroup& g, Tri simple);

/// Simplicity oracle backed by the facts table (large Mathieu groups).
SimplicityOracle facts_simplicity_oracle();

// ---- Analyses ----

struct CenterAnalysis {
  CentralizerKind centralizer = CentralizerKind::NonField;
  std::size_t centralizer_dim = 0;
  std::uint64_t field_size = 0;
  unsigned transitivity = 0;
  Tri index_two = Tri::Unknown;
  Tri normal_index_dividing_genus = Tri::Unknown;
  /// A subgroup of index d for some divisor d > 1 of the genus.
  Tri small_index = Tri::Unknown;
  std::vector<int> small_indices_found;
  bool center_is_field = false;  // End^0 is a simple Q-algebra
  bool center_is_q = false;
  Verdict fragment;
};

/// Center of End^0 from the centralizer of G on the heart (the l = 2 module).
/// Throws UnsupportedError for l != 2 or n = 4.
CenterAnalysis analyze_center(const PermGroup& g, std::size_t genus, std::uint32_t ell = 2,
                              std::uint64_t characteristic = 0, std::uint64_t seed = 0x5eedULL);

/// Throws UnsupportedError for n = 4 or characteristic 2, and
/// std::invalid_argument for n < 3 or a characteristic that is not 0 or prime.
Verdict analyze_jacobian(const CaseInput& c);

struct PolynomialAnalysis {
  CycleTypeCensus census;
  std::vector<GroupHypothesis> hypotheses;
  std::optional<std::size_t> chosen;  // index into hypotheses
  Verdict verdict;
};

/// Identify Gal(f) from a census, then analyze with the best matched
/// candidate. The verdict is conditional on the identification.
PolynomialAnalysis analyze_polynomial(const IntPoly& f, std::uint64_t characteristic, std::size_t prime_budget = 200,
                                      std::uint64_t seed = 0x5eedULL);

struct HomPairOptions {
  std::size_t prime_budget = 200;
  std::optional<PermGroup> group_f, group_h;  // supplied groups skip identification
  double independence_threshold = 0.01;
};

/// Vanishing of Hom between J(C_f) and J(C_h). Throws std::invalid_argument
/// when f == h, a degree is below 3 or a polynomial has a repeated root, and
/// UnsupportedError in characteristic 2.
Verdict hom_pair_analysis(const IntPoly& f, const IntPoly& h, std::uint64_t characteristic,
                          const HomPairOptions& opts = {});

}  // namespace endocert
