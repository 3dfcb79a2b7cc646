// The F_2 Galois module carried by the 2-torsion of a hyperelliptic
// jacobian: the zero-sum hyperplane of F_2^n, divided by the all-ones vector
// when n is even.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endocert/algebra.hpp"
#include "endocert/perm.hpp"
#include "endocert/permgroup.hpp"

namespace endocert {

class HeartModule {
 public:
  /// Basis: e_i + e_{n-1} for i < n-1 (odd n) or i < n-2 (even n), where for
  /// even n a coset is represented by the member whose coordinate n-2 is zero.
  explicit HeartModule(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t genus() const { return (n_ - 1) / 2; }
  std::size_t dim() const { return 2 * genus(); }
  /// The action of S_n is injective except for n = 4 (the Klein four-group
  /// acts trivially there).
  bool faithful() const { return n_ != 4; }

  /// Coordinates of a zero-sum vector (given by its support) in the basis.
  std::vector<std::uint8_t> coordinates(const std::vector<std::uint8_t>& w) const;
  /// Matrix of s (column i is the image of basis vector i). With the
  /// left-to-right product on Perm, act(a * b) == act(b) * act(a).
  MatF act(const Perm& s) const;
  std::vector<MatF> act_all(const std::vector<Perm>& gens) const;

 private:
  std::size_t n_;
};

inline HeartModule build_heart(std::size_t n) { return HeartModule(n); }

enum class CentralizerKind { Scalars, Field, NonField };
std::string to_string(CentralizerKind k);

struct CentralizerReport {
  FSubalgebra algebra;
  CentralizerKind kind;
  std::uint64_t field_size;  // 2^dim for a field, 0 otherwise
  unsigned transitivity;
  bool scalar_hypothesis;    // 2-transitive with n odd, or 3-transitive with n even
};

/// Centralizer of G in End_F2(heart). When the multiple-transitivity
/// hypothesis holds the centralizer is known to be F_2; anything else throws
/// InternalInconsistency.
CentralizerReport heart_centralizer(const PermGroup& g);

/// Smallest unital subalgebra of End_F2(heart) containing the image of G.
FSubalgebra heart_group_algebra(const PermGroup& g);

}  // namespace endocert
