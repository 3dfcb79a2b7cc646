// Unital subalgebras of M_d(F_l): centralizers, generated algebras,
// radicals and the field test.
//
// Matrices are identified with vectors of length d^2 in column-major order
// (entry (i, j) sits at j*d + i), which fixes the unknown ordering of the
// commutation system and makes kernel bases reproducible.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "endocert/matf.hpp"

namespace endocert {

class FSubalgebra {
 public:
  /// Basis of the span of `spanning` (rref of the flattened matrices). Throws
  /// std::invalid_argument if the span misses the identity or, when
  /// verify_closed is set, is not closed under multiplication.
  FSubalgebra(std::uint32_t ell, std::size_t d, const std::vector<MatF>& spanning, bool verify_closed = true);

  std::uint32_t ell() const { return ell_; }
  std::size_t ambient_dim() const { return d_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<MatF>& basis() const { return basis_; }

  bool contains(const MatF& x) const;
  /// Coordinates of x in basis(), or nullopt when x is outside the span.
  std::optional<std::vector<std::uint32_t>> coordinates(const MatF& x) const;
  bool same_span(const FSubalgebra& o) const;

  bool commutative() const { return commutative_; }
  /// Dimension of the Jacobson radical.
  std::size_t radical_dim() const { return radical_dim_; }
  bool is_field() const { return field_; }
  /// l^dim when the algebra is a field, otherwise 0.
  std::uint64_t field_size() const { return field_size_; }
  /// Number of simple factors of A/rad(A) when A is commutative, else 0.
  std::size_t factor_count() const { return factors_; }

 private:
  std::uint32_t ell_;
  std::size_t d_;
  std::vector<MatF> basis_;
  MatF echelon_;  // flattened basis, reduced row-echelon
  std::vector<std::size_t> pivots_;
  bool commutative_ = false;
  std::size_t radical_dim_ = 0;
  bool field_ = false;
  std::uint64_t field_size_ = 0;
  std::size_t factors_ = 0;
};

/// Flatten a d x d matrix to a 1 x d^2 row, column-major.
MatF flatten(const MatF& x);
MatF unflatten(const MatF& row, std::size_t d);

/// {X : XM = MX for all M in mats}. With mats empty the result is M_d(F_l).
/// The result is checked to be a unital algebra; a failure throws
/// InternalInconsistency.
FSubalgebra centralizer_basis(const std::vector<MatF>& mats, std::uint32_t ell, std::size_t d);

/// Smallest unital subalgebra containing seed.
FSubalgebra algebra_closure(const std::vector<MatF>& seed, std::uint32_t ell, std::size_t d);

struct FieldTest {
  bool is_field = false;
  std::uint64_t field_size = 0;
};

/// Commutativity, then the Frobenius x -> x^l on A: radical = ker F^m with
/// l^m >= dim A, and the number of simple factors is dim ker(F - 1).
FieldTest is_field_algebra(const FSubalgebra& a);

/// Jacobson radical of any subalgebra of M_d(F_l), one flattened basis vector
/// per row. Uses the generalized-trace descent (trace of x^(l^i) divided by
/// l^i), which needs no factorization.
MatF radical_basis(const FSubalgebra& a);

/// For semisimple A: C(C(A)) == A, and dim A = d^2 whenever C(A) is the
/// scalars. Throws std::invalid_argument for a non-semisimple A.
bool double_centralizer_check(const FSubalgebra& a);

}  // namespace endocert
