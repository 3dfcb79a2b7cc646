// Integer polynomials and their reductions modulo small primes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endocert/bigint.hpp"

namespace endocert {

/// Degree partition of a squarefree reduction, ascending.
using Partition = std::vector<unsigned>;
std::string to_string(const Partition& p);

class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients in ascending degree; trailing zeros are dropped.
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// Accepts either an expression in x ("x^7 - 7*x + 3", "2x^2+1") or a
  /// whitespace/comma separated coefficient list in ascending degree
  /// ("3 -7 0 0 0 0 0 1"). Throws ParseError.
  static IntPoly parse(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPoly derivative() const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// gcd of the coefficients (positive), 0 for the zero polynomial.
  BigInt content() const;
  IntPoly primitive_part() const;

  /// Canonical expression form, highest degree first: "x^7 - 7*x + 3".
  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
};

/// Primitive gcd over Q (positive leading coefficient), via the primitive
/// pseudo-remainder sequence.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// gcd(f, f') is constant. Throws std::invalid_argument for the zero
/// polynomial or a constant.
bool is_squarefree(const IntPoly& f);

/// Degrees of the irreducible factors of f mod p, found by distinct-degree
/// factorization. nullopt when p divides the leading coefficient or the
/// reduction has a repeated factor. p must be an odd prime below 2^32.
std::optional<Partition> degree_pattern_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace endocert
