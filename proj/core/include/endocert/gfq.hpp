// Small finite fields F_q, q = p^k <= 2^16, with log tables.
//
// Elements are encoded as integers 0..q-1 whose base-p digits are the
// coefficients of a polynomial in the residue class ring F_p[x]/(m(x)).
// The modulus m is the first monic primitive polynomial of degree k in
// lexicographic order of its coefficients (constant term most significant),
// so the class of x is always a generator of the multiplicative group.
#pragma once

#include <cstdint>
#include <vector>

namespace endocert {

class GFq {
 public:
  /// Throws std::invalid_argument unless q is a prime power in [2, 2^16].
  explicit GFq(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  /// Coefficients of the modulus, ascending, monic of degree k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// The class of x, a primitive element.
  std::uint32_t generator() const { return exp_[1 % (q_ - 1)]; }
  std::uint32_t power_of_generator(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint32_t one() const { return 1; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int32_t> log_;
};

/// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

}  // namespace endocert
