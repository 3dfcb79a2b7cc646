// Permutations of {0, ..., n-1} stored as image arrays.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace endocert {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)), so a is applied first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  /// Build from disjoint cycles given with 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parse 1-based cycle notation such as "(1 2 3)(4 5)". Commas are accepted
  /// as separators; "()" is the identity.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  bool is_identity() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  /// Cycle lengths sorted ascending, fixed points included as 1s.
  std::vector<std::size_t> cycle_type() const;
  /// Disjoint cycles with 0-based points, each starting at its least point.
  std::vector<std::vector<Point>> cycles() const;
  /// 1-based cycle notation, fixed points omitted, "()" for the identity.
  std::string to_string() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<Point> images_;
};

/// Commutator a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

/// Parse newline- or semicolon-separated generators in cycle notation.
/// Blank lines and lines starting with '#' are ignored.
std::vector<Perm> parse_generators(std::string_view text, std::size_t degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace endocert
