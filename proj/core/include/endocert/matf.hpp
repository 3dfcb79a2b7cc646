// Dense matrices over a prime field F_l.
//
// For l = 2 rows are packed 64 entries per word and elimination is word-wide
// XOR. Any prime l < 2^16 uses one residue per entry. The scalar layout can
// also be requested for l = 2 so both kernels can be compared.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace endocert {

enum class Layout { Auto, Packed, Scalar };

class MatF {
 public:
  MatF() = default;
  /// Zero matrix. Throws std::invalid_argument unless ell is a prime < 2^16.
  MatF(std::uint32_t ell, std::size_t rows, std::size_t cols, Layout layout = Layout::Auto);

  static MatF identity(std::uint32_t ell, std::size_t n, Layout layout = Layout::Auto);
  /// Entries are reduced mod ell (negative values allowed).
  static MatF from_rows(std::uint32_t ell, const std::vector<std::vector<long long>>& rows,
                        Layout layout = Layout::Auto);
  /// Text format: first line "ell rows cols", then rows of residues.
  static MatF parse(std::string_view text);
  std::string to_text() const;

  std::uint32_t ell() const { return ell_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool packed() const { return packed_; }
  Layout layout() const { return packed_ ? Layout::Packed : Layout::Scalar; }
  /// Same entries in the other storage layout.
  MatF with_layout(Layout layout) const;

  std::uint32_t get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::uint32_t v);

  MatF operator*(const MatF& b) const;
  MatF operator+(const MatF& b) const;
  MatF operator-(const MatF& b) const;
  MatF scaled(std::uint32_t c) const;
  MatF transpose() const;
  MatF pow(std::uint64_t e) const;
  bool operator==(const MatF& b) const;
  bool operator!=(const MatF& b) const { return !(*this == b); }
  bool is_zero() const;
  bool is_identity() const;

  // Row primitives used by elimination and span bookkeeping.
  void swap_rows(std::size_t a, std::size_t b);
  /// row dst += c * src.row(src_row); src must share ell, cols and layout.
  void row_axpy(std::size_t dst, const MatF& src, std::size_t src_row, std::uint32_t c);
  void row_scale(std::size_t i, std::uint32_t c);
  /// Index of the first nonzero entry of row i, or cols() if the row is zero.
  std::size_t leading(std::size_t i) const;
  bool row_is_zero(std::size_t i) const { return leading(i) == cols_; }
  /// Copy of row i as a 1 x cols matrix.
  MatF row(std::size_t i) const;
  void append_row(const MatF& r);

  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t ell_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  bool packed_ = true;
  std::size_t words_ = 0;  // words per row when packed
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> vals_;
};

struct RrefResult {
  MatF reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot columns are taken left to right; within a
/// column the topmost remaining nonzero row is the pivot.
RrefResult rref(const MatF& m);
std::size_t rank(const MatF& m);
/// Basis of the right kernel {x : m x = 0}, one basis vector per row,
/// one vector per free column in increasing column order.
MatF kernel(const MatF& m);
/// Some x with m x = b (b a column vector), or nullopt.
std::optional<MatF> solve(const MatF& m, const MatF& b);
/// Multiplicative order of an invertible square matrix (0 if not invertible
/// or the order exceeds limit).
std::uint64_t matrix_order(const MatF& m, std::uint64_t limit = 1000000);

bool is_prime_u32(std::uint32_t p);

}  // namespace endocert
