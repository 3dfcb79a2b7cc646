#include "endocert/matf.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "endocert/errors.hpp"

namespace endocert {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

MatF::MatF(std::uint32_t ell, std::size_t rows, std::size_t cols, Layout layout)
    : ell_(ell), rows_(rows), cols_(cols) {
  if (ell >= 65536 || !is_prime_u32(ell)) throw std::invalid_argument("MatF: modulus must be a prime below 2^16");
  if (layout == Layout::Packed && ell != 2) throw std::invalid_argument("MatF: packed layout needs l = 2");
  packed_ = ell == 2 && layout != Layout::Scalar;
  if (packed_) {
    words_ = (cols + 63) / 64;
    bits_.assign(rows * words_, 0);
  } else {
    vals_.assign(rows * cols, 0);
  }
}

MatF MatF::identity(std::uint32_t ell, std::size_t n, Layout layout) {
  MatF m(ell, n, n, layout);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatF MatF::from_rows(std::uint32_t ell, const std::vector<std::vector<long long>>& rows, Layout layout) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  MatF m(ell, rows.size(), c, layout);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("MatF: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      long long v = rows[i][j] % static_cast<long long>(ell);
      if (v < 0) v += ell;
      m.set(i, j, static_cast<std::uint32_t>(v));
    }
  }
  return m;
}

MatF MatF::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long ell, r, c;
  if (!(in >> ell >> r >> c) || ell < 2 || r < 0 || c < 0) throw ParseError("matrix text: bad header");
  if (ell >= 65536 || !is_prime_u32(static_cast<std::uint32_t>(ell))) throw ParseError("matrix text: modulus must be prime");
  MatF m(static_cast<std::uint32_t>(ell), static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (long long i = 0; i < r; ++i)
    for (long long j = 0; j < c; ++j) {
      long long v;
      if (!(in >> v)) throw ParseError("matrix text: missing entry");
      if (v < 0 || v >= ell) throw ParseError("matrix text: entry out of range");
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::uint32_t>(v));
    }
  std::string rest;
  if (in >> rest) throw ParseError("matrix text: trailing data");
  return m;
}

std::string MatF::to_text() const {
  std::ostringstream os;
  os << ell_ << ' ' << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j);
    os << '\n';
  }
  return os.str();
}

MatF MatF::with_layout(Layout layout) const {
  MatF m(ell_, rows_, cols_, layout);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, get(i, j));
  return m;
}

std::uint32_t MatF::get(std::size_t i, std::size_t j) const {
  if (packed_) return static_cast<std::uint32_t>((bits_[i * words_ + j / 64] >> (j % 64)) & 1u);
  return vals_[i * cols_ + j];
}

void MatF::set(std::size_t i, std::size_t j, std::uint32_t v) {
  if (packed_) {
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    auto& w = bits_[i * words_ + j / 64];
    w = (v & 1u) ? (w | mask) : (w & ~mask);
  } else {
    vals_[i * cols_ + j] = v % ell_;
  }
}

std::uint32_t MatF::inv(std::uint32_t a) const {
  a %= ell_;
  if (a == 0) throw std::domain_error("MatF: inverse of zero");
  // a^(ell-2) by square and multiply.
  std::uint64_t r = 1, b = a, e = ell_ - 2;
  while (e) {
    if (e & 1) r = r * b % ell_;
    b = b * b % ell_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

MatF MatF::operator*(const MatF& b) const {
  if (cols_ != b.rows_ || ell_ != b.ell_) throw std::invalid_argument("MatF: shape mismatch in product");
  MatF c(ell_, rows_, b.cols_, layout());
  if (packed_ && b.packed_) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[i * words_ + w];
        while (word) {
          std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
          word &= word - 1;
          for (std::size_t t = 0; t < c.words_; ++t) c.bits_[i * c.words_ + t] ^= b.bits_[k * b.words_ + t];
        }
      }
    return c;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < cols_; ++k) s = (s + static_cast<std::uint64_t>(get(i, k)) * b.get(k, j)) % ell_;
      c.set(i, j, static_cast<std::uint32_t>(s));
    }
  return c;
}

MatF MatF::operator+(const MatF& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_ || ell_ != b.ell_) throw std::invalid_argument("MatF: shape mismatch in sum");
  MatF c = *this;
  const MatF bb = b.packed_ == packed_ ? b : b.with_layout(layout());
  for (std::size_t i = 0; i < rows_; ++i) c.row_axpy(i, bb, i, 1);
  return c;
}

MatF MatF::operator-(const MatF& b) const { return *this + b.scaled(ell_ - 1); }

MatF MatF::scaled(std::uint32_t c) const {
  MatF m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m.row_scale(i, c);
  return m;
}

MatF MatF::transpose() const {
  MatF t(ell_, cols_, rows_, layout());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (std::uint32_t v = get(i, j)) t.set(j, i, v);
  return t;
}

MatF MatF::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("MatF: pow of non-square matrix");
  MatF r = identity(ell_, rows_, layout()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool MatF::operator==(const MatF& b) const {
  if (ell_ != b.ell_ || rows_ != b.rows_ || cols_ != b.cols_) return false;
  if (packed_ && b.packed_) return bits_ == b.bits_;
  if (!packed_ && !b.packed_) return vals_ == b.vals_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j) != b.get(i, j)) return false;
  return true;
}

bool MatF::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!row_is_zero(i)) return false;
  return true;
}

bool MatF::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

void MatF::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed_) {
    for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
  } else {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(vals_[a * cols_ + j], vals_[b * cols_ + j]);
  }
}

void MatF::row_axpy(std::size_t dst, const MatF& src, std::size_t src_row, std::uint32_t c) {
  c %= ell_;
  if (c == 0) return;
  if (packed_ && src.packed_) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= src.bits_[src_row * src.words_ + w];
    return;
  }
  if (!packed_ && !src.packed_) {
    std::uint32_t* d = &vals_[dst * cols_];
    const std::uint32_t* s = &src.vals_[src_row * src.cols_];
    for (std::size_t j = 0; j < cols_; ++j)
      if (s[j]) d[j] = static_cast<std::uint32_t>((d[j] + static_cast<std::uint64_t>(c) * s[j]) % ell_);
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j)
    if (std::uint32_t s = src.get(src_row, j))
      set(dst, j, static_cast<std::uint32_t>((get(dst, j) + static_cast<std::uint64_t>(c) * s) % ell_));
}

void MatF::row_scale(std::size_t i, std::uint32_t c) {
  c %= ell_;
  if (packed_) {
    if (c == 0)
      for (std::size_t w = 0; w < words_; ++w) bits_[i * words_ + w] = 0;
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j)
    vals_[i * cols_ + j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(vals_[i * cols_ + j]) * c % ell_);
}

std::size_t MatF::leading(std::size_t i) const {
  if (packed_) {
    for (std::size_t w = 0; w < words_; ++w)
      if (std::uint64_t word = bits_[i * words_ + w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    return cols_;
  }
  for (std::size_t j = 0; j < cols_; ++j)
    if (vals_[i * cols_ + j]) return j;
  return cols_;
}

MatF MatF::row(std::size_t i) const {
  MatF r(ell_, 1, cols_, layout());
  r.row_axpy(0, *this, i, 1);
  return r;
}

void MatF::append_row(const MatF& r) {
  if (r.cols_ != cols_ || r.ell_ != ell_) throw std::invalid_argument("MatF: append_row shape mismatch");
  ++rows_;
  if (packed_) bits_.resize(rows_ * words_, 0);
  else vals_.resize(rows_ * cols_, 0);
  row_axpy(rows_ - 1, r.packed_ == packed_ ? r : r.with_layout(layout()), 0, 1);
}

RrefResult rref(const MatF& m) {
  RrefResult out{m, 0, {}};
  MatF& a = out.reduced;
  const std::uint32_t ell = a.ell();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.get(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    if (ell != 2) a.row_scale(r, a.inv(a.get(r, c)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      if (std::uint32_t v = a.get(i, c)) a.row_axpy(i, a, r, ell - v);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const MatF& m) { return rref(m).rank; }

MatF kernel(const MatF& m) {
  RrefResult rr = rref(m);
  const std::uint32_t ell = m.ell();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  MatF k(ell, 0, m.cols(), m.layout());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    MatF v(ell, 1, m.cols(), m.layout());
    v.set(0, f, 1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      if (std::uint32_t x = rr.reduced.get(i, f)) v.set(0, rr.pivots[i], (ell - x) % ell);
    k.append_row(v);
  }
  return k;
}

std::optional<MatF> solve(const MatF& m, const MatF& b) {
  if (b.rows() != m.rows() || b.cols() != 1 || b.ell() != m.ell())
    throw std::invalid_argument("solve: dimension mismatch");
  MatF aug(m.ell(), m.rows(), m.cols() + 1, m.layout());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::uint32_t v = m.get(i, j)) aug.set(i, j, v);
    aug.set(i, m.cols(), b.get(i, 0));
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  MatF x(m.ell(), m.cols(), 1, m.layout());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x.set(rr.pivots[i], 0, rr.reduced.get(i, m.cols()));
  return x;
}

std::uint64_t matrix_order(const MatF& m, std::uint64_t limit) {
  if (m.rows() != m.cols() || rank(m) != m.rows()) return 0;
  MatF p = m;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace endocert
