#include "endocert/algebra.hpp"

#include <stdexcept>

#include "endocert/errors.hpp"

namespace endocert {

MatF flatten(const MatF& x) {
  std::size_t d = x.rows();
  MatF r(x.ell(), 1, d * x.cols(), x.layout());
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (std::uint32_t v = x.get(i, j)) r.set(0, j * d + i, v);
  return r;
}

MatF unflatten(const MatF& row, std::size_t d) {
  MatF x(row.ell(), d, d, row.layout());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (std::uint32_t v = row.get(0, j * d + i)) x.set(i, j, v);
  return x;
}

namespace {

// Semi-echelon span: each stored row has a pivot (value 1) where all other
// stored rows are zero-or-earlier, so reducing in insertion order is exact.
class IncrementalSpan {
 public:
  IncrementalSpan(std::uint32_t ell, std::size_t len) : rows_(ell, 0, len) {}

  /// Reduce v in place; returns true if v ends up zero.
  bool reduce(MatF& v, std::vector<std::uint32_t>* coeffs = nullptr) const {
    const std::uint32_t ell = rows_.ell();
    if (coeffs) coeffs->assign(pivots_.size(), 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      std::uint32_t c = v.get(0, pivots_[i]);
      if (!c) continue;
      if (coeffs) (*coeffs)[i] = c;
      v.row_axpy(0, rows_, i, ell - c);
    }
    return v.row_is_zero(0);
  }

  bool insert(MatF v) {
    if (reduce(v)) return false;
    std::size_t p = v.leading(0);
    v.row_scale(0, v.inv(v.get(0, p)));
    rows_.append_row(v);
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return pivots_.size(); }
  MatF row(std::size_t i) const { return rows_.row(i); }

 private:
  MatF rows_;
  std::vector<std::size_t> pivots_;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// trace(lift(x)^e) mod m, entries lifted to [0, l).
std::uint64_t lifted_trace_power(const MatF& x, std::uint64_t e, std::uint64_t m) {
  const std::size_t d = x.rows();
  using IM = std::vector<std::uint64_t>;
  auto mul = [&](const IM& a, const IM& b) {
    IM c(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        std::uint64_t aik = a[i * d + k];
        if (!aik) continue;
        for (std::size_t j = 0; j < d; ++j) c[i * d + j] = (c[i * d + j] + aik * b[k * d + j]) % m;
      }
    return c;
  };
  IM base(d * d), acc(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    acc[i * d + i] = 1 % m;
    for (std::size_t j = 0; j < d; ++j) base[i * d + j] = x.get(i, j) % m;
  }
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < d; ++i) t = (t + acc[i * d + i]) % m;
  return t;
}

}  // namespace

FSubalgebra::FSubalgebra(std::uint32_t ell, std::size_t d, const std::vector<MatF>& spanning, bool verify_closed)
    : ell_(ell), d_(d), echelon_(ell, 0, d * d) {
  MatF stacked(ell, 0, d * d);
  for (const auto& m : spanning) {
    if (m.rows() != d || m.cols() != d || m.ell() != ell) throw std::invalid_argument("FSubalgebra: shape mismatch");
    stacked.append_row(flatten(m));
  }
  RrefResult rr = rref(stacked);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    MatF r = rr.reduced.row(i);
    echelon_.append_row(r);
    basis_.push_back(unflatten(r, d));
  }
  pivots_ = rr.pivots;
  if (!contains(MatF::identity(ell, d, echelon_.layout())))
    throw std::invalid_argument("FSubalgebra: span does not contain the identity");
  if (verify_closed)
    for (const auto& a : basis_)
      for (const auto& b : basis_)
        if (!contains(a * b)) throw std::invalid_argument("FSubalgebra: span is not closed under multiplication");
  commutative_ = true;
  for (std::size_t i = 0; i < basis_.size() && commutative_; ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (basis_[i] * basis_[j] != basis_[j] * basis_[i]) {
        commutative_ = false;
        break;
      }
  if (commutative_) {
    // Frobenius x -> x^l is F_l-linear on a commutative algebra of
    // characteristic l; its columns are the coordinates of b_t^l.
    const std::size_t n = dim();
    MatF F(ell, n, n);
    for (std::size_t t = 0; t < n; ++t) {
      auto c = coordinates(basis_[t].pow(ell));
      if (!c) throw InternalInconsistency("FSubalgebra: Frobenius image left the algebra");
      for (std::size_t s = 0; s < n; ++s) F.set(s, t, (*c)[s]);
    }
    std::uint64_t m = 0, lm = 1;
    while (lm < n) {
      lm *= ell;
      ++m;
    }
    radical_dim_ = kernel(F.pow(m)).rows();
    if (radical_dim_ == 0) {
      factors_ = kernel(F - MatF::identity(ell, n)).rows();
      field_ = factors_ == 1;
      if (field_) {
        field_size_ = 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (field_size_ > UINT64_MAX / ell) throw std::overflow_error("FSubalgebra: field size exceeds 64 bits");
          field_size_ *= ell;
        }
      }
    }
  } else {
    radical_dim_ = radical_basis(*this).rows();
  }
}

std::optional<std::vector<std::uint32_t>> FSubalgebra::coordinates(const MatF& x) const {
  MatF v = flatten(x);
  std::vector<std::uint32_t> c(pivots_.size(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::uint32_t a = v.get(0, pivots_[i]);
    if (!a) continue;
    c[i] = a;
    v.row_axpy(0, echelon_, i, ell_ - a);
  }
  if (!v.row_is_zero(0)) return std::nullopt;
  return c;
}

bool FSubalgebra::contains(const MatF& x) const { return coordinates(x).has_value(); }

bool FSubalgebra::same_span(const FSubalgebra& o) const {
  if (o.dim() != dim() || o.d_ != d_ || o.ell_ != ell_) return false;
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

FSubalgebra centralizer_basis(const std::vector<MatF>& mats, std::uint32_t ell, std::size_t d) {
  const std::size_t n = d * d;
  if (mats.empty()) {
    std::vector<MatF> units;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        MatF e(ell, d, d);
        e.set(i, j, 1);
        units.push_back(e);
      }
    return FSubalgebra(ell, d, units);
  }
  // Row (g, i, j) of the system is entry (i, j) of X M_g - M_g X, with the
  // unknown X_(a,b) in column b*d + a.
  MatF sys(ell, mats.size() * n, n);
  for (std::size_t g = 0; g < mats.size(); ++g) {
    const MatF& M = mats[g];
    if (M.rows() != d || M.cols() != d || M.ell() != ell)
      throw std::invalid_argument("centralizer_basis: matrices must be d x d over one field");
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t row = g * n + j * d + i;
        for (std::size_t k = 0; k < d; ++k) {
          if (std::uint32_t v = M.get(k, j)) sys.set(row, k * d + i, (sys.get(row, k * d + i) + v) % ell);
          if (std::uint32_t v = M.get(i, k))
            sys.set(row, j * d + k, (sys.get(row, j * d + k) + ell - v) % ell);
        }
      }
  }
  MatF ker = kernel(sys);
  std::vector<MatF> basis;
  for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(unflatten(ker.row(r), d));
  try {
    return FSubalgebra(ell, d, basis, true);
  } catch (const std::invalid_argument& e) {
    throw InternalInconsistency(std::string("centralizer is not a unital algebra: ") + e.what());
  }
}

FSubalgebra algebra_closure(const std::vector<MatF>& seed, std::uint32_t ell, std::size_t d) {
  IncrementalSpan span(ell, d * d);
  std::vector<MatF> found;
  auto add = [&](const MatF& x) {
    if (span.insert(flatten(x))) found.push_back(x);
  };
  add(MatF::identity(ell, d));
  for (const auto& s : seed) {
    if (s.rows() != d || s.cols() != d || s.ell() != ell)
      throw std::invalid_argument("algebra_closure: matrices must be d x d over one field");
    add(s);
  }
  // Words in the seed, extended on the right one letter at a time.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& s : seed) add(found[i] * s);
  return FSubalgebra(ell, d, found, true);
}

FieldTest is_field_algebra(const FSubalgebra& a) { return {a.is_field(), a.field_size()}; }

MatF radical_basis(const FSubalgebra& a) {
  const std::uint32_t p = a.ell();
  const std::size_t d = a.ambient_dim();
  std::vector<MatF> current = a.basis();
  unsigned top = 0;
  while (ipow(p, top + 1) <= d) ++top;
  for (unsigned i = 0; i <= top && !current.empty(); ++i) {
    const std::uint64_t pi = ipow(p, i), mod = pi * p;
    MatF g(p, a.dim(), current.size());
    for (std::size_t t = 0; t < current.size(); ++t)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::uint64_t tr = lifted_trace_power(current[t] * a.basis()[j], pi, mod);
        if (tr % pi) throw InternalInconsistency("radical: generalized trace not divisible");
        g.set(j, t, static_cast<std::uint32_t>((tr / pi) % p));
      }
    MatF ker = kernel(g);
    std::vector<MatF> next;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      MatF x(p, d, d, current[0].layout());
      for (std::size_t t = 0; t < current.size(); ++t)
        if (std::uint32_t c = ker.get(r, t)) x = x + current[t].scaled(c);
      next.push_back(x);
    }
    current = std::move(next);
  }
  MatF out(p, 0, d * d);
  for (const auto& x : current) out.append_row(flatten(x));
  return out;
}

bool double_centralizer_check(const FSubalgebra& a) {
  if (a.radical_dim() != 0) throw std::invalid_argument("double_centralizer_check: algebra is not semisimple");
  FSubalgebra c = centralizer_basis(a.basis(), a.ell(), a.ambient_dim());
  FSubalgebra cc = centralizer_basis(c.basis(), a.ell(), a.ambient_dim());
  if (!cc.same_span(a)) return false;
  if (c.dim() == 1 && a.dim() != a.ambient_dim() * a.ambient_dim()) return false;
  return true;
}

}  // namespace endocert
