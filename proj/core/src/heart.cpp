#include "endocert/heart.hpp"

#include <stdexcept>

#include "endocert/errors.hpp"

namespace endocert {

HeartModule::HeartModule(std::size_t n) : n_(n) {
  if (n < 3) throw std::invalid_argument("heart: need at least 3 points");
}

std::vector<std::uint8_t> HeartModule::coordinates(const std::vector<std::uint8_t>& w) const {
  if (w.size() != n_) throw std::invalid_argument("heart: vector length mismatch");
  std::uint8_t parity = 0;
  for (auto x : w) parity ^= (x & 1);
  if (parity) throw std::invalid_argument("heart: vector is not in the zero-sum hyperplane");
  std::vector<std::uint8_t> c(dim());
  const std::uint8_t flip = (n_ % 2 == 0) ? (w[n_ - 2] & 1) : 0;
  for (std::size_t i = 0; i < dim(); ++i) c[i] = (w[i] & 1) ^ flip;
  return c;
}

MatF HeartModule::act(const Perm& s) const {
  if (s.degree() != n_) throw std::invalid_argument("heart: permutation degree mismatch");
  const std::size_t h = dim();
  MatF m(2, h, h);
  std::vector<std::uint8_t> w(n_);
  for (std::size_t i = 0; i < h; ++i) {
    std::fill(w.begin(), w.end(), 0);
    w[s(static_cast<Point>(i))] ^= 1;
    w[s(static_cast<Point>(n_ - 1))] ^= 1;
    auto c = coordinates(w);
    for (std::size_t r = 0; r < h; ++r)
      if (c[r]) m.set(r, i, 1);
  }
  return m;
}

std::vector<MatF> HeartModule::act_all(const std::vector<Perm>& gens) const {
  std::vector<MatF> out;
  out.reserve(gens.size());
  for (const auto& s : gens) out.push_back(act(s));
  return out;
}

std::string to_string(CentralizerKind k) {
  switch (k) {
    case CentralizerKind::Scalars: return "scalars";
    case CentralizerKind::Field: return "field";
    case CentralizerKind::NonField: return "non-field";
  }
  return "?";
}

CentralizerReport heart_centralizer(const PermGroup& g) {
  HeartModule h(g.degree());
  FSubalgebra c = centralizer_basis(h.act_all(g.generators()), 2, h.dim());
  unsigned t = transitivity_degree(g);
  bool hyp = (h.n() % 2 == 1) ? t >= 2 : t >= 3;
  CentralizerKind kind = c.dim() == 1 ? CentralizerKind::Scalars
                         : c.is_field() ? CentralizerKind::Field
                                        : CentralizerKind::NonField;
  if (hyp && kind != CentralizerKind::Scalars)
    throw InternalInconsistency("heart centralizer has dimension " + std::to_string(c.dim()) +
                                " for a group of transitivity " + std::to_string(t));
  std::uint64_t fs = kind == CentralizerKind::NonField ? 0 : c.field_size();
  return {std::move(c), kind, fs, t, hyp};
}

FSubalgebra heart_group_algebra(const PermGroup& g) {
  HeartModule h(g.degree());
  return algebra_closure(h.act_all(g.generators()), 2, h.dim());
}

}  // namespace endocert
