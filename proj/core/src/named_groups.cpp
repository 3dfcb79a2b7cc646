#include "endocert/named_groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "endocert/gfq.hpp"

namespace endocert::groups {

namespace {

Perm cycle_on(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<Point> c;
  for (std::size_t i = from; i < to; ++i) c.push_back(static_cast<Point>(i));
  return Perm::from_cycles(n, {c});
}

PermGroup from_text(std::size_t n, const std::vector<const char*>& gens) {
  std::vector<Perm> ps;
  for (const char* g : gens) ps.push_back(Perm::parse(g, n));
  return PermGroup(n, ps);
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(n);
  return PermGroup(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)});
}

PermGroup alternating(std::size_t n) {
  if (n <= 2) return PermGroup::trivial(n);
  if (n == 3) return PermGroup(n, {cycle_on(n, 0, 3)});
  Perm c = n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n);
  return PermGroup(n, {cycle_on(n, 0, 3), c});
}

PermGroup cyclic(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(n);
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup dihedral(std::size_t n) {
  if (n <= 2) return symmetric(n);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, 0, n), Perm(refl)});
}

PermGroup affine_line(std::uint32_t p, std::uint32_t k) {
  GFq f(p);
  if (f.k() != 1 || (p - 1) % k) throw std::invalid_argument("affine_line: need prime p and k | p-1");
  std::vector<Point> t(p), m(p);
  std::uint32_t a = f.power_of_generator((p - 1) / k);
  for (std::uint32_t x = 0; x < p; ++x) {
    t[x] = (x + 1) % p;
    m[x] = f.mul(a, x);
  }
  return PermGroup(p, {Perm(t), Perm(m)});
}

PermGroup psl2(std::uint32_t q) {
  GFq f(q);
  if (f.p() == 2) throw std::invalid_argument("psl2: q must be odd");
  const std::uint32_t inf = q;
  std::vector<Point> t(q + 1), s(q + 1), d(q + 1);
  for (std::uint32_t x = 0; x < q; ++x) {
    t[x] = f.add(x, f.one());
    s[x] = x == 0 ? inf : f.neg(f.inv(x));
    d[x] = f.mul(f.power_of_generator(2), x);
  }
  t[inf] = inf;
  s[inf] = 0;
  d[inf] = inf;
  std::vector<Perm> gens{Perm(t), Perm(s)};
  if (f.k() > 1) gens.push_back(Perm(d));
  return PermGroup(q + 1, gens);
}

PermGroup gl3_2_on_7() {
  // Elementary transvections v -> v + v_j e_i for i != j.
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> img(7);
      for (unsigned v = 1; v < 8; ++v) {
        unsigned w = v ^ (((v >> j) & 1u) << i);
        img[v - 1] = w - 1;
      }
      gens.emplace_back(img);
    }
  return PermGroup(7, gens);
}

PermGroup psl2_11_on_11() {
  return from_text(11, {"(2,10)(3,4)(5,9)(6,7)", "(1,2,11)(3,5,10)(6,8,9)"});
}

PermGroup agl3_2() {
  std::vector<Perm> gens;
  std::vector<Point> tr(8);
  for (unsigned v = 0; v < 8; ++v) tr[v] = v ^ 1u;
  gens.emplace_back(tr);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> img(8);
      for (unsigned v = 0; v < 8; ++v) img[v] = v ^ (((v >> j) & 1u) << i);
      gens.emplace_back(img);
    }
  return PermGroup(8, gens);
}

PermGroup mathieu(int n) {
  switch (n) {
    case 11:
      return from_text(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
    case 12:
      return from_text(12, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                            "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"});
    case 22:
      return from_text(22, {"(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
                            "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
                            "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"});
    case 23:
      return from_text(23, {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"});
    case 24:
      return from_text(24, {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
                            "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"});
    default:
      throw std::invalid_argument("mathieu: n must be 11, 12, 22, 23 or 24");
  }
}

PermGroup a7_on_15() {
  using Line = std::array<Point, 3>;
  using Plane = std::vector<Line>;  // sorted lines with sorted points
  auto normalize = [](Plane pl) {
    for (auto& l : pl) std::sort(l.begin(), l.end());
    std::sort(pl.begin(), pl.end());
    return pl;
  };
  auto apply = [&](const Perm& g, const Plane& pl) {
    Plane out;
    for (const auto& l : pl) out.push_back({g(l[0]), g(l[1]), g(l[2])});
    return normalize(out);
  };
  // Lines {i, i+1, i+3} mod 7.
  Plane base;
  for (Point i = 0; i < 7; ++i) base.push_back({i, (i + 1) % 7, (i + 3) % 7});
  base = normalize(base);

  PermGroup a7 = alternating(7);
  std::vector<Plane> orbit{base};
  std::map<Plane, Point> where{{base, 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : a7.generators()) {
      Plane img = apply(g, orbit[i]);
      if (where.emplace(img, static_cast<Point>(orbit.size())).second) orbit.push_back(img);
    }
  std::vector<Perm> gens;
  for (const auto& g : a7.generators()) {
    std::vector<Point> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = where.at(apply(g, orbit[i]));
    gens.emplace_back(img);
  }
  return PermGroup(orbit.size(), gens);
}

PermGroup gl2_regular(std::uint32_t p) {
  using M = std::array<std::uint32_t, 4>;  // row-major a b / c d
  auto mul = [p](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
             (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  std::vector<M> elems;
  std::map<M, Point> index;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p) {
            index[{a, b, c, d}] = static_cast<Point>(elems.size());
            elems.push_back({a, b, c, d});
          }
  GFq f(p);
  std::vector<M> gens{{1, 1, 0, 1}, {1, 0, 1, 1}, {f.generator(), 0, 0, 1}};
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    std::vector<Point> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = index.at(mul(g, elems[i]));
    perms.emplace_back(img);
  }
  return PermGroup(elems.size(), perms);
}

std::vector<NamedGroup> candidates_for_degree(std::size_t n) {
  std::vector<NamedGroup> out;
  out.push_back({"S" + std::to_string(n), symmetric(n)});
  out.push_back({"A" + std::to_string(n), alternating(n)});
  auto prime = [](std::size_t m) {
    if (m < 2) return false;
    for (std::size_t d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  };
  if (prime(n) && n >= 5) {
    std::uint32_t p = static_cast<std::uint32_t>(n);
    for (std::uint32_t k = p - 1; k > 2; --k)
      if ((p - 1) % k == 0) out.push_back({"F" + std::to_string(k * p), affine_line(p, k)});
  }
  if (n == 7) out.push_back({"PSL2(7)", gl3_2_on_7()});
  if (n == 8) {
    out.push_back({"AGL3(2)", agl3_2()});
    out.push_back({"PSL2(7)", psl2(7)});
  }
  if (n == 11) {
    out.push_back({"M11", mathieu(11)});
    out.push_back({"PSL2(11)", psl2_11_on_11()});
  }
  if (n == 12) {
    out.push_back({"M12", mathieu(12)});
    out.push_back({"PSL2(11)", psl2(11)});
  }
  if (n == 15) out.push_back({"A7", a7_on_15()});
  if (n == 22) out.push_back({"M22", mathieu(22)});
  if (n == 23) out.push_back({"M23", mathieu(23)});
  if (n == 24) out.push_back({"M24", mathieu(24)});
  for (std::uint32_t q : {5u, 9u, 13u})
    if (n == q + 1) out.push_back({"PSL2(" + std::to_string(q) + ")", psl2(q)});
  if (n >= 3) out.push_back({"D" + std::to_string(n), dihedral(n)});
  out.push_back({"C" + std::to_string(n), cyclic(n)});
  return out;
}

}  // namespace endocert::groups
