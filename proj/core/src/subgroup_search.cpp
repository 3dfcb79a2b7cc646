#include "endocert/subgroup_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "endocert/gfq.hpp"

namespace endocert {

const char* to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::LagrangeShortcut: return "lagrange-shortcut";
    case SearchMethod::ActionBacktrack: return "action-backtrack";
    default: return "exhaustive";
  }
}

namespace {

BigInt factorial(int r) {
  BigInt f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

// g on points [0, n) and s on points [n, n+r).
Perm direct_sum(const Perm& g, const Perm& s) {
  std::size_t n = g.degree(), r = s.degree();
  std::vector<Point> img(n + r);
  for (std::size_t x = 0; x < n; ++x) img[x] = g(static_cast<Point>(x));
  for (std::size_t x = 0; x < r; ++x) img[n + x] = static_cast<Point>(n + s(static_cast<Point>(x)));
  return Perm(img);
}

Perm restrict_to(const Perm& p, std::size_t from, std::size_t count) {
  std::vector<Point> img(count);
  for (std::size_t x = 0; x < count; ++x) img[x] = static_cast<Point>(p(static_cast<Point>(from + x)) - from);
  return Perm(img);
}

// Partitions of r into parts, ascending, each listed once.
void partitions(int r, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= r; ++p) {
    cur.push_back(p);
    partitions(r - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Perm> class_representatives(int r, std::uint64_t order_divides) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(r, 1, cur, parts);
  std::vector<Perm> reps;
  for (const auto& lam : parts) {
    std::uint64_t l = 1;
    for (int c : lam) l = std::lcm(l, static_cast<std::uint64_t>(c));
    if (order_divides % l) continue;
    std::vector<std::vector<Point>> cycles;
    Point next = 0;
    for (int c : lam) {
      std::vector<Point> cyc;
      for (int i = 0; i < c; ++i) cyc.push_back(next++);
      cycles.push_back(cyc);
    }
    reps.push_back(Perm::from_cycles(static_cast<std::size_t>(r), cycles));
  }
  return reps;
}

std::vector<Perm> generating_pair_or_original(const PermGroup& g, std::uint64_t seed) {
  if (g.generators().size() <= 2) return g.generators();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64; ++t) {
    Perm a = g.random_element(rng), b = g.random_element(rng);
    if (PermGroup(g.degree(), {a, b}).order() == g.order()) return {a, b};
  }
  return g.generators();
}

bool transitive_images(const std::vector<Perm>& sig, int r) {
  std::vector<bool> seen(r, false);
  std::vector<Point> q{0};
  seen[0] = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& s : sig) {
      Point y = s(q[i]);
      if (!seen[y]) {
        seen[y] = true;
        q.push_back(y);
      }
    }
  return static_cast<int>(q.size()) == r;
}

// Image in the r-point action of an element x of G, read off the diagonal
// group whose projection to G is an isomorphism.
Perm image_in_action(const PermGroup& diag, std::size_t n, std::size_t r, const Perm& x) {
  Perm h = x;
  Perm acc(n + r);
  std::vector<Perm> ts;
  for (std::size_t l = 0; l < n; ++l) {
    const Perm& t = diag.transversal(l, h(static_cast<Point>(l)));
    ts.push_back(t);
    h = h * restrict_to(t, 0, n).inverse();
  }
  for (std::size_t i = ts.size(); i-- > 0;) acc = acc * ts[i];
  return restrict_to(acc, n, r);
}

struct Backtrack {
  const PermGroup& g;
  int r;
  std::vector<Perm> gens;
  std::vector<BigInt> prefix_order;
  std::vector<std::vector<Perm>> candidates;
  std::uint64_t budget;
  std::uint64_t used = 0;
  bool exhausted = false;
  std::vector<Perm> chosen;
  std::optional<PermGroup> found_diag;

  bool run(std::size_t i, const PermGroup* diag) {
    for (const auto& s : candidates[i]) {
      if (++used > budget) {
        exhausted = true;
        return false;
      }
      chosen.push_back(s);
      bool last = i + 1 == gens.size();
      if (last && !transitive_images(chosen, r)) {
        chosen.pop_back();
        continue;
      }
      Perm d = direct_sum(gens[i], s);
      PermGroup next = diag ? diag->with_generator(d) : PermGroup(g.degree() + r, {d});
      if (next.order() == prefix_order[i]) {
        if (last) {
          found_diag = std::move(next);
          return true;
        }
        if (run(i + 1, &next)) return true;
        if (exhausted) return false;
      }
      chosen.pop_back();
    }
    return false;
  }
};

std::vector<Perm> stabilizer_generators(const std::vector<Perm>& gens, const std::vector<Perm>& sig, int r) {
  std::size_t n = gens[0].degree();
  std::vector<std::optional<Perm>> coset(r);
  coset[0] = Perm(n);
  std::vector<Point> q{0};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Point y = sig[k](q[i]);
      if (!coset[y]) {
        coset[y] = *coset[q[i]] * gens[k];
        q.push_back(y);
      }
    }
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (int j = 0; j < r; ++j)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm s = *coset[j] * gens[k] * coset[sig[k](static_cast<Point>(j))]->inverse();
      if (!s.is_identity() && seen.insert(s).second) out.push_back(s);
    }
  return out;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> subgroup_orders_exhaustive(const PermGroup& g, std::uint64_t limit) {
  if (g.order() > BigInt(limit)) return std::nullopt;
  std::uint64_t N = g.order_u64();
  using Bits = std::vector<bool>;
  auto closure = [&](const std::vector<Perm>& gens) {
    Bits in(N, false);
    std::vector<Perm> q{Perm(g.degree())};
    in[g.element_index(q[0])] = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const auto& s : gens) {
        Perm y = q[i] * s;
        std::uint64_t k = g.element_index(y);
        if (!in[k]) {
          in[k] = true;
          q.push_back(std::move(y));
        }
      }
    return std::make_pair(in, q.size());
  };
  struct Sub {
    std::vector<Perm> gens;
    Bits members;
    std::uint64_t order;
  };
  std::vector<Sub> subs;
  std::set<Bits> known;
  std::vector<Perm> elements;
  g.for_each_element([&](const Perm& x) { elements.push_back(x); });
  std::vector<Perm> cyclic_gens;
  for (const auto& x : elements) {
    auto [bits, ord] = closure({x});
    if (known.insert(bits).second) {
      subs.push_back({{x}, bits, ord});
      cyclic_gens.push_back(x);
    }
  }
  const std::size_t cap = 20000;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& c : cyclic_gens) {
      if (subs[i].members[g.element_index(c)]) continue;
      std::vector<Perm> gens = subs[i].gens;
      gens.push_back(c);
      auto [bits, ord] = closure(gens);
      if (known.insert(bits).second) {
        subs.push_back({gens, bits, ord});
        if (subs.size() > cap) return std::nullopt;
      }
    }
  }
  std::vector<std::uint64_t> orders;
  for (const auto& s : subs) orders.push_back(s.order);
  std::sort(orders.begin(), orders.end());
  return orders;
}

IndexSearchResult subgroup_of_index(const PermGroup& g, int r, const SearchOptions& opts) {
  if (r < 2) throw std::invalid_argument("subgroup_of_index: r must be at least 2");
  IndexSearchResult res;
  if (g.order() % r != 0) {
    res.exists = Tri::False;
    res.method = SearchMethod::LagrangeShortcut;
    res.note = std::to_string(r) + " does not divide |G|";
    return res;
  }
  if (opts.allow_shortcut) {
    Tri simple = opts.known_simple;
    if (simple == Tri::Unknown) simple = is_simple(g, opts.group).value;
    if (simple == Tri::True && factorial(r) % g.order() != 0) {
      res.exists = Tri::False;
      res.method = SearchMethod::LagrangeShortcut;
      res.note = "G is simple and |G| does not divide " + std::to_string(r) + "!";
      return res;
    }
  }
  if (r <= opts.max_backtrack_degree) {
    res.method = SearchMethod::ActionBacktrack;
    Backtrack bt{g, r, generating_pair_or_original(g, opts.group.seed), {}, {}, opts.budget, 0, false, {}, {}};
    for (std::size_t i = 0; i < bt.gens.size(); ++i) {
      std::vector<Perm> pre(bt.gens.begin(), bt.gens.begin() + static_cast<long>(i) + 1);
      bt.prefix_order.push_back(PermGroup(g.degree(), pre).order());
    }
    std::vector<Point> pts(r);
    std::iota(pts.begin(), pts.end(), Point{0});
    std::vector<Perm> sym;
    do sym.emplace_back(pts);
    while (std::next_permutation(pts.begin(), pts.end()));
    for (std::size_t i = 0; i < bt.gens.size(); ++i) {
      std::uint64_t o = bt.gens[i].order();
      if (i == 0) {
        bt.candidates.push_back(class_representatives(r, o));
        continue;
      }
      std::vector<Perm> c;
      for (const auto& s : sym)
        if (o % s.order() == 0) c.push_back(s);
      bt.candidates.push_back(std::move(c));
    }
    if (bt.gens.empty()) {
      res.exists = Tri::False;
      res.note = "trivial group";
      return res;
    }
    if (bt.run(0, nullptr)) {
      res.exists = Tri::True;
      res.certificate = stabilizer_generators(bt.gens, bt.chosen, r);
      PermGroup h(g.degree(), res.certificate);
      if (g.order() / h.order() != r)
        throw InternalInconsistency("subgroup search: certificate has index " + BigInt(g.order() / h.order()).str());
      for (const auto& x : g.generators())
        res.action.push_back(image_in_action(*bt.found_diag, g.degree(), static_cast<std::size_t>(r), x));
      res.note = std::to_string(bt.used) + " candidate images tested";
      return res;
    }
    if (!bt.exhausted) {
      res.exists = Tri::False;
      res.note = "no transitive action on " + std::to_string(r) + " points; " + std::to_string(bt.used) +
                 " candidate images tested";
      return res;
    }
    res.note = "backtrack budget exhausted";
  }
  if (opts.allow_exhaustive && g.order() <= BigInt(opts.exhaustive_limit)) {
    if (auto orders = subgroup_orders_exhaustive(g, opts.exhaustive_limit)) {
      std::uint64_t want = g.order_u64() / static_cast<std::uint64_t>(r);
      res.method = SearchMethod::Exhaustive;
      res.exists = std::find(orders->begin(), orders->end(), want) != orders->end() ? Tri::True : Tri::False;
      res.note = std::to_string(orders->size()) + " subgroups enumerated";
      return res;
    }
  }
  res.exists = Tri::Unknown;
  if (res.note.empty()) res.note = "index beyond backtrack range and group beyond exhaustive range";
  return res;
}

SubgroupSearchReport min_proper_subgroup_index(const PermGroup& g, int bound, const SearchOptions& opts) {
  if (bound < 2) throw std::invalid_argument("min_proper_subgroup_index: bound must be at least 2");
  SubgroupSearchReport rep;
  rep.bound = bound;
  SearchOptions o = opts;
  if (o.allow_shortcut && o.known_simple == Tri::Unknown) o.known_simple = is_simple(g, o.group).value;
  int rank = 0;  // strongest method used so far
  std::vector<std::string> notes;
  for (int r = 2; r <= bound; ++r) {
    IndexSearchResult s = subgroup_of_index(g, r, o);
    int m = static_cast<int>(s.method);
    rank = std::max(rank, m);
    if (s.exists == Tri::Unknown) {
      rep.complete = false;
      notes.push_back("index " + std::to_string(r) + ": " + s.note);
      continue;
    }
    if (s.exists == Tri::True) {
      rep.found_index = r;
      rep.method = s.method;
      rep.certificate = std::move(s.certificate);
      rep.action = std::move(s.action);
      notes.push_back("index " + std::to_string(r) + ": " + s.note);
      break;
    }
  }
  if (!rep.found_index) rep.method = static_cast<SearchMethod>(rank);
  for (std::size_t i = 0; i < notes.size(); ++i) rep.note += (i ? "; " : "") + notes[i];
  if (rep.note.empty()) rep.note = rep.found_index ? "" : "no subgroup of index <= " + std::to_string(bound);
  return rep;
}

bool psl2_subgroup_criterion(std::uint64_t q) {
  auto [p, k] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("psl2_subgroup_criterion: q is not a prime power");
  if (p == 2) throw std::invalid_argument("psl2_subgroup_criterion: q must be odd");
  if (q < 5) throw std::invalid_argument("psl2_subgroup_criterion: q must be at least 5");
  // (q-1)/2 <= 4: a subgroup of index <= 4 would map the simple group
  // PSL_2(F_q) nontrivially into S_4, which is solvable.
  if (q < 11) return true;
  // Otherwise a proper subgroup of index dividing (q-1)/2 forces one of:
  bool divides_60 = 60 % ((q + 1) * q) == 0;
  // (q+1)q(q-1)/2 <= ((q-1)/2)(q-1)sqrt(q), i.e. (q+1)^2 q <= (q-1)^2 after
  // cancelling (q-1)/2 and a factor sqrt(q).
  BigInt lhs = BigInt(q + 1) * (q + 1) * q;
  BigInt rhs = BigInt(q - 1) * (q - 1);
  bool order_bound = lhs <= rhs;
  return !(divides_60 || order_bound);
}

}  // namespace endocert
