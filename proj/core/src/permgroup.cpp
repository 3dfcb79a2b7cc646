#include "endocert/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace endocert {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree) {
  for (auto& p : generators) {
    if (p.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!p.is_identity()) gens_.push_back(std::move(p));
  }
  init_levels();
  for (const auto& s : gens_) {
    std::size_t first = 0;
    while (first < degree_ && s(static_cast<Point>(first)) == first) ++first;
    add_strong_generator(s, 0, first);
  }
  complete_from(degree_ == 0 ? 0 : degree_ - 1);
  finish();
}

void PermGroup::init_levels() {
  levels_.assign(degree_, Level{});
  for (std::size_t l = 0; l < degree_; ++l) {
    Level& L = levels_[l];
    L.where.assign(degree_, -1);
    L.orbit.push_back(static_cast<Point>(l));
    L.where[l] = 0;
    L.trans.emplace_back(degree_);
    L.trans_inv.emplace_back(degree_);
  }
}

void PermGroup::extend_orbit(std::size_t level) {
  Level& L = levels_[level];
  // Breadth-first from the existing orbit so old transversals stay valid.
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    Point beta = L.orbit[i];
    for (const auto& s : L.gens) {
      Point img = s(beta);
      if (L.where[img] >= 0) continue;
      L.where[img] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(img);
      Perm u = L.trans[i] * s;
      L.trans_inv.push_back(u.inverse());
      L.trans.push_back(std::move(u));
    }
  }
}

void PermGroup::add_strong_generator(const Perm& p, std::size_t from, std::size_t to) {
  // p fixes the points 0..to-1, so it belongs to levels from..to.
  for (std::size_t l = from; l <= to && l < degree_; ++l) {
    levels_[l].gens.push_back(p);
    extend_orbit(l);
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm h, std::size_t from) const {
  for (std::size_t l = from; l < degree_; ++l) {
    Point beta = h(static_cast<Point>(l));
    int w = levels_[l].where[beta];
    if (w < 0) return {std::move(h), l};
    if (w > 0) h = h * levels_[l].trans_inv[w];
  }
  return {std::move(h), degree_};
}

void PermGroup::complete_from(std::size_t start) {
  if (degree_ == 0) return;
  long i = static_cast<long>(start);
  while (i >= 0) {
    Level& L = levels_[i];
    bool restarted = false;
    for (std::size_t k = 0; k < L.orbit.size() && !restarted; ++k) {
      for (std::size_t si = 0; si < L.gens.size(); ++si) {
        const Perm& s = L.gens[si];
        Point img = s(L.orbit[k]);
        Perm h = L.trans[k] * s * L.trans_inv[L.where[img]];
        if (h.is_identity()) continue;
        auto [res, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j >= degree_) continue;
        add_strong_generator(res, static_cast<std::size_t>(i) + 1, j);
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void PermGroup::finish() {
  order_ = 1;
  stride_.assign(degree_, 0);
  bool fits = true;
  std::uint64_t acc = 1;
  for (std::size_t l = 0; l < degree_; ++l) {
    order_ *= levels_[l].orbit.size();
    stride_[l] = acc;
    if (fits) {
      std::uint64_t s = levels_[l].orbit.size();
      if (acc > UINT64_MAX / s) fits = false;
      else acc *= s;
    }
  }
}

std::uint64_t PermGroup::order_u64() const {
  if (order_ > BigInt(UINT64_MAX)) throw std::overflow_error("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return strip(p, 0).second >= degree_;
}

PermGroup PermGroup::with_generator(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  if (contains(p)) {
    PermGroup copy = *this;
    if (!p.is_identity()) copy.gens_.push_back(p);
    return copy;
  }
  PermGroup g = *this;
  g.gens_.push_back(p);
  std::size_t first = 0;
  while (first < degree_ && p(static_cast<Point>(first)) == first) ++first;
  g.add_strong_generator(p, 0, first);
  g.complete_from(first);
  g.finish();
  return g;
}

const Perm& PermGroup::transversal(std::size_t level, Point beta) const {
  int w = levels_.at(level).where.at(beta);
  if (w < 0) throw std::out_of_range("point not in basic orbit");
  return levels_[level].trans[w];
}

PermGroup PermGroup::base_prefix_stabilizer(std::size_t k) const {
  if (k >= degree_) return trivial(degree_);
  return PermGroup(degree_, levels_[k].gens);
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<int> comp(degree_, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (comp[x] >= 0) continue;
    std::vector<Point> orb{static_cast<Point>(x)};
    comp[x] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& s : gens_) {
        Point y = s(orb[i]);
        if (comp[y] < 0) {
          comp[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || levels_[0].orbit.size() == degree_;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (std::size_t l = degree_; l-- > 0;) {
    const Level& L = levels_[l];
    if (L.orbit.size() == 1) continue;
    std::uniform_int_distribution<std::size_t> d(0, L.orbit.size() - 1);
    g = g * L.trans[d(rng)];
  }
  return g;
}

std::uint64_t PermGroup::element_index(const Perm& p) const {
  std::uint64_t idx = 0;
  Perm h = p;
  for (std::size_t l = 0; l < degree_; ++l) {
    int w = levels_[l].where[h(static_cast<Point>(l))];
    if (w < 0) throw std::invalid_argument("element_index: not a group element");
    idx += static_cast<std::uint64_t>(w) * stride_[l];
    if (w > 0) h = h * levels_[l].trans_inv[w];
  }
  return idx;
}

Perm PermGroup::element_at(std::uint64_t index) const {
  std::vector<std::size_t> digit(degree_);
  for (std::size_t l = 0; l < degree_; ++l) {
    std::size_t s = levels_[l].orbit.size();
    digit[l] = index % s;
    index /= s;
  }
  Perm g(degree_);
  for (std::size_t l = degree_; l-- > 0;)
    if (digit[l]) g = g * levels_[l].trans[digit[l]];
  return g;
}

void PermGroup::for_each_element(const std::function<void(const Perm&)>& visit) const {
  (void)order_u64();
  // Nontrivial levels, deepest first; the shallowest level varies fastest.
  std::vector<std::size_t> lv;
  for (std::size_t l = degree_; l-- > 0;)
    if (levels_[l].orbit.size() > 1) lv.push_back(l);
  std::vector<Perm> acc(lv.size() + 1, Perm(degree_));
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == lv.size()) {
      visit(acc[depth]);
      return;
    }
    const Level& L = levels_[lv[depth]];
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      acc[depth + 1] = acc[depth] * L.trans[k];
      rec(depth + 1);
    }
  };
  rec(0);
}

// ---- free functions ---------------------------------------------------------

std::size_t transitivity_degree(const PermGroup& g) {
  std::size_t n = g.degree();
  std::size_t k = 0;
  while (k < n && g.basic_orbit(k).size() == n - k) ++k;
  return k;
}

bool is_abelian(const PermGroup& g) {
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elements) {
  PermGroup n = PermGroup::trivial(g.degree());
  std::deque<Perm> queue;
  for (const auto& e : elements) queue.push_back(e);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    if (n.contains(x)) continue;
    n = n.with_generator(x);
    for (const auto& s : g.generators()) queue.push_back(s.inverse() * x * s);
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = commutator(gs[i], gs[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> out{g};
  for (;;) {
    PermGroup d = derived_subgroup(out.back());
    if (d.order() == out.back().order()) break;
    out.push_back(std::move(d));
  }
  return out;
}

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, std::uint64_t limit) {
  std::uint64_t order = g.order_u64();
  if (order > limit) throw std::length_error("conjugacy_classes: group exceeds exhaustive limit");
  std::vector<bool> seen(order, false);
  std::vector<ConjugacyClass> out;
  std::vector<Perm> ginv;
  for (const auto& s : g.generators()) ginv.push_back(s.inverse());
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    if (seen[idx]) continue;
    Perm rep = g.element_at(idx);
    seen[idx] = true;
    std::vector<Perm> frontier{rep};
    std::uint64_t size = 1;
    while (!frontier.empty()) {
      Perm x = std::move(frontier.back());
      frontier.pop_back();
      for (std::size_t k = 0; k < ginv.size(); ++k) {
        Perm c = ginv[k] * x * g.generators()[k];
        std::uint64_t ci = g.element_index(c);
        if (seen[ci]) continue;
        seen[ci] = true;
        ++size;
        frontier.push_back(std::move(c));
      }
    }
    out.push_back({std::move(rep), size});
  }
  return out;
}

namespace {

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

}  // namespace

SimplicityResult is_simple(const PermGroup& g, const GroupCheckOptions& opts) {
  SimplicityResult r;
  if (g.is_trivial()) {
    r.value = Tri::False;
    r.method = "exact";
    r.evidence = "trivial group";
    return r;
  }
  if (is_abelian(g)) {
    bool p = g.order() <= BigInt(UINT64_MAX) && is_prime_u64(g.order_u64());
    r.value = p ? Tri::True : Tri::False;
    r.method = "exact";
    r.evidence = p ? "cyclic of prime order" : "abelian of composite order";
    return r;
  }
  PermGroup d = derived_subgroup(g);
  if (d.order() != g.order()) {
    r.value = Tri::False;
    r.method = "exact";
    r.evidence = "derived subgroup of order " + d.order().str() + " is proper and nontrivial";
    return r;
  }
  if (g.order() <= BigInt(opts.exhaustive_limit)) {
    for (const auto& c : conjugacy_classes(g, opts.exhaustive_limit)) {
      if (c.representative.is_identity()) continue;
      PermGroup n = normal_closure(g, {c.representative});
      if (n.order() != g.order()) {
        r.value = Tri::False;
        r.method = "exact";
        r.evidence = "normal closure of " + c.representative.to_string() + " has order " + n.order().str();
        return r;
      }
    }
    r.value = Tri::True;
    r.method = "exact";
    r.evidence = "every nontrivial conjugacy class normally generates G";
    return r;
  }
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.random_trials; ++t) {
    Perm x = g.random_element(rng);
    if (x.is_identity()) continue;
    PermGroup n = normal_closure(g, {x});
    if (n.order() != g.order()) {
      r.value = Tri::False;
      r.method = "random-certificate";
      r.evidence = "normal closure of " + x.to_string() + " has order " + n.order().str();
      return r;
    }
  }
  if (opts.oracle) {
    if (auto f = opts.oracle(g)) {
      r.value = *f ? Tri::True : Tri::False;
      r.method = "random+cited-fact";
      r.evidence = std::to_string(opts.random_trials) + " random normal closures were all of G; cited fact decides";
      return r;
    }
  }
  r.value = Tri::Unknown;
  r.method = "unknown";
  r.evidence = "group exceeds exhaustive limit and no cited fact applies";
  return r;
}

namespace {

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& s : b.generators())
    if (!a.contains(s)) return false;
  return true;
}

}  // namespace

NormalIndexResult has_normal_subgroup_of_index_dividing(const PermGroup& g, std::uint64_t m,
                                                        const GroupCheckOptions& opts) {
  NormalIndexResult r;
  if (m == 0) throw std::invalid_argument("index bound must be positive");
  if (m == 1) {
    r.value = Tri::False;
    r.evidence = "only index 1 divides 1";
    return r;
  }
  PermGroup d = derived_subgroup(g);
  BigInt ab = g.order() / d.order();
  BigInt gc = boost::multiprecision::gcd(ab, BigInt(m));
  if (gc > 1) {
    r.value = Tri::True;
    r.evidence = "abelianization has order " + ab.str() + ", sharing factor " + gc.str() + " with " +
                 std::to_string(m);
    return r;
  }
  if (g.order() <= BigInt(opts.exhaustive_limit)) {
    std::vector<PermGroup> closures;
    for (const auto& c : conjugacy_classes(g, opts.exhaustive_limit)) {
      if (c.representative.is_identity()) continue;
      PermGroup n = normal_closure(g, {c.representative});
      bool dup = false;
      for (const auto& x : closures)
        if (same_subgroup(x, n)) dup = true;
      if (!dup) closures.push_back(std::move(n));
    }
    std::vector<PermGroup> lattice{PermGroup::trivial(g.degree())};
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (lattice.size() > 10000) {
        r.value = Tri::Unknown;
        r.evidence = "normal subgroup lattice too large";
        return r;
      }
      for (const auto& c : closures) {
        std::vector<Perm> gens = lattice[i].generators();
        gens.insert(gens.end(), c.generators().begin(), c.generators().end());
        PermGroup j(g.degree(), gens);
        bool dup = false;
        for (const auto& x : lattice)
          if (same_subgroup(x, j)) dup = true;
        if (!dup) lattice.push_back(std::move(j));
      }
    }
    for (const auto& n : lattice) {
      BigInt idx = g.order() / n.order();
      if (idx > 1 && BigInt(m) % idx == 0) {
        r.value = Tri::True;
        r.evidence = "normal subgroup of order " + n.order().str() + " has index " + idx.str();
        return r;
      }
    }
    r.value = Tri::False;
    r.evidence = "exhaustive: " + std::to_string(lattice.size()) + " normal subgroups, none of index dividing " +
                 std::to_string(m);
    return r;
  }
  SimplicityResult s = is_simple(g, opts);
  if (s.value == Tri::True) {
    bool divides = BigInt(m) % g.order() == 0;
    r.value = divides ? Tri::True : Tri::False;
    r.evidence = "simple (" + s.method + "): only normal subgroups are 1 and G";
    return r;
  }
  r.value = Tri::Unknown;
  r.evidence = "group exceeds exhaustive limit and simplicity is " + std::string(to_string(s.value));
  return r;
}

std::optional<std::uint64_t> center_order(const PermGroup& g, const GroupCheckOptions& opts) {
  if (g.order() <= BigInt(opts.exhaustive_limit)) {
    std::uint64_t count = 0;
    g.for_each_element([&](const Perm& x) {
      for (const auto& s : g.generators())
        if (x * s != s * x) return;
      ++count;
    });
    return count;
  }
  if (!is_abelian(g) && is_simple(g, opts).value == Tri::True) return 1;
  return std::nullopt;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& m) {
  std::vector<std::uint64_t> out;
  BigInt r = m;
  for (std::uint64_t d = 2; BigInt(d) * d <= r; ++d) {
    if (r % d != 0) continue;
    out.push_back(d);
    while (r % d == 0) r /= d;
  }
  if (r > 1) out.push_back(static_cast<std::uint64_t>(r));
  return out;
}

}  // namespace endocert
