#include "endocert/galois.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <thread>

#include "endocert/matf.hpp"

namespace endocert {

std::string CycleTypeCensus::to_text() const {
  std::string s = "degree " + std::to_string(degree) + "\nsampled " + std::to_string(sampled) + "\nlast_prime " +
                  std::to_string(last_prime) + "\nexcluded";
  for (auto p : excluded) s += " " + std::to_string(p);
  s += "\n";
  for (const auto& [part, n] : counts) s += to_string(part) + " " + std::to_string(n) + "\n";
  return s;
}

namespace {

std::uint64_t next_odd_prime(std::uint64_t p) {
  p = p < 3 ? 3 : p + (p % 2 == 0 ? 1 : 2);
  while (!is_prime_u32(static_cast<std::uint32_t>(p))) p += 2;
  return p;
}

// Patterns for the next batch of primes, computed in parallel, in prime order.
template <class Fn>
auto pattern_batch(std::uint64_t& cursor, std::size_t count, Fn fn) {
  std::vector<std::uint64_t> primes;
  for (std::size_t i = 0; i < count; ++i) primes.push_back(cursor = next_odd_prime(cursor));
  using R = decltype(fn(std::uint64_t{}));
  std::vector<R> out(primes.size());
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < primes.size(); i += workers) out[i] = fn(primes[i]);
    }));
  for (auto& j : jobs) j.get();
  return std::make_pair(primes, out);
}

double chi_square_p(double x, unsigned dof) {
  if (dof == 0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x));
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto& self, unsigned left, unsigned maxpart) -> void {
    if (left == 0) {
      out.emplace_back(cur.rbegin(), cur.rend());
      return;
    }
    for (unsigned k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Elements of S_n with cycle type p: n! / prod k^{m_k} m_k!.
BigInt class_count(const Partition& p, unsigned n) {
  BigInt den = 1;
  std::map<unsigned, unsigned> mult;
  for (auto k : p) ++mult[k];
  for (auto [k, m] : mult) {
    for (unsigned i = 0; i < m; ++i) den *= k;
    den *= factorial(m);
  }
  return factorial(n) / den;
}

std::string fmt(const char* f, double a, unsigned b, double c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace

CycleTypeCensus census(const IntPoly& f, std::size_t prime_budget) {
  if (prime_budget == 0) throw std::invalid_argument("census: prime budget must be positive");
  if (!is_squarefree(f)) throw std::invalid_argument("census: polynomial has a repeated factor");
  CycleTypeCensus c;
  c.degree = static_cast<std::size_t>(f.degree());
  std::uint64_t cursor = 2;
  while (c.sampled < prime_budget) {
    auto [primes, pats] = pattern_batch(cursor, prime_budget - c.sampled + 8,
                                        [&](std::uint64_t p) { return degree_pattern_mod_p(f, p); });
    for (std::size_t i = 0; i < primes.size() && c.sampled < prime_budget; ++i) {
      c.last_prime = primes[i];
      if (!pats[i]) {
        c.excluded.push_back(primes[i]);
        continue;
      }
      ++c.counts[*pats[i]];
      ++c.sampled;
    }
  }
  return c;
}

Partition cycle_partition(const Perm& p) {
  auto ct = p.cycle_type();
  return Partition(ct.begin(), ct.end());
}

CycleTypeDistribution cycle_type_distribution(const PermGroup& g, std::uint64_t limit) {
  CycleTypeDistribution d;
  d.order = g.order();
  const unsigned n = static_cast<unsigned>(g.degree());
  const BigInt nf = factorial(n);
  if (n >= 2 && (d.order == nf || d.order * 2 == nf)) {
    bool alt = d.order * 2 == nf;
    for (const auto& p : partitions_of(n)) {
      if (alt && (n - p.size()) % 2 != 0) continue;
      d.counts[p] = class_count(p, n);
    }
    return d;
  }
  if (d.order > limit)
    throw std::invalid_argument("cycle_type_distribution: group of order " + d.order.str() + " exceeds the class limit");
  for (const auto& cl : conjugacy_classes(g, limit)) d.counts[cycle_partition(cl.representative)] += cl.size;
  return d;
}

std::vector<GroupHypothesis> identify(const CycleTypeCensus& c, const std::vector<groups::NamedGroup>& candidates,
                                      const IdentifyOptions& opts) {
  if (c.sampled == 0) throw std::invalid_argument("identify: empty census");
  std::vector<GroupHypothesis> out;
  bool transitive_seen = false;
  for (const auto& [p, k] : c.counts) {
    Partition n1{1, static_cast<unsigned>(c.degree - 1)};
    if (p == Partition{static_cast<unsigned>(c.degree)} || (c.degree > 2 && p == n1)) transitive_seen = true;
  }
  std::vector<BigRational> likelihood;
  for (const auto& cand : candidates) {
    if (cand.group.degree() != c.degree)
      throw std::invalid_argument("identify: candidate " + cand.name + " has the wrong degree");
    GroupHypothesis h;
    h.name = cand.name;
    h.generators = cand.group.generators();
    h.order = cand.group.order();
    h.transitivity_evidence = transitive_seen;
    CycleTypeDistribution dist;
    try {
      dist = cycle_type_distribution(cand.group, opts.class_limit);
    } catch (const std::invalid_argument&) {
      h.evidence = "not evaluated: group order exceeds the class limit";
      out.push_back(std::move(h));
      likelihood.push_back(0);
      continue;
    }
    h.evaluated = true;
    for (const auto& [p, k] : c.counts)
      if (!dist.counts.count(p)) h.unexplained.push_back(p);

    // Goodness of fit; cells with expected count below 5 are pooled.
    const double N = static_cast<double>(c.sampled);
    struct Cell {
      double expected, observed;
    };
    std::vector<Cell> cells;
    Cell pool{0, 0};
    for (const auto& [p, k] : dist.counts) {
      double e = N * static_cast<double>(BigRational(k, dist.order));
      auto it = c.counts.find(p);
      double o = it == c.counts.end() ? 0.0 : static_cast<double>(it->second);
      if (e < 5) {
        pool.expected += e;
        pool.observed += o;
      } else {
        cells.push_back({e, o});
      }
    }
    if (pool.expected > 0) {
      if (pool.expected >= 5 || cells.empty()) {
        cells.push_back(pool);
      } else {
        auto smallest = std::min_element(cells.begin(), cells.end(),
                                         [](const Cell& a, const Cell& b) { return a.expected < b.expected; });
        smallest->expected += pool.expected;
        smallest->observed += pool.observed;
      }
    }
    for (const auto& cell : cells) h.chi_square += (cell.observed - cell.expected) * (cell.observed - cell.expected) / cell.expected;
    h.dof = cells.empty() ? 0 : static_cast<unsigned>(cells.size() - 1);
    h.p_value = chi_square_p(h.chi_square, h.dof);
    h.matched = h.unexplained.empty() && h.p_value >= opts.p_threshold;
    if (!h.unexplained.empty()) {
      h.evidence = "rejected: observed pattern " + to_string(h.unexplained.front()) + " is not a cycle type of the group";
    } else {
      h.evidence = fmt("chi-square %.4f on %u degrees of freedom, p = %.6g", h.chi_square, h.dof, h.p_value);
      if (!h.matched) h.evidence += " (below threshold)";
    }
    BigRational lik = 0;
    if (h.matched) {
      lik = 1;
      for (const auto& [p, k] : c.counts) {
        BigRational q(dist.counts.at(p), dist.order);
        for (std::size_t i = 0; i < k; ++i) lik *= q;
      }
    }
    likelihood.push_back(lik);
    out.push_back(std::move(h));
  }
  BigRational total = 0;
  for (const auto& l : likelihood) total += l;
  if (total > 0) {
    BigRational shrink(BigInt(c.sampled), BigInt(c.sampled + 1));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].confidence = likelihood[i] / total * shrink;
  }
  return out;
}

JointCensus joint_census(const IntPoly& f, const IntPoly& h, std::size_t prime_budget) {
  if (prime_budget == 0) throw std::invalid_argument("joint_census: prime budget must be positive");
  if (!is_squarefree(f) || !is_squarefree(h)) throw std::invalid_argument("joint_census: polynomial has a repeated factor");
  JointCensus j;
  std::uint64_t cursor = 2;
  while (j.sampled < prime_budget) {
    auto [primes, pats] = pattern_batch(cursor, prime_budget - j.sampled + 8, [&](std::uint64_t p) {
      return std::make_pair(degree_pattern_mod_p(f, p), degree_pattern_mod_p(h, p));
    });
    for (std::size_t i = 0; i < primes.size() && j.sampled < prime_budget; ++i) {
      const auto& [a, b] = pats[i];
      if (!a || !b) continue;
      ++j.counts[{*a, *b}];
      ++j.first[*a];
      ++j.second[*b];
      ++j.sampled;
    }
  }
  // Independence test on the table with sparse rows and columns pooled.
  auto pooled = [&](const std::map<Partition, std::size_t>& m) {
    std::map<Partition, std::size_t> idx;
    std::size_t next = 0;
    bool pool = false;
    for (const auto& [p, k] : m)
      if (k >= 5) idx[p] = next++;
      else pool = true;
    std::size_t pool_idx = next;
    if (pool) ++next;
    for (const auto& [p, k] : m)
      if (k < 5) idx[p] = pool_idx;
    return std::make_pair(idx, next);
  };
  auto [ri, rows] = pooled(j.first);
  auto [ci, cols] = pooled(j.second);
  std::vector<double> obs(rows * cols, 0), rs(rows, 0), cs(cols, 0);
  for (const auto& [pq, k] : j.counts) {
    std::size_t r = ri.at(pq.first), c = ci.at(pq.second);
    obs[r * cols + c] += static_cast<double>(k);
    rs[r] += static_cast<double>(k);
    cs[c] += static_cast<double>(k);
  }
  const double N = static_cast<double>(j.sampled);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      double e = rs[r] * cs[c] / N;
      if (e > 0) j.chi_square += (obs[r * cols + c] - e) * (obs[r * cols + c] - e) / e;
    }
  j.dof = static_cast<unsigned>((rows > 0 ? rows - 1 : 0) * (cols > 0 ? cols - 1 : 0));
  j.p_value = chi_square_p(j.chi_square, j.dof);
  return j;
}

}  // namespace endocert
