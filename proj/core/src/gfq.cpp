#include "endocert/gfq.hpp"

#include <stdexcept>

namespace endocert {

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Multiply by x modulo the monic polynomial m (ascending coefficients).
std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& m,
                                   std::uint32_t p) {
  std::size_t k = a.size();
  std::uint32_t top = a[k - 1];
  std::vector<std::uint32_t> r(k);
  for (std::size_t i = k; i-- > 1;) r[i] = a[i - 1];
  r[0] = 0;
  for (std::size_t i = 0; i < k; ++i) r[i] = (r[i] + (p - m[i]) * top) % p;
  return r;
}

}  // namespace

GFq::GFq(std::uint32_t q) : q_(q) {
  if (q > 65536) throw std::invalid_argument("GFq: q too large");
  auto [p, k] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("GFq: q is not a prime power");
  p_ = p;
  k_ = k;
  exp_.assign(q - 1, 0);
  log_.assign(q, -1);
  if (k == 1) {
    // Prime field: the modulus is x - g for the least primitive root g.
    for (std::uint32_t g = 1; g < p; ++g) {
      std::vector<std::int32_t> lg(q, -1);
      std::uint32_t v = 1;
      bool prim = true;
      for (std::uint32_t e = 0; e < q - 1; ++e) {
        if (lg[v] >= 0) {
          prim = false;
          break;
        }
        lg[v] = static_cast<std::int32_t>(e);
        exp_[e] = v;
        v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * g % p);
      }
      if (prim) {
        log_ = std::move(lg);
        modulus_ = {p - g, 1};
        return;
      }
    }
  }
  // Scan moduli x^k + c_{k-1} x^{k-1} + ... + c_0 in order and keep the
  // first for which x has multiplicative order q - 1.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; k > 1 && code < count; ++code) {
    std::vector<std::uint32_t> m(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[k - 1 - i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (m[0] == 0) continue;
    std::vector<std::uint32_t> cur(k, 0);
    cur[0] = 1;
    std::vector<std::int32_t> lg(q, -1);
    bool ok = true;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
      std::uint32_t v = undigits(cur, p);
      if (lg[v] >= 0) {
        ok = false;
        break;
      }
      lg[v] = static_cast<std::int32_t>(e);
      exp_[e] = v;
      cur = times_x(cur, m, p);
    }
    if (!ok) continue;
    modulus_ = m;
    log_ = std::move(lg);
    return;
  }
  throw std::logic_error("GFq: no primitive polynomial found");
}

std::uint32_t GFq::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = digits(a, p_, k_), db = digits(b, p_, k_);
  for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return undigits(da, p_);
}

std::uint32_t GFq::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  auto da = digits(a, p_, k_);
  for (auto& x : da) x = (p_ - x) % p_;
  return undigits(da, p_);
}

std::uint32_t GFq::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t GFq::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("GFq: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace endocert
