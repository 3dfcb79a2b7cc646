#include "endocert/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "endocert/errors.hpp"
#include "endocert/matf.hpp"

namespace endocert {

std::string to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "}";
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  static const BigInt zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("IntPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  IntPoly run() {
    std::vector<BigInt> c;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exp] = term();
      if (c.size() <= exp) c.resize(exp + 1);
      c[exp] += sign * coef;
    }
    return IntPoly(std::move(c));
  }

 private:
  std::pair<BigInt, std::size_t> term() {
    BigInt coef = 1;
    bool have_num = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_num = true;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || (peek() != 'x' && peek() != 'X')) fail("expected x after '*'");
      }
    }
    std::size_t exp = 0;
    if (pos_ < s_.size() && (peek() == 'x' || peek() == 'X')) {
      ++pos_;
      exp = 1;
      skip();
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        BigInt e = number();
        if (e > 100000) fail("exponent too large");
        exp = static_cast<std::size_t>(e);
      }
    } else if (!have_num) {
      fail("expected a term");
    }
    return {coef, exp};
  }

  BigInt number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

IntPoly parse_coefficient_list(std::string_view text) {
  std::vector<BigInt> c;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw ParseError("coefficient list: bad token '" + tok + "'");
    for (std::size_t j = i; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j]))) throw ParseError("coefficient list: bad token '" + tok + "'");
    c.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
    tok.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') flush();
    else if (ch == '[' || ch == ']') continue;
    else tok += ch;
  }
  flush();
  if (c.empty()) throw ParseError("coefficient list: no coefficients");
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  IntPoly f = text.find_first_of("xX") != std::string_view::npos ? ExprParser(text).run() : parse_coefficient_list(text);
  if (f.is_zero()) throw ParseError("polynomial is zero");
  return f;
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& a : c_) g = boost::multiprecision::gcd(g, BigInt(abs(a)));
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> r;
  for (const auto& a : c_) r.push_back(a / g);
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    BigInt m = abs(a);
    if (s.empty()) s += a < 0 ? "-" : "";
    else s += a < 0 ? " - " : " + ";
    if (i == 0) s += m.str();
    else {
      if (m != 1) s += m.str() + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lb = b.leading();
  const std::size_t db = bc.size() - 1;
  while (r.size() >= bc.size()) {
    BigInt lr = r.back();
    std::size_t shift = r.size() - bc.size();
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_squarefree(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_squarefree: need a nonconstant polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

ModPoly rem(ModPoly a, const ModPoly& m, std::uint64_t p) {
  const std::uint64_t li = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t q = a.back() * li % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - q) * m[i]) % p;
    trim(a);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return rem(std::move(r), m, p);
}

ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
  ModPoly r{1};
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t li = inv_mod(a.back(), p);
    for (auto& x : a) x = x * li % p;
  }
  return a;
}

ModPoly divexact(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t li = inv_mod(b.back(), p);
  ModPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    std::uint64_t c = a.back() * li % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return q;
}

}  // namespace

std::optional<Partition> degree_pattern_mod_p(const IntPoly& f, std::uint64_t p) {
  if (p < 3 || p >= (1ull << 32) || !is_prime_u32(static_cast<std::uint32_t>(p)))
    throw std::invalid_argument("degree_pattern_mod_p: p must be an odd prime below 2^32");
  if (f.degree() < 1) throw std::invalid_argument("degree_pattern_mod_p: need a nonconstant polynomial");
  const BigInt P = p;
  ModPoly a;
  for (const auto& c : f.coeffs()) {
    BigInt r = c % P;
    if (r < 0) r += P;
    a.push_back(static_cast<std::uint64_t>(r));
  }
  if (a.back() == 0) return std::nullopt;
  trim(a);
  ModPoly da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * (i % p) % p);
  trim(da);
  if (da.empty() || gcd_mod(a, da, p).size() != 1) return std::nullopt;

  Partition out;
  ModPoly rest = gcd_mod(a, {}, p);  // monic copy
  ModPoly h{0, 1};
  for (unsigned d = 1; 2 * d <= rest.size() - 1; ++d) {
    h = powmod(h, p, rest, p);
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    ModPoly g = gcd_mod(rest, hx, p);
    if (g.size() > 1) {
      for (std::size_t k = 0; k < (g.size() - 1) / d; ++k) out.push_back(d);
      rest = divexact(rest, g, p);
      h = rem(h, rest, p);
    }
  }
  if (rest.size() > 1) out.push_back(static_cast<unsigned>(rest.size() - 1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace endocert
