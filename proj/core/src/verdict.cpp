#include "endocert/verdict.hpp"

#include <algorithm>
#include <stdexcept>

#include "endocert/matf.hpp"
#include "endocert/named_groups.hpp"
#include "endocert/subgroup_search.hpp"

namespace endocert {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::EndIsZ: return "END_IS_Z";
    case Outcome::End0SimpleQAlgebra: return "END0_SIMPLE_Q_ALGEBRA";
    case Outcome::End0MatrixOverQ: return "END0_MATRIX_OVER_Q";
    case Outcome::SupersingularPossible: return "SUPERSINGULAR_POSSIBLE";
    case Outcome::ProductOfEllipticCurvesPossible: return "PRODUCT_OF_ELLIPTIC_CURVES_POSSIBLE";
    case Outcome::HomVanishes: return "HOM_VANISHES";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::Assumed: return "assumed (cited fact)";
    case Status::Heuristic: return "heuristic";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

void Verdict::add(ChecklistEntry e) {
  if (!find(e.hypothesis)) checklist.push_back(std::move(e));
}

const ChecklistEntry* Verdict::find(const std::string& hypothesis) const {
  for (const auto& e : checklist)
    if (e.hypothesis == hypothesis) return &e;
  return nullptr;
}

namespace {

ChecklistEntry fact_entry(const std::string& hypothesis, const std::string& id, const std::string& evidence = {}) {
  const FactRecord& f = FactsTable::builtin().at(id);
  return {hypothesis, Status::Assumed, f.citation, evidence.empty() ? f.statement : evidence, id};
}

ChecklistEntry computed(const std::string& hypothesis, bool holds, const std::string& method, std::string evidence) {
  return {hypothesis, holds ? Status::Verified : Status::Failed, "computed: " + method, std::move(evidence), {}};
}

ChecklistEntry tri_entry(const std::string& hypothesis, Tri holds, const std::string& method, std::string evidence) {
  Status s = holds == Tri::True ? Status::Verified : holds == Tri::False ? Status::Failed : Status::Unknown;
  return {hypothesis, s, "computed: " + method, std::move(evidence), {}};
}

Tri negate(Tri t) { return t == Tri::True ? Tri::False : t == Tri::False ? Tri::True : Tri::Unknown; }

std::vector<std::uint64_t> divisors_above_one(std::uint64_t g) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 2; i <= g; ++i)
    if (g % i == 0) d.push_back(i);
  return d;
}

bool is_prime64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

using IntMat = std::vector<std::vector<BigInt>>;

IntMat identity_int(std::size_t n) {
  IntMat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMat power(IntMat base, std::uint64_t e) {
  IntMat r = identity_int(base.size());
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      unsigned a = 0;
      while (m % p == 0) {
        m /= p;
        ++a;
      }
      f.emplace_back(p, a);
    }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Companion matrix of the cyclotomic polynomial of p^a.
IntMat cyclotomic_companion(std::uint64_t p, unsigned a) {
  const std::uint64_t step = ipow(p, a - 1), k = (p - 1) * step;
  IntMat c(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 1; i < k; ++i) c[i][i - 1] = 1;
  for (std::uint64_t j = 0; j < k; j += step) c[j][k - 1] = -1;
  return c;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

GroupCheckOptions check_options(std::uint64_t seed) {
  GroupCheckOptions o;
  o.seed = seed;
  o.oracle = facts_simplicity_oracle();
  return o;
}

ChecklistEntry simplicity_entry(const SimplicityResult& s, const std::optional<Recognition>& rec) {
  const std::string hyp = "G is a nonabelian simple group";
  if (s.value == Tri::True && s.method.find("cited") != std::string::npos) {
    std::string id = rec && rec->name == "M23" ? "m23-simple" : "m24-simple";
    return fact_entry(hyp, id, s.evidence);
  }
  return tri_entry(hyp, s.value, "simplicity (" + s.method + ")", s.evidence);
}

// Finite subgroups of H_p^* are solvable: GL(2,F_2) and GL(2,F_3) are
// solvable and the reduction kernels are torsion free up to order 2.
ChecklistEntry quaternion_units_solvable() {
  bool s2 = is_solvable(groups::gl2_regular(2)), s3 = is_solvable(groups::gl2_regular(3));
  ChecklistEntry e = fact_entry("every finite subgroup of H_p^* is solvable", "minkowski-serre");
  e.evidence = std::string("derived series: GL(2,F_2) (order 6) ") + (s2 ? "solvable" : "NOT solvable") +
               ", GL(2,F_3) (order 48) " + (s3 ? "solvable" : "NOT solvable") + "; reduction kernels via " +
               "Minkowski-Serre";
  if (!s2 || !s3) e.status = Status::Failed;
  return e;
}

// Some prime divides |G| but not |GL(k, F_2)|, so every map G -> GL(k, F_2)
// from a simple G is trivial.
ChecklistEntry no_map_to_gl2(const PermGroup& g, std::uint64_t k) {
  BigInt gl = gl2_order(k);
  std::vector<std::uint64_t> witnesses;
  for (auto p : prime_divisors(g.order()))
    if (gl % p != 0) witnesses.push_back(p);
  std::string hyp = "every homomorphism G -> GL(" + std::to_string(k) + ",F_2) is trivial";
  std::string ev = "|GL(" + std::to_string(k) + ",F_2)| = " + gl.str();
  if (!witnesses.empty()) ev += " is prime to " + std::to_string(witnesses.back()) + ", which divides |G|";
  return computed(hyp, !witnesses.empty(), "order comparison", ev);
}

std::uint64_t largest_prime(const BigInt& n) {
  auto ps = prime_divisors(n);
  return ps.empty() ? 1 : ps.back();
}

}  // namespace

// ---- GL(n, Z) ----

GlOrderResult gl_element_of_order(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("gl_element_of_order: n and m must be positive");
  GlOrderResult r;
  auto fac = factor(m);
  unsigned a0 = 0;
  std::uint64_t sum = 0;
  for (auto [p, a] : fac) {
    if (p == 2) a0 = a;
    else sum += (p - 1) * ipow(p, a - 1);
  }
  if (a0 >= 2) sum += ipow(2, a0 - 1);
  r.min_dimension = std::max<std::uint64_t>(sum, 1);
  r.exists = r.min_dimension <= n;
  if (!r.exists) return r;

  std::vector<IntMat> blocks;
  for (auto [p, a] : fac)
    if (p != 2) blocks.push_back(cyclotomic_companion(p, a));
  if (a0 >= 2) blocks.push_back(cyclotomic_companion(2, a0));
  if (a0 == 1) {
    if (!blocks.empty()) {
      for (auto& row : blocks.front())
        for (auto& x : row) x = -x;
    } else {
      blocks.push_back(IntMat{{BigInt(-1)}});
    }
  }
  IntMat w = identity_int(n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) w[at + i][at + j] = b[i][j];
    at += b.size();
  }
  const IntMat id = identity_int(n);
  if (power(w, m) != id) throw InternalInconsistency("GL(n,Z) witness does not have order dividing m");
  for (auto [p, a] : fac)
    if (power(w, m / p) == id) throw InternalInconsistency("GL(n,Z) witness has order smaller than m");
  r.witness = std::move(w);
  r.verified_order = m;
  return r;
}

BigInt gl2_order(std::uint64_t k) {
  BigInt r = 1, two_k = BigInt(1) << k;
  for (std::uint64_t i = 0; i < k; ++i) r *= two_k - (BigInt(1) << i);
  return r;
}

MultiplicationBound multiplication_bound(std::uint64_t dim_x, std::uint64_t field_degree) {
  if (dim_x == 0 || field_degree == 0) throw std::invalid_argument("multiplication_bound: arguments must be positive");
  if ((2 * dim_x) % field_degree != 0)
    throw std::invalid_argument("multiplication_bound: field degree " + std::to_string(field_degree) +
                                " does not divide 2 dim X = " + std::to_string(2 * dim_x));
  std::uint64_t d = 2 * dim_x / field_degree;
  return {d, d * d};
}

// ---- Recognition ----

std::optional<Recognition> recognize_group(const PermGroup& g, Tri simple) {
  const std::size_t n = g.degree();
  const BigInt order = g.order();
  const std::size_t t = transitivity_degree(g);
  if (t >= 4) {
    Recognition r;
    r.fact_ids = {"four-transitive-classification"};
    r.evidence = std::to_string(t) + "-transitive of order " + order.str();
    if (order == factorial(n)) r.name = "S" + std::to_string(n);
    else if (order * 2 == factorial(n)) r.name = "A" + std::to_string(n);
    else if (n == 11 && order == 7920) r.name = "M11";
    else if (n == 12 && order == 95040) r.name = "M12";
    else if (n == 23 && order == 10200960) r.name = "M23";
    else if (n == 24 && order == 244823040) r.name = "M24";
    else return std::nullopt;
    return r;
  }
  if (simple != Tri::True) return std::nullopt;
  static const std::vector<std::pair<std::uint64_t, const char*>> by_order = {
      {60, "A5"},     {168, "PSL2(7)"}, {360, "A6"},   {660, "PSL2(11)"},
      {1092, "PSL2(13)"}, {2520, "A7"}, {7920, "M11"}, {95040, "M12"}, {443520, "M22"}};
  for (auto [o, name] : by_order)
    if (order == o) return Recognition{name, {"simple-order-uniqueness"}, "simple of order " + order.str()};
  return std::nullopt;
}

SimplicityOracle facts_simplicity_oracle() {
  return [](const PermGroup& g) -> std::optional<bool> {
    const std::size_t n = g.degree();
    if (n != 23 && n != 24) return std::nullopt;
    const BigInt o = g.order();
    if ((n == 23 && o == 10200960) || (n == 24 && o == 244823040))
      if (transitivity_degree(g) >= 4) return true;
    return std::nullopt;
  };
}

// ---- Center ----

CenterAnalysis analyze_center(const PermGroup& g, std::size_t genus, std::uint32_t ell, std::uint64_t characteristic,
                              std::uint64_t seed) {
  if (ell != 2) throw UnsupportedError("only the 2-torsion module (l = 2) is implemented");
  const std::size_t n = g.degree();
  if (n == 4) throw UnsupportedError("n = 4: the action on the heart is not faithful");
  if (n < 3) throw std::invalid_argument("need at least 3 roots");
  if (genus != (n - 1) / 2) throw std::invalid_argument("genus does not match the degree");

  CenterAnalysis a;
  Verdict& v = a.fragment;
  v.degree = n;
  v.genus = genus;
  v.characteristic = characteristic;

  CentralizerReport rep = heart_centralizer(g);
  a.centralizer = rep.kind;
  a.centralizer_dim = rep.algebra.dim();
  a.field_size = rep.field_size;
  a.transitivity = rep.transitivity;
  std::string cdesc = "dimension " + std::to_string(a.centralizer_dim) + " over F_2: ";
  if (rep.kind == CentralizerKind::Scalars) cdesc += "the scalars F_2";
  else if (rep.kind == CentralizerKind::Field) cdesc += "a field with " + std::to_string(rep.field_size) + " elements";
  else cdesc += "not a field";
  if (rep.scalar_hypothesis) cdesc += "; agrees with the multiple-transitivity criterion";
  v.add(computed("the centralizer of G in End_F2(heart) is a field", rep.kind != CentralizerKind::NonField,
                 "commutant of the heart action", cdesc));

  GroupCheckOptions gopt = check_options(seed);
  SimplicityResult simple = is_simple(g, gopt);
  v.add(simplicity_entry(simple, recognize_group(g, simple.value)));
  SearchOptions so;
  so.known_simple = simple.value;
  so.group = gopt;

  // Field-centralizer rule: the escape clause needs a subgroup of index
  // r / 2^j > 1 with r | g, i.e. of index d for some divisor d > 1 of g.
  std::string ev;
  bool any_unknown = false;
  for (auto d : divisors_above_one(genus)) {
    IndexSearchResult r = subgroup_of_index(g, static_cast<int>(d), so);
    if (!ev.empty()) ev += "; ";
    ev += "index " + std::to_string(d) + ": " +
          (r.exists == Tri::True ? "found" : r.exists == Tri::False ? "none" : "undecided") + " (" + to_string(r.method) +
          (r.note.empty() ? "" : ", " + r.note) + ")";
    if (r.exists == Tri::True) a.small_indices_found.push_back(static_cast<int>(d));
    if (r.exists == Tri::Unknown) any_unknown = true;
  }
  if (genus < 2) ev = "g = " + std::to_string(genus) + " has no divisor > 1";
  a.small_index = !a.small_indices_found.empty() ? Tri::True : any_unknown ? Tri::Unknown : Tri::False;
  v.add(tri_entry("G has no subgroup of index d > 1 dividing g", negate(a.small_index), "subgroup search", ev));
  a.center_is_field = rep.kind != CentralizerKind::NonField && a.small_index == Tri::False;

  if (rep.kind == CentralizerKind::Scalars) {
    IndexSearchResult two = subgroup_of_index(g, 2, so);
    a.index_two = two.exists;
    v.add(tri_entry("G has no subgroup of index 2", negate(two.exists), "subgroup search",
                    std::string(to_string(two.method)) + (two.note.empty() ? "" : ": " + two.note)));
    NormalIndexResult nr = has_normal_subgroup_of_index_dividing(g, genus, gopt);
    a.normal_index_dividing_genus = nr.value;
    v.add(tri_entry("the only normal subgroup of G of index dividing g is G", negate(nr.value),
                    "normal subgroup search", nr.evidence));
    a.center_is_q = a.index_two == Tri::False && a.normal_index_dividing_genus == Tri::False;
  }

  if (a.center_is_field) {
    v.outcome = Outcome::End0SimpleQAlgebra;
    v.rule = "field-centralizer rule";
  } else {
    v.outcome = Outcome::Inconclusive;
    const ChecklistEntry* decisive = rep.kind == CentralizerKind::NonField
                                         ? v.find("the centralizer of G in End_F2(heart) is a field")
                                         : v.find("G has no subgroup of index d > 1 dividing g");
    v.reason = decisive->hypothesis + " (" + to_string(decisive->status) + ")";
  }
  if (a.center_is_q) v.caveats.push_back("the center of End^0 is Q (scalar-centralizer rule)");
  return a;
}

// ---- Jacobians ----

namespace {

void merge(Verdict& into, const Verdict& from, const std::string& prefix = {}) {
  for (auto e : from.checklist) {
    e.hypothesis = prefix + e.hypothesis;
    into.add(std::move(e));
  }
}

void finish_inconclusive(Verdict& v, const std::string& reason) {
  v.outcome = Outcome::Inconclusive;
  v.reason = reason;
  v.rule.clear();
}

void odd_genus_rule(Verdict& v, const PermGroup& g, const std::optional<Recognition>& rec, Tri simple,
                    bool transitive, std::size_t n) {
  const std::size_t genus = v.genus;
  const std::uint64_t p = v.characteristic;
  const std::string name = rec ? rec->name : "";
  v.add(fact_entry("End^0 is M_d(Q) with d | g, or M_d(H) with H ramified exactly at char K = p > 0 and infinity",
                   "odd-dimension-quaternion"));
  v.add(quaternion_units_solvable());

  // M_d(Q) with d > 1 needs a finite perfect group in GL(d,Z) mapping onto
  // G/Z; with G simple this forces an element of order P in GL(g,Z).
  bool matrix_excluded = false;
  if (simple == Tri::True) {
    std::uint64_t P = largest_prime(g.order());
    GlOrderResult gl = gl_element_of_order(genus, P);
    v.add(fact_entry("finite subgroups of GL(d,Q) are conjugate into GL(d,Z)", "gl-q-finite-subgroups"));
    v.add(computed("GL(" + std::to_string(genus) + ",Z) has no element of order " + std::to_string(P), !gl.exists,
                   "Euler-phi criterion",
                   "smallest dimension with an element of order " + std::to_string(P) + " is " +
                       std::to_string(gl.min_dimension)));
    matrix_excluded = !gl.exists;
  } else {
    v.add({"G/Z is a nonabelian simple group", Status::Unknown, "computed: simplicity", "needed to bound M_d(Q)", {}});
  }

  bool ss_excluded = false;
  if (p == 0) {
    v.add(computed("the quaternion case needs char K > 0", true, "input characteristic", "characteristic 0"));
    ss_excluded = true;
  } else if (g.order() % p != 0) {
    v.add(computed("the quaternion case needs char K to divide |G|", true, "exact order",
                   std::to_string(p) + " does not divide " + g.order().str() + ", so H_p cannot occur"));
    ss_excluded = true;
  } else if (transitive && simple == Tri::True) {
    if (name == "PSL2(7)" && n == 7) {
      v.add(fact_entry("J(C_f) is not supersingular", "psl2-7-not-supersingular"));
      ss_excluded = true;
    } else if ((name == "PSL2(11)" || name == "M11") && n == 11) {
      ChecklistEntry e = no_map_to_gl2(g, genus - 1);
      bool ok = e.status == Status::Verified;
      v.add(std::move(e));
      v.add(fact_entry("a supersingular J(C_f) makes M_g(H_p) a summand of Q[G_1] for a perfect central extension "
                       "G_1 of G by a group of order <= 2",
                       "central-extension-criterion"));
      if (name == "PSL2(11)") {
        v.add(fact_entry("Q[PSL2(11)] is split", "psl2-11-group-algebra-split"));
        v.add(fact_entry("the degree-10 rational faithful component of Q[SL2(11)] is ramified at 2",
                         "sl2-11-theta3-ramified", "theta_3 component ramified at 2, while p = " + std::to_string(p)));
      } else {
        v.add(fact_entry("M11 has trivial Schur multiplier", "m11-schur-multiplier"));
        v.add(fact_entry("Q[M11] is split", "m11-schur-indices"));
      }
      ss_excluded = ok;
    } else if (name == "M23" && n == 23) {
      v.add(fact_entry("M23 has trivial Schur multiplier", "m23-schur-multiplier"));
      v.add(fact_entry("nontrivial complex representations of M23 have degree >= 22", "m23-min-rep-degree"));
      v.add(fact_entry("projective representations of covers below the minimal degree are trivial", "feit-tits"));
      v.add(fact_entry("Q[M23] is split", "m23-schur-indices"));
      ss_excluded = true;
    } else if (name == "M24" && n == 24) {
      v.add(fact_entry("M24 has trivial Schur multiplier", "m24-schur-multiplier"));
      v.add(fact_entry("nontrivial complex representations of M24 have degree >= 23 > 22", "m24-min-rep-degree"));
      v.add(fact_entry("projective representations of covers below the minimal degree are trivial", "feit-tits"));
      ss_excluded = true;
    }
  }
  if (!ss_excluded && p != 0)
    v.add({"the supersingular case M_d(H_p) is excluded", Status::Unknown, "no applicable fact",
           "no group-specific fact rules out characteristic " + std::to_string(p), {}});

  if (matrix_excluded && ss_excluded) {
    v.outcome = Outcome::EndIsZ;
    v.rule = "odd-genus rule";
  } else if (matrix_excluded) {
    v.outcome = Outcome::SupersingularPossible;
    v.characteristics = {p};
    v.rule = "odd-genus rule";
    v.caveats.push_back("End(J) = Z unless J is supersingular with End^0 = M_d(H_" + std::to_string(p) + "), d > 1");
  } else if (ss_excluded) {
    v.outcome = Outcome::End0MatrixOverQ;
    v.rule = "odd-genus rule";
  } else {
    v.outcome = Outcome::End0SimpleQAlgebra;
    v.rule = "scalar-centralizer rule";
  }
}

void a5_rule(Verdict& v, const PermGroup& g) {
  const std::uint64_t p = v.characteristic;
  v.add(fact_entry("a quaternion algebra over Q contains no finite group mapping onto A5", "quaternion-no-a5"));
  GlOrderResult gl = gl_element_of_order(2, 5);
  v.add(computed("GL(2,Z) has no element of order 5", !gl.exists, "Euler-phi criterion",
                 "smallest dimension with an element of order 5 is " + std::to_string(gl.min_dimension)));
  v.add(fact_entry("End^0 = M_2(H) makes J(C_f) supersingular", "quaternion-matrix-supersingular"));
  std::vector<std::uint64_t> odd;
  for (auto q : prime_divisors(g.order()))
    if (q != 2) odd.push_back(q);
  v.add(computed("H is unramified outside infinity and the primes dividing |G|", true, "exact order",
                 "supersingular case needs char K in {" + join_u64(odd) + "}"));
  v.rule = "A5 genus-2 rule";
  if (gl.exists) {
    v.outcome = Outcome::End0SimpleQAlgebra;
    return;
  }
  if (p == 0 || std::find(odd.begin(), odd.end(), p) == odd.end()) {
    v.outcome = Outcome::EndIsZ;
  } else if (p == 5) {
    v.add(fact_entry("in characteristic 5, End(J(C_f)) = Z", "a5-char5"));
    v.outcome = Outcome::EndIsZ;
  } else {
    v.outcome = Outcome::SupersingularPossible;
    v.characteristics = {p};
    v.caveats.push_back(FactsTable::builtin().at("a5-char3-example").statement);
  }
}

void m22_rule(Verdict& v, const PermGroup& g) {
  v.add(fact_entry("every homomorphism from a perfect cover of M22 to PSL(10,R) is trivial", "m22-no-psl10r",
                   "excludes M_d(Q), quaternion algebras split at infinity, and M_d(H) with d in {1, 2}"));
  v.add(fact_entry("no abelian surface has a definite quaternion endomorphism algebra",
                   "no-definite-quaternion-surfaces", "excludes M_5(H)"));
  v.add(fact_entry("End^0 = M_10(H) makes J(C_f) supersingular", "quaternion-matrix-supersingular"));
  v.rule = "M22 rule";
  if (v.characteristic == 0) {
    v.outcome = Outcome::EndIsZ;
    return;
  }
  ChecklistEntry e = no_map_to_gl2(g, v.genus - 1);
  bool ok = e.status == Status::Verified;
  v.add(std::move(e));
  v.add(fact_entry("a supersingular J(C_f) gives a faithful degree-20 representation of a perfect central extension "
                   "of G by a group of order <= 2",
                   "central-extension-criterion"));
  v.add(fact_entry("no central extension of M22 of that kind has a faithful irreducible degree-20 representation",
                   "m22-no-20-dim"));
  v.outcome = ok ? Outcome::EndIsZ : Outcome::End0SimpleQAlgebra;
}

Verdict mathieu12_reduction(const CaseInput& c, Verdict v) {
  const PermGroup& g = c.group;
  PermGroup stab = g.base_prefix_stabilizer(1);
  std::vector<Perm> gens;
  for (const auto& s : stab.generators()) {
    std::vector<Point> img(11);
    for (Point i = 1; i < 12; ++i) img[i - 1] = s(i) - 1;
    gens.emplace_back(img);
  }
  PermGroup sub(11, gens);
  const std::size_t t = transitivity_degree(sub);
  bool ok = sub.order() == 7920 && t >= 4;
  v.add(computed("the stabilizer of a root acts on the other 11 roots as M11, 4-transitively", ok, "stabilizer chain",
                 "order " + sub.order().str() + ", transitivity degree " + std::to_string(t)));
  v.add(fact_entry("y^2 = f(x) is birational over K(alpha) to a degree-11 model y1^2 = h(x1)", "m12-point-stabilizer",
                   "x1 = 1/(x - alpha), y1 = y/(x - alpha)^6 (not performed on coefficients)"));
  if (!ok) {
    finish_inconclusive(v, "point stabilizer is not M11 on 11 points");
    return v;
  }
  CaseInput sc{sub, c.characteristic, "M11", c.group_supplied, c.seed};
  Verdict sv = analyze_jacobian(sc);
  merge(v, sv, "degree-11 model: ");
  v.outcome = sv.outcome;
  v.characteristics = sv.characteristics;
  v.caveats.insert(v.caveats.end(), sv.caveats.begin(), sv.caveats.end());
  v.rule = sv.outcome == Outcome::Inconclusive ? "" : "Mathieu-12 reduction, then " + sv.rule;
  v.reason = sv.reason;
  return v;
}

}  // namespace

Verdict analyze_jacobian(const CaseInput& c) {
  const PermGroup& g = c.group;
  const std::size_t n = g.degree();
  if (n == 4) throw UnsupportedError("n = 4: the Galois action on the 2-torsion is not faithful");
  if (n < 3) throw std::invalid_argument("need a polynomial of degree at least 3");
  const std::uint64_t p = c.characteristic;
  if (p == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (p != 0 && !is_prime64(p)) throw std::invalid_argument("characteristic must be 0 or a prime");

  Verdict v;
  v.degree = n;
  v.genus = (n - 1) / 2;
  v.characteristic = p;
  v.group_supplied = c.group_supplied;
  const std::size_t need = n % 2 ? 2 : 3;
  const std::size_t t = transitivity_degree(g);
  const bool transitive = t >= need;
  v.add(computed("G acts " + std::to_string(need) + "-transitively on the " + std::to_string(n) + " roots", transitive,
                 "stabilizer chain", "transitivity degree " + std::to_string(t) + ", |G| = " + g.order().str()));

  GroupCheckOptions gopt = check_options(c.seed);
  SimplicityResult simple = is_simple(g, gopt);
  auto rec = recognize_group(g, simple.value);
  v.group_name = rec ? rec->name : c.label;
  if (rec) {
    ChecklistEntry e = fact_entry("G is identified as " + rec->name, rec->fact_ids.front(), rec->evidence);
    v.add(std::move(e));
  }
  v.add(simplicity_entry(simple, rec));
  const bool perfect = is_perfect(g);
  v.add(computed("G is perfect", perfect, "derived subgroup", perfect ? "[G,G] = G" : "[G,G] is proper"));

  if (rec && rec->name == "M12" && n == 12 && transitive) return mathieu12_reduction(c, std::move(v));

  CenterAnalysis center = analyze_center(g, v.genus, 2, p, c.seed);
  merge(v, center.fragment);
  v.caveats = center.fragment.caveats;
  const std::string name = rec ? rec->name : "";

  if (center.center_is_q && center.small_index == Tri::False) {
    if (v.genus % 2 == 1 && perfect) {
      odd_genus_rule(v, g, rec, simple.value, transitive, n);
    } else if (name == "A5" && n == 5 && transitive && perfect) {
      a5_rule(v, g);
    } else if (name == "M22" && n == 22 && transitive) {
      m22_rule(v, g);
    } else {
      v.outcome = Outcome::End0SimpleQAlgebra;
      v.rule = "scalar-centralizer rule";
    }
  } else if (center.center_is_q && center.small_index == Tri::True) {
    const bool prime_genus = v.genus >= 3 && is_prime64(v.genus);
    if (prime_genus && simple.value == Tri::True) {
      v.add(quaternion_units_solvable());
      v.add(fact_entry("End^0 = M_g(H) makes J(C_f) supersingular, hence isogenous to a product of elliptic curves",
                       "quaternion-matrix-supersingular"));
      v.outcome = Outcome::ProductOfEllipticCurvesPossible;
      v.rule = "prime-genus elliptic rule";
      v.caveats.push_back("End(J(C_f)) = Z is not excluded");
    } else {
      finish_inconclusive(v, "G has a subgroup of index dividing g");
    }
  } else if (center.center_is_field) {
    v.outcome = Outcome::End0SimpleQAlgebra;
    v.rule = "field-centralizer rule";
  } else {
    finish_inconclusive(v, center.fragment.reason.empty() ? "no rule applies" : center.fragment.reason);
  }
  if (!transitive && v.outcome != Outcome::Inconclusive && v.rule != "field-centralizer rule" &&
      v.rule != "scalar-centralizer rule")
    finish_inconclusive(v, "G is not " + std::to_string(need) + "-transitive");
  if (v.outcome == Outcome::EndIsZ)
    for (const auto& e : v.checklist)
      if (e.status == Status::Failed || e.status == Status::Unknown) {
        finish_inconclusive(v, "END_IS_Z blocked: " + e.hypothesis + " is " + to_string(e.status));
        break;
      }
  return v;
}

PolynomialAnalysis analyze_polynomial(const IntPoly& f, std::uint64_t characteristic, std::size_t prime_budget,
                                      std::uint64_t seed) {
  if (f.degree() < 3) throw std::invalid_argument("need a polynomial of degree at least 3");
  if (!is_squarefree(f)) throw std::invalid_argument("polynomial has a repeated root");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 4) throw UnsupportedError("n = 4: the Galois action on the 2-torsion is not faithful");
  PolynomialAnalysis out;
  out.census = census(f, prime_budget);
  auto cands = groups::candidates_for_degree(n);
  out.hypotheses = identify(out.census, cands);
  for (std::size_t i = 0; i < out.hypotheses.size(); ++i)
    if (out.hypotheses[i].matched &&
        (!out.chosen || out.hypotheses[i].confidence > out.hypotheses[*out.chosen].confidence))
      out.chosen = i;
  if (!out.chosen) {
    Verdict v;
    v.degree = n;
    v.genus = (n - 1) / 2;
    v.characteristic = characteristic;
    v.group_supplied = false;
    v.add({"Gal(f) is identified among the candidate groups", Status::Failed, "computed: cycle-type census",
           "no candidate matched " + std::to_string(out.census.sampled) + " primes", {}});
    finish_inconclusive(v, "no candidate group matches the census");
    out.verdict = std::move(v);
    return out;
  }
  const GroupHypothesis& h = out.hypotheses[*out.chosen];
  CaseInput c{cands[*out.chosen].group, characteristic, h.name, false, seed};
  out.verdict = analyze_jacobian(c);
  out.verdict.checklist.insert(
      out.verdict.checklist.begin(),
      {"Gal(f) = " + h.name, Status::Heuristic, "computed: cycle-type census over " +
                                                    std::to_string(out.census.sampled) + " primes",
       h.evidence + "; confidence " + static_cast<BigRational>(h.confidence).str(), {}});
  return out;
}

Verdict hom_pair_analysis(const IntPoly& f, const IntPoly& h, std::uint64_t characteristic,
                          const HomPairOptions& opts) {
  if (characteristic == 2) throw UnsupportedError("characteristic 2 is not supported");
  if (characteristic != 0 && !is_prime64(characteristic))
    throw std::invalid_argument("characteristic must be 0 or a prime");
  if (f.degree() < 3 || h.degree() < 3) throw std::invalid_argument("both polynomials need degree at least 3");
  if (f.primitive_part() == h.primitive_part())
    throw std::invalid_argument("f and h define the same splitting field; linear disjointness cannot hold");
  if (!is_squarefree(f) || !is_squarefree(h)) throw std::invalid_argument("polynomial has a repeated root");

  Verdict v;
  v.characteristic = characteristic;
  v.group_supplied = opts.group_f.has_value() && opts.group_h.has_value();
  bool all_ok = true;
  auto side = [&](const IntPoly& poly, const std::optional<PermGroup>& supplied, const std::string& tag) {
    const std::size_t n = static_cast<std::size_t>(poly.degree());
    std::optional<PermGroup> grp = supplied;
    std::string name = "supplied group";
    if (grp && grp->degree() != n) throw std::invalid_argument("supplied group for " + tag + " has the wrong degree");
    if (!grp) {
      auto cands = groups::candidates_for_degree(n);
      auto hyps = identify(census(poly, opts.prime_budget), cands);
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < hyps.size(); ++i)
        if (hyps[i].matched && (!best || hyps[i].confidence > hyps[*best].confidence)) best = i;
      if (!best) {
        v.add({"Gal(" + tag + ") is identified", Status::Failed, "computed: cycle-type census", "no candidate matched", {}});
        all_ok = false;
        return std::string("unidentified");
      }
      grp = cands[*best].group;
      name = hyps[*best].name;
      v.add({"Gal(" + tag + ") = " + name, Status::Heuristic, "computed: cycle-type census", hyps[*best].evidence, {}});
    }
    const std::size_t need = n % 2 ? 2 : 3;
    const std::size_t t = transitivity_degree(*grp);
    v.add(computed("Gal(" + tag + ") acts " + std::to_string(need) + "-transitively on the roots of " + tag, t >= need,
                   "stabilizer chain", name + ": transitivity degree " + std::to_string(t)));
    if (t < need) all_ok = false;
    return name;
  };
  std::string nf = side(f, opts.group_f, "f");
  std::string nh = side(h, opts.group_h, "h");
  v.group_name = "f: " + nf + "; h: " + nh;
  v.degree = static_cast<std::size_t>(f.degree());
  v.genus = (v.degree - 1) / 2;

  bool coprime = gcd(f, h).degree() == 0;
  v.add(computed("f and h have no common factor", coprime, "polynomial gcd",
                 coprime ? "gcd is constant" : "common factor " + gcd(f, h).to_string()));
  JointCensus jc = joint_census(f, h, opts.prime_budget);
  char buf[160];
  std::snprintf(buf, sizeof buf, "joint census over %zu primes: chi-square %.4f on %u degrees of freedom, p = %.6g",
                jc.sampled, jc.chi_square, jc.dof, jc.p_value);
  bool indep = jc.p_value >= opts.independence_threshold;
  v.add({"the splitting fields of f and h are linearly disjoint", indep && coprime ? Status::Heuristic : Status::Failed,
         "computed: independence of factorization patterns (evidence only)", buf, {}});
  if (characteristic > 0)
    v.add({"positive characteristic leaves the alternative that both J(C_f) and J(C_h) are supersingular",
           Status::Unknown, "rule statement", "characteristic " + std::to_string(characteristic), {}});

  if (!all_ok || !coprime || !indep) {
    for (const auto& e : v.checklist)
      if (e.status == Status::Failed) {
        finish_inconclusive(v, e.hypothesis);
        break;
      }
    return v;
  }
  v.outcome = Outcome::HomVanishes;
  v.rule = "transitive-pair rule";
  if (characteristic > 0) v.caveats.push_back("or both J(C_f) and J(C_h) are supersingular");
  return v;
}

}  // namespace endocert
