// endocert command-line front end.
//
// Exit status: 0 for any verdict (including INCONCLUSIVE) and a passing
// selftest, 2 for malformed or invalid input, 3 for unsupported parameters,
// 4 for an internal inconsistency or a failing selftest, 1 otherwise.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "endocert/heart.hpp"
#include "endocert/named_groups.hpp"
#include "endocert/report.hpp"
#include "endocert/verdict.hpp"
#include "json.hpp"

using namespace endocert;

namespace {

enum Exit { kOk = 0, kOther = 1, kInput = 2, kUnsupported = 3, kInternal = 4 };

struct Config {
  std::string poly, coeffs, generators, format = "text";
  std::vector<std::string> polys;
  std::size_t degree = 0;
  std::uint64_t characteristic = 0;
  std::size_t prime_budget = 200;
  std::uint64_t seed = 0x5eed;
  bool dump_action = false, dump_centralizer = false;
};

IntPoly read_poly(const Config& c) {
  if (!c.poly.empty() && !c.coeffs.empty()) throw std::invalid_argument("give either --poly or --coeffs, not both");
  if (!c.coeffs.empty()) {
    if (c.coeffs.find_first_of("xX^*") != std::string::npos)
      throw ParseError("--coeffs expects integers in ascending degree");
    return IntPoly::parse(c.coeffs);
  }
  if (c.poly.empty()) throw std::invalid_argument("a polynomial is required (--poly or --coeffs)");
  return IntPoly::parse(c.poly);
}

std::string read_generators(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

void attach_dumps(Report& r, const PermGroup& g, const Config& c) {
  if (!c.dump_action && !c.dump_centralizer) return;
  if (g.degree() == 4) throw UnsupportedError("n = 4: no faithful heart action to dump");
  HeartModule h(g.degree());
  if (c.dump_action) {
    std::string body;
    for (const auto& s : g.generators()) body += "# " + s.to_string() + "\n" + h.act(s).to_text();
    r.attachments.emplace_back("Heart action of the generators", body);
  }
  if (c.dump_centralizer) {
    CentralizerReport cr = heart_centralizer(g);
    std::string body = "# kind " + to_string(cr.kind) + ", dimension " + std::to_string(cr.algebra.dim()) + "\n";
    for (const auto& b : cr.algebra.basis()) body += b.to_text();
    r.attachments.emplace_back("Centralizer basis", body);
  }
}

void emit(const Report& r, const Config& c) {
  std::cout << (c.format == "machine" ? render_machine(r) : render_text(r));
}

std::vector<std::pair<std::string, std::string>> common_inputs(const Config& c) {
  return {{"characteristic", std::to_string(c.characteristic)},
          {"prime_budget", std::to_string(c.prime_budget)},
          {"seed", std::to_string(c.seed)}};
}

int cmd_analyze(const Config& c) {
  IntPoly f = read_poly(c);
  PolynomialAnalysis pa = analyze_polynomial(f, c.characteristic, c.prime_budget, c.seed);
  Report r{"analyze", {{"polynomial", f.to_string()}}, pa.verdict, pa.census, pa.hypotheses, pa.chosen, {}};
  for (auto& kv : common_inputs(c)) r.inputs.push_back(kv);
  if (pa.chosen) attach_dumps(r, groups::candidates_for_degree(f.degree())[*pa.chosen].group, c);
  emit(r, c);
  return kOk;
}

int cmd_group_check(const Config& c) {
  if (c.degree == 0) throw std::invalid_argument("--degree is required");
  if (c.generators.empty()) throw std::invalid_argument("--generators is required");
  PermGroup g(c.degree, parse_generators(read_generators(c.generators), c.degree));
  Verdict v = analyze_jacobian({g, c.characteristic, "supplied group", true, c.seed});
  Report r{"group-check", {{"degree", std::to_string(c.degree)}, {"group_order", g.order().str()}}, v, {}, {}, {}, {}};
  std::string gens;
  for (const auto& s : g.generators()) gens += (gens.empty() ? "" : "; ") + s.to_string();
  r.inputs.emplace_back("generators", gens);
  r.inputs.emplace_back("characteristic", std::to_string(c.characteristic));
  r.inputs.emplace_back("seed", std::to_string(c.seed));
  attach_dumps(r, g, c);
  emit(r, c);
  return kOk;
}

int cmd_hom_check(const Config& c) {
  if (c.polys.size() != 2) throw std::invalid_argument("hom-check needs exactly two --poly arguments");
  IntPoly f = IntPoly::parse(c.polys[0]), h = IntPoly::parse(c.polys[1]);
  HomPairOptions opts;
  opts.prime_budget = c.prime_budget;
  Verdict v = hom_pair_analysis(f, h, c.characteristic, opts);
  Report r{"hom-check", {{"f", f.to_string()}, {"h", h.to_string()}}, v, {}, {}, {}, {}};
  for (auto& kv : common_inputs(c)) r.inputs.push_back(kv);
  emit(r, c);
  return kOk;
}

int cmd_identify(const Config& c) {
  IntPoly f = read_poly(c);
  if (f.degree() < 3) throw std::invalid_argument("need a polynomial of degree at least 3");
  Report r{"identify", {{"polynomial", f.to_string()}, {"prime_budget", std::to_string(c.prime_budget)}}, {}, {}, {}, {}, {}};
  r.census = census(f, c.prime_budget);
  r.hypotheses = identify(*r.census, groups::candidates_for_degree(f.degree()));
  for (std::size_t i = 0; i < r.hypotheses.size(); ++i)
    if (r.hypotheses[i].matched && (!r.chosen || r.hypotheses[i].confidence > r.hypotheses[*r.chosen].confidence))
      r.chosen = i;
  emit(r, c);
  return kOk;
}

struct Fixture {
  std::string name;
  PermGroup group;
  std::uint64_t characteristic;
  std::vector<std::string> accepted;  // outcome labels
};

int cmd_selftest(const Config& c) {
  using namespace groups;
  const std::vector<std::string> z = {"END_IS_Z"};
  std::vector<Fixture> fx = {
      {"A5 on 5, char 0", alternating(5), 0, z},
      {"A5 on 5, char 5", alternating(5), 5, z},
      {"A5 on 5, char 3", alternating(5), 3, {"SUPERSINGULAR_POSSIBLE({3})"}},
      {"PSL2(7) on 7, char 0", gl3_2_on_7(), 0, z},
      {"PSL2(7) on 7, char 3", gl3_2_on_7(), 3, z},
      {"PSL2(7) on 7, char 7", gl3_2_on_7(), 7, z},
      {"PSL2(11) on 11, char 0", psl2_11_on_11(), 0, z},
      {"PSL2(11) on 11, char 11", psl2_11_on_11(), 11, z},
      {"M12 on 12, char 0", mathieu(12), 0, z},
      {"M22 on 22, char 0", mathieu(22), 0, z},
      {"M22 on 22, char 11", mathieu(22), 11, z},
      {"M23 on 23, char 0", mathieu(23), 0, z},
      {"M24 on 24, char 0", mathieu(24), 0, z},
      {"A7 on 15, char 0", a7_on_15(), 0, {"END_IS_Z", "PRODUCT_OF_ELLIPTIC_CURVES_POSSIBLE"}},
      {"PSL2(13) on 14, char 0", psl2(13), 0, {"END0_SIMPLE_Q_ALGEBRA"}},
  };
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& f : fx) {
    Verdict v = analyze_jacobian({f.group, f.characteristic, f.name, true, c.seed});
    std::string got = outcome_label(v);
    bool ok = std::find(f.accepted.begin(), f.accepted.end(), got) != f.accepted.end();
    all = all && ok;
    if (c.format == "machine")
      out.push_back({{"fixture", f.name}, {"outcome", got}, {"pass", ok}});
    else
      std::cout << (ok ? "PASS " : "FAIL ") << f.name << ": " << got << "\n";
  }
  if (c.format == "machine")
    std::cout << nlohmann::ordered_json{{"schema_version", kReportSchemaVersion}, {"command", "selftest"}, {"results", out}}
                     .dump(2)
              << "\n";
  else
    std::cout << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify endomorphism algebras of hyperelliptic jacobians y^2 = f(x) from Galois-group data."};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--char", c.characteristic, "characteristic of the ground field (0 or an odd prime)");
    s->add_option("--prime-budget", c.prime_budget, "number of good primes sampled by the census")
        ->check(CLI::PositiveNumber);
    s->add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "machine"}));
    s->add_option("--seed", c.seed, "seed for randomized group checks");
  };
  auto dumps = [&](CLI::App* s) {
    s->add_flag("--dump-action", c.dump_action, "append the heart action of the generators (matrix text format)");
    s->add_flag("--dump-centralizer", c.dump_centralizer, "append a basis of the centralizer (matrix text format)");
  };

  auto* analyze = app.add_subcommand("analyze", "identify Gal(f) by sampling, then analyze J(C_f) (conditional)");
  analyze->add_option("--poly", c.poly, "polynomial expression, e.g. \"x^7 - 7*x + 3\"");
  analyze->add_option("--coeffs", c.coeffs, "integer coefficients in ascending degree, e.g. \"3 -7 0 0 0 0 0 1\"");
  common(analyze);
  dumps(analyze);

  auto* gc = app.add_subcommand("group-check", "analyze J(C_f) for a supplied Galois group (proved mode)");
  gc->add_option("--degree", c.degree, "number of roots n")->required();
  gc->add_option("--generators", c.generators, "file or inline cycles, generators separated by ';' or newlines")
      ->required();
  common(gc);
  dumps(gc);

  auto* hc = app.add_subcommand("hom-check", "vanishing of Hom between J(C_f) and J(C_h)");
  hc->add_option("--poly", c.polys, "the polynomials f and h (give the flag twice)")->required()->expected(2);
  common(hc);

  auto* id = app.add_subcommand("identify", "rank candidate Galois groups from a cycle-type census");
  id->add_option("--poly", c.poly, "polynomial expression");
  id->add_option("--coeffs", c.coeffs, "integer coefficients in ascending degree");
  common(id);

  auto* st = app.add_subcommand("selftest", "run the built-in fixture suite of known cases");
  st->add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "machine"}));
  st->add_option("--seed", c.seed, "seed for randomized group checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*analyze) return cmd_analyze(c);
    if (*gc) return cmd_group_check(c);
    if (*hc) return cmd_hom_check(c);
    if (*id) return cmd_identify(c);
    if (*st) return cmd_selftest(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
