#include "endocert/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace endocert {

namespace {

using ojson = nlohmann::ordered_json;

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string decimal(const BigRational& q) { return fixed(static_cast<double>(q)); }

ojson census_json(const CycleTypeCensus& c) {
  ojson j;
  j["degree"] = c.degree;
  j["primes_sampled"] = c.sampled;
  j["last_prime"] = c.last_prime;
  j["excluded_primes"] = c.excluded;
  ojson counts = ojson::array();
  for (const auto& [part, k] : c.counts) counts.push_back({{"cycle_type", to_string(part)}, {"count", k}});
  j["counts"] = counts;
  return j;
}

ojson hypothesis_json(const GroupHypothesis& h) {
  ojson j;
  j["group"] = h.name;
  j["order"] = h.order.str();
  j["evaluated"] = h.evaluated;
  j["matched"] = h.matched;
  ojson un = ojson::array();
  for (const auto& p : h.unexplained) un.push_back(to_string(p));
  j["unexplained_cycle_types"] = un;
  j["chi_square"] = fixed(h.chi_square, 4);
  j["dof"] = h.dof;
  j["p_value"] = fixed(h.p_value);
  j["confidence"] = decimal(h.confidence);
  j["confidence_exact"] = h.confidence.str();
  j["evidence"] = h.evidence;
  return j;
}

ojson verdict_json(const Verdict& v) {
  ojson j;
  j["outcome"] = to_string(v.outcome);
  j["characteristics"] = v.characteristics;
  j["mode"] = mode_string(v.group_supplied);
  j["group"] = v.group_name;
  j["degree"] = v.degree;
  j["genus"] = v.genus;
  j["characteristic"] = v.characteristic;
  j["rule"] = v.rule;
  j["reason"] = v.reason;
  ojson list = ojson::array();
  for (const auto& e : v.checklist) {
    ojson x;
    x["hypothesis"] = e.hypothesis;
    x["status"] = to_string(e.status);
    x["citation"] = e.citation;
    x["evidence"] = e.evidence;
    if (!e.fact_id.empty()) x["fact_id"] = e.fact_id;
    list.push_back(std::move(x));
  }
  j["checklist"] = list;
  j["caveats"] = v.caveats;
  return j;
}

}  // namespace

std::string mode_string(bool group_supplied) {
  return group_supplied ? "proved (group supplied)" : "conditional (group identified heuristically)";
}

std::string outcome_label(const Verdict& v) {
  std::string s = to_string(v.outcome);
  if (v.outcome == Outcome::SupersingularPossible) {
    s += "({";
    for (std::size_t i = 0; i < v.characteristics.size(); ++i) s += (i ? "," : "") + std::to_string(v.characteristics[i]);
    s += "})";
  }
  return s;
}

std::string render_machine(const Report& r) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "endocert";
  j["command"] = r.command;
  ojson in = ojson::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["input"] = in;
  if (r.census) j["census"] = census_json(*r.census);
  if (!r.hypotheses.empty()) {
    ojson hs = ojson::array();
    for (const auto& h : r.hypotheses) hs.push_back(hypothesis_json(h));
    j["group_hypotheses"] = hs;
    j["chosen_hypothesis"] = r.chosen ? ojson(r.hypotheses[*r.chosen].name) : ojson(nullptr);
  }
  if (r.verdict) j["verdict"] = verdict_json(*r.verdict);
  if (!r.attachments.empty()) {
    ojson at = ojson::array();
    for (const auto& [title, body] : r.attachments) at.push_back({{"title", title}, {"body", body}});
    j["attachments"] = at;
  }
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "endocert " << r.command << " (report schema " << kReportSchemaVersion << ")\n";
  for (const auto& [k, v] : r.inputs) os << "  " << k << ": " << v << "\n";
  if (r.census) {
    os << "\nCycle-type census (" << r.census->sampled << " primes, last " << r.census->last_prime << ")\n";
    os << r.census->to_text();
    if (!r.census->excluded.empty()) {
      os << "  excluded primes:";
      for (auto p : r.census->excluded) os << " " << p;
      os << "\n";
    }
  }
  if (!r.hypotheses.empty()) {
    os << "\nCandidate groups\n";
    for (std::size_t i = 0; i < r.hypotheses.size(); ++i) {
      const auto& h = r.hypotheses[i];
      os << "  " << (r.chosen && *r.chosen == i ? "* " : "  ") << h.name << " (order " << h.order.str() << "): "
         << (h.matched ? "matched" : "rejected");
      if (h.matched) os << ", confidence " << decimal(h.confidence);
      os << "\n      " << h.evidence << "\n";
    }
  }
  if (r.verdict) {
    const Verdict& v = *r.verdict;
    os << "\nVerdict: " << outcome_label(v) << "\n";
    os << "  mode: " << mode_string(v.group_supplied) << "\n";
    if (!v.group_name.empty()) os << "  group: " << v.group_name << "\n";
    os << "  degree " << v.degree << ", genus " << v.genus << ", characteristic " << v.characteristic << "\n";
    if (!v.rule.empty()) os << "  rule: " << v.rule << "\n";
    if (!v.reason.empty()) os << "  reason: " << v.reason << "\n";
    os << "\nChecklist\n";
    for (const auto& e : v.checklist) {
      os << "  [" << to_string(e.status) << "] " << e.hypothesis << "\n";
      os << "      citation: " << e.citation;
      if (!e.fact_id.empty()) os << " (fact " << e.fact_id << ")";
      os << "\n";
      if (!e.evidence.empty()) os << "      evidence: " << e.evidence << "\n";
    }
    if (!v.caveats.empty()) {
      os << "\nCaveats\n";
      for (const auto& c : v.caveats) os << "  - " << c << "\n";
    }
  }
  for (const auto& [title, body] : r.attachments) os << "\n" << title << "\n" << body;
  return os.str();
}

}  // namespace endocert
