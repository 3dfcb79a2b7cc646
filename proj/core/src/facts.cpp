#include "endocert/facts.hpp"

#include "json.hpp"
#include <set>

#include "endocert/errors.hpp"

namespace endocert {

namespace detail {
extern const std::string_view kFactsJson;
}

FactsTable FactsTable::parse(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("facts table: ") + e.what());
  }
  FactsTable t;
  std::set<std::string> seen;
  try {
    t.version_ = doc.at("version").get<int>();
    for (const auto& f : doc.at("facts")) {
      FactRecord r{f.at("id").get<std::string>(), f.at("key").get<std::string>(), f.at("kind").get<std::string>(),
                   f.at("statement").get<std::string>(), f.at("citation").get<std::string>()};
      if (r.id.empty() || r.citation.empty() || r.statement.empty())
        throw ParseError("facts table: entry '" + r.id + "' needs an id, a statement and a citation");
      if (!seen.insert(r.id).second) throw ParseError("facts table: duplicate id '" + r.id + "'");
      t.facts_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("facts table: ") + e.what());
  }
  return t;
}

const FactsTable& FactsTable::builtin() {
  static const FactsTable table = parse(detail::kFactsJson);
  return table;
}

const FactRecord* FactsTable::find(std::string_view id) const {
  for (const auto& f : facts_)
    if (f.id == id) return &f;
  return nullptr;
}

const FactRecord& FactsTable::at(std::string_view id) const {
  if (const auto* f = find(id)) return *f;
  throw InternalInconsistency("facts table has no entry '" + std::string(id) + "'");
}

}  // namespace endocert
