// Cited results the verdict engine relies on but does not prove. The table
// is compiled in from data/facts.json.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace endocert {

struct FactRecord {
  std::string id;
  std::string key;  // group or object the fact is about
  std::string kind;
  std::string statement;
  std::string citation;
};

class FactsTable {
 public:
  /// Throws ParseError on malformed JSON, a missing field, an empty
  /// citation or a duplicate id.
  static FactsTable parse(std::string_view json);
  static const FactsTable& builtin();

  const std::vector<FactRecord>& all() const { return facts_; }
  const FactRecord* find(std::string_view id) const;
  /// Throws InternalInconsistency for an unknown id.
  const FactRecord& at(std::string_view id) const;
  int version() const { return version_; }

 private:
  std::vector<FactRecord> facts_;
  int version_ = 0;
};

}  // namespace endocert
