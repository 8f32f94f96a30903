#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ffg {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

// Machine-readable outcome of one experiment. `violations` counts the records
// whose "violation" field is true, plus any whole-run failures an experiment
// adds on top.
struct ExperimentReport {
  std::string name;
  Json parameters = Json::object();
  std::vector<Json> records;
  long violations = 0;
  Json summary = Json::object();
  // Counts of trials whose verdict rests on a non-tight invariant or an
  // unstabilized overlap.
  Json caveats = Json::object();

  // Appends a record and counts it when record["violation"] is true.
  void add(Json record);

  Json to_json() const;
  // Sorted keys, two-space indent, trailing newline. Byte-identical for equal
  // reports.
  std::string dump() const;
  // One row per record; columns are the sorted union of record keys.
  std::string csv() const;
};

}  // namespace ffg
