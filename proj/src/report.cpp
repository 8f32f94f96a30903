#include "ffg/report.hpp"

#include <set>
#include <sstream>

namespace ffg {

void ExperimentReport::add(Json record) {
  const auto it = record.find("violation");
  if (it != record.end() && it->is_boolean() && it->get<bool>()) ++violations;
  records.push_back(std::move(record));
}

Json ExperimentReport::to_json() const {
  Json out = Json::object();
  out["schema_version"] = kReportSchemaVersion;
  out["name"] = name;
  out["parameters"] = parameters;
  out["records"] = records;
  out["violations"] = violations;
  out["summary"] = summary;
  out["caveats"] = caveats;
  return out;
}

std::string ExperimentReport::dump() const { return to_json().dump(2) + "\n"; }

namespace {

std::string csv_cell(const Json& v) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_null()) {
    return "";
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string ExperimentReport::csv() const {
  std::set<std::string> columns;
  for (const Json& r : records) {
    for (auto it = r.begin(); it != r.end(); ++it) columns.insert(it.key());
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& c : columns) {
    out << (first ? "" : ",") << csv_cell(c);
    first = false;
  }
  out << "\n";
  for (const Json& r : records) {
    first = true;
    for (const auto& c : columns) {
      out << (first ? "" : ",");
      first = false;
      const auto it = r.find(c);
      if (it != r.end()) out << csv_cell(*it);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ffg
