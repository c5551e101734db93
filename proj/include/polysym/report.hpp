#pragma once

// Versioned, deterministic reports in text, JSON, and TSV form.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "polysym/ideal_lab.hpp"

namespace polysym {

inline constexpr const char* kReportSchema = "polysym-report/1";

enum class Format { text, json, tsv };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  throw DomainError("unknown format '" + s + "'");
}

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  bool passed = true;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> lines;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string tsv_cell(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

}  // namespace detail

inline std::string render(const Report& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      nlohmann::json j = {{"schema", kReportSchema}, {"command", r.command}, {"params", r.params}, {"passed", r.passed}, {"data", r.data}};
      os << j.dump(2) << "\n";
      break;
    }
    case Format::tsv: {
      if (r.columns.empty()) {
        os << "key\tvalue\n";
        for (const auto& [k, v] : r.data.items()) os << k << "\t" << detail::tsv_cell(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "\t" : "") << r.columns[i];
        os << "\n";
        for (const auto& row : r.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << detail::tsv_cell(row[i]);
          os << "\n";
        }
      }
      os << "#result\t" << (r.passed ? "PASS" : "FAIL") << "\n";
      break;
    }
    case Format::text: {
      os << r.command << "\n";
      for (const auto& line : r.lines) os << "  " << line << "\n";
      os << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
      break;
    }
  }
  return os.str();
}

inline nlohmann::json table_entry_json(const TableEntry& e, bool certificates) {
  nlohmann::json j = {{"label", e.label}, {"multidegree", e.multidegree}, {"claim", e.claim}, {"status", status_text(e.status)}, {"detail", e.detail}};
  if (certificates && !e.witness.empty()) j["witness"] = e.witness;
  return j;
}

/// Fills a report from a table verification, one TSV row per claim.
inline void add_table(Report& r, const TableReport& t, bool certificates) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries) {
    entries.push_back(table_entry_json(e, certificates));
    r.rows.push_back({detail::multidegree_text(e.multidegree), e.label, e.claim, status_text(e.status), e.detail});
    std::string line = std::string(status_text(e.status)) + "  " + e.label + "  [" + e.claim + "]";
    if (!e.detail.empty()) line += "  " + e.detail;
    r.lines.push_back(line);
    if (certificates)
      for (const auto& w : e.witness) r.lines.push_back("    " + w);
  }
  for (const auto& n : t.notes) r.lines.push_back("note: " + n);
  r.columns = {"multidegree", "entry", "claim", "status", "detail"};
  r.data["table"] = t.table;
  r.data["entries"] = entries;
  r.data["notes"] = t.notes;
  r.data["verified"] = t.count(EntryStatus::verified);
  r.data["failed"] = t.count(EntryStatus::failed);
  r.passed = r.passed && t.passed();
}

}  // namespace polysym
