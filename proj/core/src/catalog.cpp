#include "multicross/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "multicross/bounds.hpp"

namespace multicross {

namespace {

const char* kHeader = "name,c2,genus,r,alexander_span,bracket_span,alternating";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell += ch;
    }
  }
  cells.push_back(cell);
  return cells;
}

long long parse_number(const std::string& cell, int row, const std::string& column) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
    fail(Errc::bad_numeric, "row " + std::to_string(row) + ": bad " + column + " value '" + cell + "'", row);
  return value;
}

}  // namespace

const KnotRecord* Catalog::find(const std::string& name) const {
  for (const KnotRecord& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

Catalog load_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  if (!std::getline(in, line)) fail(Errc::missing_column, "empty catalog file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    fail(Errc::missing_column, "header must be exactly '" + std::string(kHeader) + "'", 1);

  std::unordered_set<std::string> seen;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    std::vector<std::string> cells = split_csv(line);
    if (cells.size() != 7)
      fail(Errc::missing_column, "row " + std::to_string(row) + ": expected 7 cells, got " +
                                     std::to_string(cells.size()), row);
    KnotRecord rec;
    rec.name = cells[0];
    if (rec.name.empty()) fail(Errc::bad_numeric, "row " + std::to_string(row) + ": empty name", row);
    if (!seen.insert(rec.name).second)
      fail(Errc::duplicate_name, "row " + std::to_string(row) + ": duplicate name '" + rec.name + "'", row);
    rec.c2 = parse_number(cells[1], row, "c2");
    rec.genus = parse_number(cells[2], row, "genus");
    rec.components = parse_number(cells[3], row, "r");
    if (!cells[4].empty()) rec.alexander_span = parse_number(cells[4], row, "alexander_span");
    if (!cells[5].empty()) rec.bracket_span = parse_number(cells[5], row, "bracket_span");
    if (cells[6] == "true")
      rec.alternating = true;
    else if (cells[6] == "false")
      rec.alternating = false;
    else
      fail(Errc::bad_numeric, "row " + std::to_string(row) + ": alternating must be true or false", row);
    if (rec.c2 < 0 || rec.genus < 0 || rec.components < 1)
      fail(Errc::bad_numeric, "row " + std::to_string(row) + ": invariants out of range", row);

    // Alternating links satisfy span(alexander) = 2g + r - 1; flag data that
    // does not, but keep it.
    if (rec.alternating && rec.alexander_span &&
        *rec.alexander_span != 2 * rec.genus + rec.components - 1) {
      catalog.warnings.push_back("row " + std::to_string(row) + " (" + rec.name +
                                 "): alexander_span does not match 2*genus + r - 1");
    }
    catalog.records.push_back(std::move(rec));
  }
  return catalog;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open catalog '" + path + "'");
  return load_catalog(in);
}

ImprovementReport improvement_report(const Catalog& catalog, long long k) {
  if (k < 1) fail(Errc::unsupported_parameter, "k must be positive");
  ImprovementReport report;
  report.k = k;
  long long n = 2 * k + 1;
  for (const KnotRecord& rec : catalog.records) {
    ImprovementReport::Row row;
    row.name = rec.name;
    row.new_bound = thm1_bound(rec.genus, rec.components, k);
    if (rec.bracket_span) {
      row.baseline = kauffman_span_bound(*rec.bracket_span, n);
      row.baseline_source = "kauffman";
    } else {
      row.baseline = trivial_bound(rec.c2, n);
      row.baseline_source = "trivial";
    }
    row.improved = row.new_bound > row.baseline;
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ImprovementReport::Row& a, const ImprovementReport::Row& b) { return a.name < b.name; });
  for (const auto& row : report.rows)
    if (row.improved) report.improved.push_back(row.name);
  return report;
}

std::string ImprovementReport::to_csv() const {
  std::ostringstream out;
  out << "name,new_bound,baseline,baseline_source,improved\n";
  for (const Row& row : rows)
    out << row.name << ',' << row.new_bound << ',' << row.baseline << ',' << row.baseline_source << ','
        << (row.improved ? "true" : "false") << '\n';
  return out.str();
}

std::string ImprovementReport::to_text() const {
  std::ostringstream out;
  for (const Row& row : rows) {
    out << row.name << " new=" << row.new_bound << " baseline=" << row.baseline << " (" << row.baseline_source
        << ")";
    if (row.improved) out << " improved";
    out << '\n';
  }
  out << "improved=" << improved.size() << " of " << rows.size() << '\n';
  return out.str();
}

}  // namespace multicross
