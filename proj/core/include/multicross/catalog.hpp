#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multicross/errors.hpp"

namespace multicross {

// Flat-file knot invariant tables, schema:
//   name,c2,genus,r,alexander_span,bracket_span,alternating
// with empty cells for the optional span columns.

struct KnotRecord {
  std::string name;
  long long c2 = 0;
  long long genus = 0;
  long long components = 1;
  std::optional<long long> alexander_span;
  std::optional<long long> bracket_span;
  bool alternating = false;
};

struct Catalog {
  std::vector<KnotRecord> records;  // in file order
  std::vector<std::string> warnings;

  const KnotRecord* find(const std::string& name) const;
};

Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);

struct ImprovementReport {
  long long k = 0;
  struct Row {
    std::string name;
    long long new_bound = 0;   // from genus and components
    long long baseline = 0;    // bracket-span bound when available, else the trivial bound
    std::string baseline_source;
    bool improved = false;
  };
  std::vector<Row> rows;            // sorted by name
  std::vector<std::string> improved;  // names with new_bound > baseline

  std::string to_csv() const;
  std::string to_text() const;
};

// Evaluates the genus lower bound on c_{2k+1} for every record against the
// best previously available bound.
ImprovementReport improvement_report(const Catalog& catalog, long long k);

}  // namespace multicross
