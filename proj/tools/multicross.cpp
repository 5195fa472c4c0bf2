// multicross: validate, orient, decompose and compute invariants of
// multicrossing link diagrams, and evaluate crossing-number bounds.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multicross/alexander.hpp"
#include "multicross/bounds.hpp"
#include "multicross/catalog.hpp"
#include "multicross/decompose.hpp"
#include "multicross/diagram.hpp"
#include "multicross/orientation.hpp"
#include "multicross/seifert.hpp"

namespace mc = multicross;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) mc::fail(mc::Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

mc::MulticrossingDiagram load_diagram(const std::string& path) {
  return mc::MulticrossingDiagram::parse(read_file(path));
}

const char* color_name(mc::FaceColor c) { return c == mc::FaceColor::white ? "white" : "black"; }

int cmd_validate(const std::string& path) {
  mc::MulticrossingDiagram d = load_diagram(path);
  std::cout << "ok V=" << d.crossing_count() << " E=" << d.edge_count() << " F=" << d.faces().count()
            << " r=" << d.component_count();
  if (auto m = d.uniform_order())
    std::cout << " order=" << *m;
  else if (d.crossing_count() > 0)
    std::cout << " order=mixed";
  std::cout << '\n';
  return 0;
}

int cmd_orient(const std::string& path) {
  mc::MulticrossingDiagram d = load_diagram(path);
  mc::OrientedColoredDiagram ocd = mc::impose_piecewise_natural(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    mc::SlotRef tail = d.edge_ends(e)[ocd.orientation[e]];
    mc::SlotRef head = d.edge_ends(e)[ocd.orientation[e] ^ 1];
    std::cout << "edge " << e + 1 << ": " << tail.crossing << '.' << tail.slot << " -> " << head.crossing << '.'
              << head.slot << '\n';
  }
  for (size_t f = 0; f < ocd.coloring.color.size(); ++f)
    std::cout << "face " << f << ": " << color_name(ocd.coloring.color[f]) << '\n';
  std::cout << "white=" << ocd.coloring.white << " black=" << ocd.coloring.black << '\n';
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& color) {
  mc::MulticrossingDiagram d = load_diagram(path);
  mc::OrientedColoredDiagram ocd = mc::impose_piecewise_natural(d);
  mc::Target target = color == "white"   ? mc::Target::white
                      : color == "black" ? mc::Target::black
                                         : mc::Target::majority;
  mc::DecomposedDiagram out = mc::decompose_diagram(ocd, target);
  std::cout << out.diagram.serialize();
  mc::SeifertState circles = mc::smooth(out.diagram, out.orientation);
  std::cout << "# circles=" << circles.count() << " faces_white=" << out.coloring.white
            << " faces_black=" << out.coloring.black << '\n';
  return 0;
}

int cmd_genus(const std::string& path) {
  mc::MulticrossingDiagram d = load_diagram(path);
  auto order = d.uniform_order();
  if (d.crossing_count() > 0 && order && *order != 2 && *order % 2 == 1) {
    // odd diagram: orient, decompose along the majority color, then report
    // both the guaranteed bound and the measured genus
    mc::OrientedColoredDiagram ocd = mc::impose_piecewise_natural(d);
    mc::DecomposedDiagram dec = mc::decompose_diagram(ocd, mc::Target::majority);
    long long k = dec.k, n = dec.original_crossings, r = d.component_count();
    long long bound_num = k * k * n - r + 1;
    std::cout << "k=" << k << " n=" << n << " r=" << r << " bound=" << bound_num / 2 << '\n';
    mc::SeifertState state = mc::smooth(dec.diagram, dec.orientation);
    long long genus = mc::canonical_genus(dec.diagram.crossing_count(), state.count(), r);
    std::cout << "n=" << dec.diagram.crossing_count() << " s=" << state.count() << " r=" << r
              << " genus=" << genus << '\n';
    return 0;
  }
  mc::Orientation o = mc::orient_components(d);
  mc::SeifertState state = mc::smooth(d, o);
  long long genus = mc::canonical_genus(d.crossing_count(), state.count(), d.component_count());
  std::cout << "n=" << d.crossing_count() << " s=" << state.count() << " r=" << d.component_count()
            << " genus=" << genus << '\n';
  return 0;
}

int cmd_alexander(const std::string& path) {
  mc::MulticrossingDiagram d = load_diagram(path);
  mc::Orientation o = mc::orient_components(d);
  mc::LaurentPolynomial poly = mc::alexander(d, o);
  std::cout << poly.to_string() << '\n';
  std::cout << "span=" << poly.span() << '\n';
  return 0;
}

int cmd_bounds(const mc::BoundQuery& query) {
  mc::BoundResult r = mc::combine(query);
  std::ostringstream line;
  if (r.lower) line << "lower=" << *r.lower;
  if (r.upper) line << (line.str().empty() ? "" : " ") << "upper=" << *r.upper;
  std::vector<std::string> sources = r.lower_sources;
  sources.insert(sources.end(), r.upper_sources.begin(), r.upper_sources.end());
  if (!sources.empty()) {
    line << " sources=";
    for (size_t i = 0; i < sources.size(); ++i) line << (i ? "," : "") << sources[i];
  }
  if (query.assume_monotone) {
    if (r.conjectural_lower) line << " conj_lower=" << *r.conjectural_lower;
    if (r.conjectural_upper) line << " conj_upper=" << *r.conjectural_upper;
    if (!r.conjectural_sources.empty()) {
      line << " conj_sources=";
      for (size_t i = 0; i < r.conjectural_sources.size(); ++i)
        line << (i ? "," : "") << r.conjectural_sources[i];
    }
  }
  std::cout << line.str() << '\n';
  return 0;
}

int cmd_report(const std::string& catalog_path, long long k, const std::string& format) {
  mc::Catalog catalog = mc::load_catalog_file(catalog_path);
  for (const std::string& w : catalog.warnings) std::cerr << "warning: " << w << '\n';
  mc::ImprovementReport report = mc::improvement_report(catalog, k);
  std::cout << (format == "csv" ? report.to_csv() : report.to_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multicrossing link diagram toolkit"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "parse and validate an MPD file");
  validate->add_option("file", file, "MPD diagram file")->required();

  auto* orient = app.add_subcommand("orient", "impose a piecewise-natural orientation and coloring");
  orient->add_option("file", file, "MPD diagram file")->required();

  std::string color = "majority";
  auto* decompose = app.add_subcommand("decompose", "decompose every odd crossing into 2-crossings");
  decompose->add_option("file", file, "MPD diagram file")->required();
  decompose->add_option("--color", color, "white|black|majority")
      ->check(CLI::IsMember({"white", "black", "majority"}))
      ->capture_default_str();

  auto* genus = app.add_subcommand("genus", "Seifert circles and canonical genus");
  genus->add_option("file", file, "MPD diagram file")->required();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a 2-crossing diagram");
  alex->add_option("file", file, "MPD diagram file")->required();

  mc::BoundQuery query;
  std::pair<long long, long long> torus{0, 0};
  long long genus_v = -1, r_v = -1, span_v = -1, c2_v = -1, bracket_v = -1;
  auto* bounds = app.add_subcommand("bounds", "crossing-number bounds from invariants");
  bounds->add_option("--n", query.n, "crossing multiplicity n")->required();
  auto* torus_opt = bounds->add_option("--torus", torus, "torus parameters p,q")->delimiter(',');
  bounds->add_option("--genus", genus_v, "3-genus");
  bounds->add_option("--r", r_v, "number of components");
  bounds->add_option("--span-delta", span_v, "span of the Alexander polynomial");
  bounds->add_option("--c2", c2_v, "ordinary crossing number");
  bounds->add_option("--bracket-span", bracket_v, "span of the bracket polynomial");
  bounds->add_flag("--assume-monotone", query.assume_monotone,
                   "also narrow using the conjecture c_n >= c_(n+1), clearly labeled");

  std::string catalog_path, format = "text";
  long long k = 2;
  auto* report = app.add_subcommand("report", "bound improvements over a knot catalog");
  report->add_option("--catalog", catalog_path, "catalog CSV")->required();
  report->add_option("--k", k, "odd multiplicity parameter k (n = 2k+1)")->capture_default_str();
  report->add_option("--format", format, "text|csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (orient->parsed()) return cmd_orient(file);
    if (decompose->parsed()) return cmd_decompose(file, color);
    if (genus->parsed()) return cmd_genus(file);
    if (alex->parsed()) return cmd_alexander(file);
    if (bounds->parsed()) {
      if (torus_opt->count()) query.torus = torus;
      if (genus_v >= 0) query.genus = genus_v;
      if (r_v >= 0) query.components = r_v;
      if (span_v >= 0) query.span_delta = span_v;
      if (c2_v >= 0) query.c2 = c2_v;
      if (bracket_v >= 0) query.span_bracket = bracket_v;
      return cmd_bounds(query);
    }
    if (report->parsed()) return cmd_report(catalog_path, k, format);
  } catch (const mc::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << (e.column() > 0 ? ", column " + std::to_string(e.column()) : "") << ")";
    std::cerr << '\n';
    return mc::is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
