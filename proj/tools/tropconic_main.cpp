#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropconic/check.hpp"
#include "tropconic/conic.hpp"
#include "tropconic/error.hpp"
#include "tropconic/expr.hpp"
#include "tropconic/factor.hpp"
#include "tropconic/json_io.hpp"
#include "tropconic/quadratic.hpp"
#include "tropconic/reconstruct.hpp"
#include "tropconic/render.hpp"

namespace {

using namespace tropconic;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw input_error("cannot write " + path);
}

int run(int argc, char** argv) {
  CLI::App app{
      "tropconic: exact classification, sketching, factorization, and "
      "reconstruction of tropical conics"};
  app.require_subcommand(1);

  std::string classify_text;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Report class, invariants, and vertices of a conic");
  cmd_classify->add_option("poly", classify_text, "degree-two polynomial, e.g. \"X^2 + 3*X*Y + Y^2 + Z^2\"")
      ->required();

  std::string sketch_text;
  std::string sketch_chart = "Z";
  std::string sketch_svg;
  std::string sketch_ascii;
  CLI::App* cmd_sketch = app.add_subcommand("sketch", "Compute the corner locus in a chart");
  cmd_sketch->add_option("poly", sketch_text, "degree-two polynomial")->required();
  cmd_sketch->add_option("--chart", sketch_chart, "chart to draw in: X, Y, or Z (default Z)");
  cmd_sketch->add_option("--svg", sketch_svg, "also write an SVG rendering to this file");
  cmd_sketch->add_option("--ascii", sketch_ascii, "also write an ASCII rendering to this file");

  std::string factor_text;
  CLI::App* cmd_factor =
      app.add_subcommand("factor", "Factor into two tropical linear forms, or report irreducible");
  cmd_factor->add_option("poly", factor_text, "degree-two polynomial")->required();

  std::string reconstruct_path;
  CLI::App* cmd_reconstruct =
      app.add_subcommand("reconstruct", "Recover the canonical polynomial from a tree description");
  cmd_reconstruct->add_option("tree", reconstruct_path, "JSON file describing the weighted tree")
      ->required();

  std::string det_path;
  CLI::App* cmd_det =
      app.add_subcommand("det", "Tropical determinant and singularity of a symmetric matrix");
  cmd_det->add_option("matrix", det_path, "JSON file with the matrix entries")->required();

  std::string check_text;
  std::uint64_t check_seed = 1;
  int check_count = 500;
  CLI::App* cmd_check =
      app.add_subcommand("check", "Cross-validate closed forms against the corner locus");
  cmd_check->add_option("poly", check_text, "check this polynomial only (default: seeded corpus)");
  cmd_check->add_option("--seed", check_seed, "corpus seed (default 1)");
  cmd_check->add_option("--count", check_count, "random corpus size (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*cmd_classify) {
    const QuadPoly p = parse_poly(classify_text);
    std::cout << classification_to_json(p).dump(2) << "\n";
    return 0;
  }

  if (*cmd_sketch) {
    const QuadPoly p = parse_poly(sketch_text);
    const Chart chart = chart_of_name(sketch_chart);
    const Sketch sk = corner_locus(p, chart);
    std::cout << sketch_to_json(sk).dump(2) << "\n";
    if (!sketch_svg.empty() || !sketch_ascii.empty()) {
      const std::vector<std::string> labels = anchor_labels(p, sk);
      if (!sketch_svg.empty()) write_file(sketch_svg, render_svg(sk, labels));
      if (!sketch_ascii.empty()) write_file(sketch_ascii, render_ascii(sk, labels));
    }
    return 0;
  }

  if (*cmd_factor) {
    const QuadPoly p = parse_poly(factor_text);
    const auto fg = factorize(p);
    Json doc;
    doc["format"] = 1;
    if (fg) {
      std::cout << "(" << format_linform(fg->first) << ") * (" << format_linform(fg->second)
                << ")\n";
      doc["reducible"] = true;
      doc["factors"] = Json::array({linform_to_json(fg->first), linform_to_json(fg->second)});
    } else {
      std::cout << "irreducible\n";
      doc["reducible"] = false;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (*cmd_reconstruct) {
    const TreeSpec t = tree_from_json(json_of_text(read_file(reconstruct_path)));
    const QuadPoly p = poly_of(recover_polynomial(t));
    std::cout << format_poly(p) << "\n";
    std::cout << poly_to_json(p).dump(2) << "\n";
    return 0;
  }

  if (*cmd_det) {
    const SymMatrix3 a = matrix_from_json(json_of_text(read_file(det_path)));
    const TropDet det = trop_det(a);
    Json doc;
    doc["format"] = 1;
    doc["value"] = format_scalar(det.value);
    doc["attained"] = det.attained;
    doc["singular"] = det.attained >= 2;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (*cmd_check) {
    CheckReport report;
    if (!check_text.empty()) {
      check_poly(parse_poly(check_text), report);
    } else {
      report = check_corpus(check_seed, check_count);
    }
    std::cout << "checked " << report.checked << " polynomial(s), " << report.failures.size()
              << " failure(s)\n";
    for (const CheckFailure& f : report.failures) {
      std::cout << "FAIL " << f.what << ": " << f.input << "\n";
    }
    return report.ok() ? 0 : 2;
  }

  throw internal_error("no subcommand dispatched");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
