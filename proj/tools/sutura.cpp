#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sutura/report.hpp"

namespace {

int run(const std::string& path, const std::string& analysis, const std::string& format,
        const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "sutura: cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  sutura::ProblemSpec spec = sutura::parse_problem(buf.str());
  if (!analysis.empty()) spec.analyses = sutura::parse_analysis_list(analysis, spec.mode);
  if (format == "text") spec.format = sutura::OutputFormat::Text;
  else if (format == "json") spec.format = sutura::OutputFormat::Json;
  else if (!format.empty()) throw sutura::SemanticError("--format must be text or json");

  sutura::RunResult result = sutura::run_problem(spec);
  std::string doc = sutura::render(result);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "sutura: cannot write " << out_path << "\n";
      return 1;
    }
    out << doc;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sutura: Alexander polynomials, Spin^c support polytopes and fibered-cone detection for "
      "sutured-manifold data, at the Euler-characteristic level"};
  std::string file, analysis, format, out_path;
  app.add_option("file", file, "problem file (see README for the grammar)")->required();
  app.add_option("--analysis", analysis,
                 "analyses to run: alexander|support|extremal|fibered|prune|all "
                 "(comma separated; overrides the file)");
  app.add_option("--format", format, "output format: text|json (overrides the file)");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  CLI11_PARSE(app, argc, argv);

  try {
    return run(file, analysis, format, out_path);
  } catch (const sutura::NonSeparatingBlackEdge& e) {
    std::cerr << "sutura: hypothesis failure: " << e.what() << "\n";
    return 2;
  } catch (const sutura::Error& e) {
    std::cerr << "sutura: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sutura: internal error: " << e.what() << "\n";
    return 1;
  }
}
