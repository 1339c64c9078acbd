#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sutura/cones.hpp"
#include "sutura/decomp_graph.hpp"
#include "sutura/pd.hpp"
#include "sutura/presentation.hpp"

namespace sutura {

enum class Mode { Knot, Presentation, MatrixMode, Graph };
enum class Analysis { Alexander, Support, Extremal, Fibered, Prune };
enum class OutputFormat { Text, Json };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::Knot: return "knot";
    case Mode::Presentation: return "presentation";
    case Mode::MatrixMode: return "matrix";
    case Mode::Graph: return "graph";
  }
  return "knot";
}

inline const char* to_string(Analysis a) {
  switch (a) {
    case Analysis::Alexander: return "alexander";
    case Analysis::Support: return "support";
    case Analysis::Extremal: return "extremal";
    case Analysis::Fibered: return "fibered";
    case Analysis::Prune: return "prune";
  }
  return "alexander";
}

inline const char* to_string(OutputFormat f) { return f == OutputFormat::Text ? "text" : "json"; }

// One self-describing problem file: a mode, a payload, and analysis requests.
struct ProblemSpec {
  Mode mode = Mode::Knot;
  std::vector<Analysis> analyses;  // sorted, unique, valid for the mode
  OutputFormat format = OutputFormat::Text;

  // knot
  PdCode pd;

  // presentation
  int generators = 0;
  std::vector<Word> relators;

  // matrix
  int rank = 0;
  Matrix<LaurentPoly> boundary;

  // presentation / matrix options
  std::vector<std::vector<std::int64_t>> psi_rows;  // empty = identity on the free part
  std::vector<Decoration> decorations;              // empty = default where one exists

  // graph
  std::vector<Color> vertex_colors;
  std::vector<GraphEdge> graph_edges;

  std::string canonical_text() const;
};

namespace detail {

struct Line {
  int no;
  std::string key;
  std::string rest;
};

inline std::vector<Line> split_lines(const std::string& contents) {
  std::vector<Line> out;
  std::istringstream is(contents);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto b = rest.find_first_not_of(" \t\r");
    rest = b == std::string::npos ? std::string() : rest.substr(b);
    auto e = rest.find_last_not_of(" \t\r");
    if (e != std::string::npos) rest.erase(e + 1);
    out.push_back({no, key, rest});
  }
  return out;
}

inline ParseError at_line(int no, const std::string& msg) {
  return ParseError("line " + std::to_string(no) + ": " + msg);
}

inline std::int64_t parse_i64(const std::string& s, int line_no, const std::string& field) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw at_line(line_no, "field '" + field + "': expected integer, got \"" + s + "\"");
  }
}

// "[[1,4,2,5],[3,6,4,1]]" -> rows of integers
inline std::vector<std::vector<std::int64_t>> parse_int_rows(const std::string& s, int line_no,
                                                             const std::string& field) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size() || s[i] != '[') throw at_line(line_no, "field '" + field + "': expected [");
  ++i;
  skip_ws();
  while (i < s.size() && s[i] != ']') {
    if (s[i] != '[') throw at_line(line_no, "field '" + field + "': expected [ starting a row");
    ++i;
    std::vector<std::int64_t> row;
    std::string num;
    while (i < s.size() && s[i] != ']') {
      if (s[i] == ',') {
        row.push_back(parse_i64(num, line_no, field));
        num.clear();
      } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
        num += s[i];
      }
      ++i;
    }
    if (i == s.size()) throw at_line(line_no, "field '" + field + "': unterminated row");
    if (!num.empty()) row.push_back(parse_i64(num, line_no, field));
    rows.push_back(std::move(row));
    ++i;  // past ]
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  if (i == s.size() || s[i] != ']') throw at_line(line_no, "field '" + field + "': expected closing ]");
  return rows;
}

// "[[t - 2, 0], [1, t]]" -> rows of polynomial source strings
inline std::vector<std::vector<std::string>> parse_poly_rows(const std::string& s, int line_no) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size() || s[i] != '[') throw at_line(line_no, "field 'matrix': expected [");
  ++i;
  skip_ws();
  while (i < s.size() && s[i] != ']') {
    if (s[i] != '[') throw at_line(line_no, "field 'matrix': expected [ starting a row");
    ++i;
    std::vector<std::string> row;
    std::string cell;
    while (i < s.size() && s[i] != ']') {
      if (s[i] == ',') {
        row.push_back(cell);
        cell.clear();
      } else {
        cell += s[i];
      }
      ++i;
    }
    if (i == s.size()) throw at_line(line_no, "field 'matrix': unterminated row");
    row.push_back(cell);
    rows.push_back(std::move(row));
    ++i;
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      skip_ws();
    }
  }
  if (i == s.size() || s[i] != ']') throw at_line(line_no, "field 'matrix': expected closing ]");
  return rows;
}

// "(1,0) (0,1)" -> one decoration with one curve per group
inline Decoration parse_decoration(const std::string& s, int line_no) {
  Decoration d;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw at_line(line_no, "field 'decoration': expected ( starting a curve");
    ++i;
    std::vector<std::int64_t> curve;
    std::string num;
    while (i < s.size() && s[i] != ')') {
      if (s[i] == ',') {
        curve.push_back(parse_i64(num, line_no, "decoration"));
        num.clear();
      } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
        num += s[i];
      }
      ++i;
    }
    if (i == s.size()) throw at_line(line_no, "field 'decoration': unterminated curve");
    if (!num.empty()) curve.push_back(parse_i64(num, line_no, "decoration"));
    if (curve.empty()) throw at_line(line_no, "field 'decoration': empty curve");
    d.curves.push_back(std::move(curve));
    ++i;
  }
  if (d.curves.empty()) throw at_line(line_no, "field 'decoration': no curves");
  return d;
}

}  // namespace detail

// "alexander,support fibered" -> validated analysis list for the mode;
// empty input or "all" expands to everything the mode supports
inline std::vector<Analysis> parse_analysis_list(const std::string& text, Mode mode) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text + " ") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  bool all = tokens.empty();
  std::vector<Analysis> req;
  for (const auto& tok : tokens) {
    if (tok == "all") all = true;
    else if (tok == "alexander") req.push_back(Analysis::Alexander);
    else if (tok == "support") req.push_back(Analysis::Support);
    else if (tok == "extremal") req.push_back(Analysis::Extremal);
    else if (tok == "fibered") req.push_back(Analysis::Fibered);
    else if (tok == "prune") req.push_back(Analysis::Prune);
    else throw SemanticError("field 'analysis': unknown analysis '" + tok + "'");
  }
  std::vector<Analysis> valid =
      mode == Mode::Graph
          ? std::vector<Analysis>{Analysis::Prune}
          : std::vector<Analysis>{Analysis::Alexander, Analysis::Support, Analysis::Extremal,
                                  Analysis::Fibered};
  if (all)
    for (Analysis a : valid) req.push_back(a);
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  for (Analysis a : req)
    if (std::find(valid.begin(), valid.end(), a) == valid.end())
      throw SemanticError(std::string("analysis '") + to_string(a) + "' is not valid in " +
                          to_string(mode) + " mode");
  return req;
}

inline ProblemSpec parse_problem(const std::string& contents) {
  using detail::at_line;
  auto lines = detail::split_lines(contents);

  ProblemSpec spec;
  bool saw_mode = false, saw_generators = false, saw_rank = false, saw_pd = false,
       saw_matrix = false, saw_format = false;
  std::vector<std::string> analysis_tokens;
  std::vector<std::pair<int, std::string>> relator_lines, psi_lines, decoration_lines,
      vertex_lines, edge_lines;
  int pd_line = 0, matrix_line = 0;
  std::string pd_text, matrix_text;

  for (const auto& ln : lines) {
    if (ln.key == "mode") {
      if (saw_mode) throw at_line(ln.no, "duplicate field 'mode'");
      saw_mode = true;
      if (ln.rest == "knot") spec.mode = Mode::Knot;
      else if (ln.rest == "presentation") spec.mode = Mode::Presentation;
      else if (ln.rest == "matrix") spec.mode = Mode::MatrixMode;
      else if (ln.rest == "graph") spec.mode = Mode::Graph;
      else throw at_line(ln.no, "field 'mode': expected knot|presentation|matrix|graph");
    } else if (ln.key == "format") {
      if (saw_format) throw at_line(ln.no, "duplicate field 'format'");
      saw_format = true;
      if (ln.rest == "text") spec.format = OutputFormat::Text;
      else if (ln.rest == "json") spec.format = OutputFormat::Json;
      else throw at_line(ln.no, "field 'format': expected text|json");
    } else if (ln.key == "analysis") {
      analysis_tokens.push_back(ln.rest);
    } else if (ln.key == "pd") {
      if (saw_pd) throw at_line(ln.no, "duplicate field 'pd'");
      saw_pd = true;
      pd_line = ln.no;
      pd_text = ln.rest;
    } else if (ln.key == "arcs") {
      spec.pd.declared_arcs = static_cast<int>(detail::parse_i64(ln.rest, ln.no, "arcs"));
    } else if (ln.key == "generators") {
      if (saw_generators) throw at_line(ln.no, "duplicate field 'generators'");
      saw_generators = true;
      spec.generators = static_cast<int>(detail::parse_i64(ln.rest, ln.no, "generators"));
      if (spec.generators < 0) throw at_line(ln.no, "field 'generators': must be >= 0");
    } else if (ln.key == "relator") {
      relator_lines.emplace_back(ln.no, ln.rest);
    } else if (ln.key == "rank") {
      if (saw_rank) throw at_line(ln.no, "duplicate field 'rank'");
      saw_rank = true;
      spec.rank = static_cast<int>(detail::parse_i64(ln.rest, ln.no, "rank"));
      if (spec.rank < 0) throw at_line(ln.no, "field 'rank': must be >= 0");
    } else if (ln.key == "matrix") {
      if (saw_matrix) throw at_line(ln.no, "duplicate field 'matrix'");
      saw_matrix = true;
      matrix_line = ln.no;
      matrix_text = ln.rest;
    } else if (ln.key == "psi") {
      psi_lines.emplace_back(ln.no, ln.rest);
    } else if (ln.key == "decoration") {
      decoration_lines.emplace_back(ln.no, ln.rest);
    } else if (ln.key == "vertex") {
      vertex_lines.emplace_back(ln.no, ln.rest);
    } else if (ln.key == "edge") {
      edge_lines.emplace_back(ln.no, ln.rest);
    } else {
      throw at_line(ln.no, "unknown field '" + ln.key + "'");
    }
  }

  if (!saw_mode) throw SemanticError("missing field 'mode'");

  std::string joined;
  for (const auto& t : analysis_tokens) joined += t + " ";
  spec.analyses = parse_analysis_list(joined, spec.mode);

  // payload fields must belong to the declared mode
  auto wrong_mode = [&](bool present, const char* field, Mode m) {
    if (present && spec.mode != m)
      throw SemanticError(std::string("field '") + field + "' is only valid in " +
                          to_string(m) + " mode");
  };
  wrong_mode(saw_pd || spec.pd.declared_arcs >= 0, "pd/arcs", Mode::Knot);
  wrong_mode(saw_generators || !relator_lines.empty(), "generators/relator", Mode::Presentation);
  wrong_mode(saw_rank || saw_matrix, "rank/matrix", Mode::MatrixMode);
  wrong_mode(!vertex_lines.empty() || !edge_lines.empty(), "vertex/edge", Mode::Graph);

  // payload per mode
  switch (spec.mode) {
    case Mode::Knot: {
      if (!saw_pd) throw SemanticError("knot mode: missing field 'pd'");
      auto rows = detail::parse_int_rows(pd_text, pd_line, "pd");
      for (const auto& r : rows) {
        if (r.size() != 4) throw at_line(pd_line, "field 'pd': each crossing needs 4 labels");
        spec.pd.crossings.push_back({static_cast<int>(r[0]), static_cast<int>(r[1]),
                                     static_cast<int>(r[2]), static_cast<int>(r[3])});
      }
      break;
    }
    case Mode::Presentation: {
      if (!saw_generators) throw SemanticError("presentation mode: missing field 'generators'");
      for (const auto& [no, text] : relator_lines) {
        try {
          spec.relators.push_back(Word::parse(text, spec.generators));
        } catch (const Error& e) {
          throw SemanticError("line " + std::to_string(no) + ": field 'relator': " + e.what());
        }
      }
      break;
    }
    case Mode::MatrixMode: {
      if (!saw_rank) throw SemanticError("matrix mode: missing field 'rank'");
      if (!saw_matrix) throw SemanticError("matrix mode: missing field 'matrix'");
      auto rows = detail::parse_poly_rows(matrix_text, matrix_line);
      if (rows.empty()) throw at_line(matrix_line, "field 'matrix': no rows");
      std::size_t cols = rows.front().size();
      spec.boundary = Matrix<LaurentPoly>(rows.size(), cols, LaurentPoly(spec.rank));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw at_line(matrix_line, "field 'matrix': ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
          try {
            spec.boundary.at(i, j) = parse_poly(rows[i][j], spec.rank);
          } catch (const Error& e) {
            throw detail::at_line(matrix_line, std::string("field 'matrix': ") + e.what());
          }
        }
      }
      if (spec.boundary.rows() != spec.boundary.cols() && !spec.analyses.empty())
        throw SemanticError(
            "matrix mode: sutured_alexander requires a square boundary matrix (the balanced "
            "chi = 0 reduction); got " +
            std::to_string(spec.boundary.rows()) + "x" + std::to_string(spec.boundary.cols()));
      break;
    }
    case Mode::Graph: {
      if (vertex_lines.empty()) throw SemanticError("graph mode: missing 'vertex' lines");
      int expect = 0;
      for (const auto& [no, text] : vertex_lines) {
        std::istringstream is(text);
        int id;
        std::string color;
        if (!(is >> id >> color)) throw at_line(no, "field 'vertex': expected \"<id> <color>\"");
        if (id != expect)
          throw at_line(no, "field 'vertex': ids must be consecutive from 0 (expected " +
                                std::to_string(expect) + ")");
        ++expect;
        if (color == "green") spec.vertex_colors.push_back(Color::Green);
        else if (color == "black") spec.vertex_colors.push_back(Color::Black);
        else throw at_line(no, "field 'vertex': color must be green|black");
      }
      for (const auto& [no, text] : edge_lines) {
        std::istringstream is(text);
        int tail, head;
        std::string color;
        long long weight;
        if (!(is >> tail >> head >> color >> weight))
          throw at_line(no, "field 'edge': expected \"<tail> <head> <color> <weight>\"");
        Color c;
        if (color == "green") c = Color::Green;
        else if (color == "black") c = Color::Black;
        else throw at_line(no, "field 'edge': color must be green|black");
        spec.graph_edges.push_back({tail, head, c, weight});
      }
      // surface invariant violations now rather than at analysis time
      SuturedGraph check(spec.vertex_colors, spec.graph_edges);
      (void)check;
      break;
    }
  }

  // psi rows (presentation and matrix modes)
  for (const auto& [no, text] : psi_lines) {
    if (spec.mode != Mode::Presentation && spec.mode != Mode::MatrixMode)
      throw SemanticError("line " + std::to_string(no) + ": field 'psi' is only valid in presentation or matrix mode");
    std::istringstream is(text);
    std::vector<std::int64_t> row;
    std::string tok;
    while (is >> tok) row.push_back(detail::parse_i64(tok, no, "psi"));
    if (row.empty()) throw at_line(no, "field 'psi': empty row");
    spec.psi_rows.push_back(std::move(row));
  }
  if (!spec.psi_rows.empty()) {
    std::size_t cols = spec.psi_rows.front().size();
    for (const auto& r : spec.psi_rows)
      if (r.size() != cols) throw SemanticError("field 'psi': ragged rows");
    if (spec.mode == Mode::MatrixMode && static_cast<int>(cols) != spec.rank)
      throw SemanticError("field 'psi': row length " + std::to_string(cols) +
                          " != matrix rank " + std::to_string(spec.rank));
  }

  // decorations
  for (const auto& [no, text] : decoration_lines) {
    if (spec.mode == Mode::Graph)
      throw SemanticError("line " + std::to_string(no) + ": field 'decoration' is not valid in graph mode");
    spec.decorations.push_back(detail::parse_decoration(text, no));
  }

  return spec;
}

inline std::string ProblemSpec::canonical_text() const {
  std::ostringstream os;
  os << "mode " << to_string(mode) << "\n";
  os << "format " << to_string(format) << "\n";
  os << "analysis";
  for (Analysis a : analyses) os << " " << to_string(a);
  os << "\n";
  switch (mode) {
    case Mode::Knot: {
      os << "pd [";
      for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        os << (i ? "," : "") << "[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
      }
      os << "]\n";
      if (pd.declared_arcs >= 0) os << "arcs " << pd.declared_arcs << "\n";
      break;
    }
    case Mode::Presentation: {
      os << "generators " << generators << "\n";
      for (const Word& r : relators) os << "relator " << r.text() << "\n";
      break;
    }
    case Mode::MatrixMode: {
      os << "rank " << rank << "\n";
      os << "matrix [";
      for (std::size_t i = 0; i < boundary.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < boundary.cols(); ++j)
          os << (j ? ", " : "") << to_string(boundary.at(i, j));
        os << "]";
      }
      os << "]\n";
      break;
    }
    case Mode::Graph: {
      for (std::size_t v = 0; v < vertex_colors.size(); ++v)
        os << "vertex " << v << " " << to_string(vertex_colors[v]) << "\n";
      for (const GraphEdge& e : graph_edges)
        os << "edge " << e.tail << " " << e.head << " " << to_string(e.color) << " " << e.weight
           << "\n";
      break;
    }
  }
  for (const auto& row : psi_rows) {
    os << "psi";
    for (auto x : row) os << " " << x;
    os << "\n";
  }
  for (const auto& d : decorations) {
    os << "decoration";
    for (const auto& c : d.curves) {
      os << " (";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace sutura
