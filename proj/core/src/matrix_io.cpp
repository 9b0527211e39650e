#include "gromov/matrix_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gromov/format.hpp"

namespace gromov {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with comments removed, split on whitespace and `separators`.
std::vector<Line> tokenize(std::string_view text, std::string_view separators) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = strip(raw);
    if (raw.empty()) continue;
    Line line{number, {}};
    std::string token;
    for (char c : raw) {
      if (c == ' ' || c == '\t' || c == '\r' ||
          separators.find(c) != std::string_view::npos) {
        if (!token.empty()) line.tokens.push_back(std::move(token));
        token.clear();
      } else {
        token.push_back(c);
      }
    }
    if (!token.empty()) line.tokens.push_back(std::move(token));
    lines.push_back(std::move(line));
  }
  return lines;
}

double number_at(const Line& line, std::size_t index, const char* what) {
  try {
    return parse_double(line.tokens.at(index), what);
  } catch (const Error& e) {
    throw ParseError(line.number, e.what());
  }
}

Matrix parse_json_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw ParseError(1, "matrix JSON needs keys \"n\" and \"entries\"");
  }
  if (!doc["n"].is_number_unsigned()) {
    throw ParseError(1, "\"n\" must be a non-negative integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != n * n) {
    throw StructuralError("\"entries\" must hold n*n = " +
                          std::to_string(n * n) + " numbers");
  }
  const auto size = static_cast<Eigen::Index>(n);
  Matrix m(size, size);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (!entries[k].is_number()) {
      throw ParseError(1, "entry " + std::to_string(k) + " is not a number");
    }
    m(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) =
        entries[k].get<double>();
  }
  return m;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Matrix parse_matrix(std::string_view text) {
  const auto body = strip(text);
  if (!body.empty() && body.front() == '{') return parse_json_matrix(body);

  const auto lines = tokenize(text, ",;");
  const auto n = lines.size();
  const auto size = static_cast<Eigen::Index>(n);
  Matrix m(size, size);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != n) {
      throw StructuralError("line " + std::to_string(line.number) + ": row has " +
                            std::to_string(line.tokens.size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          number_at(line, j, "matrix entry");
    }
  }
  return m;
}

Matrix read_matrix(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path));
}

std::string format_matrix_csv(const Matrix& matrix) {
  std::string out;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(matrix(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_json(const Matrix& matrix) {
  nlohmann::json doc;
  doc["n"] = matrix.rows();
  auto entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      entries.push_back(matrix(i, j));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

BuildProgram parse_program(std::string_view text) {
  BuildProgram program;
  bool seen_perm = false;
  for (const auto& line : tokenize(text, "")) {
    const auto& op = line.tokens.front();
    const auto arity = line.tokens.size() - 1;
    const auto expect = [&](std::size_t count) {
      if (arity != count) {
        throw ParseError(line.number, "'" + op + "' takes " +
                                          std::to_string(count) +
                                          " argument(s)");
      }
    };
    if (seen_perm) throw ParseError(line.number, "op after perm trailer");
    if (op == "init") {
      expect(1);
      program.ops.push_back(Init{number_at(line, 1, "init")});
    } else if (op == "dsum") {
      expect(0);
      program.ops.push_back(DirectSum{});
    } else if (op == "ext1") {
      expect(1);
      program.ops.push_back(ExtensionI{number_at(line, 1, "ext1")});
    } else if (op == "ext2") {
      expect(2);
      program.ops.push_back(
          ExtensionII{number_at(line, 1, "ext2"), number_at(line, 2, "ext2")});
    } else if (op == "perm") {
      seen_perm = true;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        const double p = number_at(line, k, "perm");
        if (p < 1 || p != static_cast<double>(static_cast<std::size_t>(p))) {
          throw ParseError(line.number, "perm entries are positive integers");
        }
        program.permutation.push_back(static_cast<std::size_t>(p) - 1);
      }
    } else {
      throw ParseError(line.number, "unknown op '" + op + "'");
    }
  }
  return program;
}

BuildProgram read_program(const std::filesystem::path& path) {
  return parse_program(read_text_file(path));
}

std::string format_program(const BuildProgram& program) {
  std::string out;
  for (const auto& op : program.ops) {
    if (const auto* o = std::get_if<Init>(&op)) {
      out += "init " + format_double(o->a);
    } else if (std::holds_alternative<DirectSum>(op)) {
      out += "dsum";
    } else if (const auto* e1 = std::get_if<ExtensionI>(&op)) {
      out += "ext1 " + format_double(e1->a);
    } else if (const auto* e2 = std::get_if<ExtensionII>(&op)) {
      out += "ext2 " + format_double(e2->a) + " " + format_double(e2->b);
    }
    out += '\n';
  }
  if (!program.permutation.empty()) {
    out += "perm";
    for (std::size_t p : program.permutation) out += " " + std::to_string(p + 1);
    out += '\n';
  }
  return out;
}

bool looks_like_base(std::string_view text) {
  const auto lines = tokenize(text, "");
  return !lines.empty() && lines.front().tokens.size() == 1 &&
         lines.front().tokens.front() == "tree";
}

Base parse_base(std::string_view text) {
  const auto lines = tokenize(text, "");
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{"tree"}) {
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "expected header 'tree'");
  }
  std::vector<TreeEdge> edges;
  std::vector<std::string> isolated;
  std::optional<std::string> base_vertex;
  std::optional<std::vector<std::string>> base_set;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& head = line.tokens.front();
    if (head == "base_vertex") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "base_vertex takes one node");
      }
      base_vertex = line.tokens[1];
    } else if (head == "base_set") {
      base_set.emplace(line.tokens.begin() + 1, line.tokens.end());
    } else if (line.tokens.size() == 3) {
      edges.push_back({line.tokens[0], line.tokens[1],
                       number_at(line, 2, "edge weight")});
    } else if (line.tokens.size() == 1) {
      isolated.push_back(head);
    } else {
      throw ParseError(line.number, "expected 'u v w'");
    }
  }
  if (!base_vertex) throw ParseError(lines.back().number, "missing base_vertex");
  if (!base_set) throw ParseError(lines.back().number, "missing base_set");
  isolated.push_back(*base_vertex);
  WeightedTree tree(std::move(edges), std::move(isolated));
  return Base(std::move(tree), *base_vertex, std::move(*base_set));
}

Base read_base(const std::filesystem::path& path) {
  return parse_base(read_text_file(path));
}

std::string format_base(const Base& base) {
  std::string out = "tree\n";
  const auto& tree = base.tree();
  if (tree.size() == 1) out += tree.name(0) + "\n";
  for (const auto& edge : tree.edges()) {
    out += edge.u + " " + edge.v + " " + format_double(edge.weight) + "\n";
  }
  out += "base_vertex " + base.base_vertex() + "\n";
  out += "base_set";
  for (const auto& v : base.base_set()) out += " " + v;
  out += "\n";
  return out;
}

}  // namespace gromov
