#include "seminf/algebra_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "strings.hpp"

namespace seminf {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

/// Content lines with comments and blanks removed.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view view = raw;
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ' ||
                             view.back() == '\t'))
      view.remove_suffix(1);
    std::string_view lead = view;
    while (!lead.empty() && (lead.front() == ' ' || lead.front() == '\t'))
      lead.remove_prefix(1);
    if (lead.empty() || lead.front() == '#') continue;
    out.push_back({number, std::string(view)});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw IoError(concat("line ", line, ": ", message));
}

std::vector<int> parse_name_row(const std::vector<std::string>& toks,
                                std::size_t start,
                                const std::unordered_map<std::string, int>& ix,
                                std::size_t line) {
  std::vector<int> row;
  for (std::size_t i = start; i < toks.size(); ++i) {
    auto it = ix.find(toks[i]);
    if (it == ix.end()) fail(line, concat("unknown element '", toks[i], "'"));
    row.push_back(it->second);
  }
  return row;
}

}  // namespace

AlgebraFile read_algebra_file(std::istream& in) {
  const std::vector<Line> lines = content_lines(in);
  std::size_t pos = 0;
  auto need = [&](const char* what) -> const Line& {
    if (pos >= lines.size())
      throw IoError(concat("unexpected end of file, expected ", what));
    return lines[pos];
  };

  const Line& header = need("%algebra");
  std::vector<std::string> toks = tokens(header.text);
  if (toks.size() != 2 || toks[0] != "%algebra")
    fail(header.number, "expected '%algebra NAME'");
  std::string name = toks[1];
  ++pos;

  const Line& elems_line = need("%elements");
  toks = tokens(elems_line.text);
  if (toks.size() < 2 || toks[0] != "%elements")
    fail(elems_line.number, "expected '%elements e1 e2 ...'");
  std::vector<std::string> elements(toks.begin() + 1, toks.end());
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> ix;
  for (int i = 0; i < n; ++i)
    if (!ix.emplace(elements[i], i).second)
      fail(elems_line.number, concat("duplicate element '", elements[i], "'"));
  ++pos;

  auto read_table = [&](const char* directive) {
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      const Line& row_line = need(concat("a row of ", directive).c_str());
      const auto row_toks = tokens(row_line.text);
      if (!row_toks.empty() && row_toks[0].starts_with("%"))
        fail(row_line.number,
             concat("expected ", n, " more row(s) of ", directive));
      const std::vector<int> row =
          parse_name_row(row_toks, 0, ix, row_line.number);
      if (static_cast<int>(row.size()) != n)
        fail(row_line.number, concat("expected ", n, " entries, got ",
                                     row.size()));
      table.insert(table.end(), row.begin(), row.end());
      ++pos;
    }
    return table;
  };

  const Line& mul_line = need("%mul");
  toks = tokens(mul_line.text);
  if (toks.size() != 1 || toks[0] != "%mul") fail(mul_line.number,
                                                  "expected '%mul'");
  ++pos;
  std::vector<int> mul = read_table("%mul");

  AlgebraFile file;
  std::vector<int> inv, add;
  std::vector<std::string> matrix_lines;
  std::vector<std::size_t> matrix_line_numbers;
  while (pos < lines.size()) {
    const Line& line = lines[pos];
    toks = tokens(line.text);
    if (toks[0] == "%inv") {
      if (!inv.empty()) fail(line.number, "duplicate %inv");
      inv = parse_name_row(toks, 1, ix, line.number);
      if (static_cast<int>(inv.size()) != n)
        fail(line.number, concat("expected ", n, " entries after %inv"));
      ++pos;
    } else if (toks[0] == "%add") {
      if (!add.empty()) fail(line.number, "duplicate %add");
      if (toks.size() != 1) fail(line.number, "expected bare '%add'");
      ++pos;
      add = read_table("%add");
    } else if (toks[0] == "%matrices") {
      if (toks.size() != 1) fail(line.number, "expected bare '%matrices'");
      ++pos;
      for (int r = 0; r < n; ++r) {
        const Line& m_line = need("a %matrices row");
        matrix_lines.push_back(m_line.text);
        matrix_line_numbers.push_back(m_line.number);
        ++pos;
      }
    } else if (toks[0].starts_with("%")) {
      fail(line.number, concat("unknown directive '", toks[0], "'"));
    } else {
      fail(line.number, concat("unexpected content '", line.text, "'"));
    }
  }

  file.algebra = validate_table(std::move(name), std::move(elements),
                                std::move(mul));
  if (!inv.empty()) {
    // The unique-inverse map is unique; anything else in %inv is corrupt.
    // Additions are accepted as-is: verify_ai_semiring exists to judge them.
    if (inverse_map(file.algebra) != inv)
      throw IoError(concat("%inv of ", file.algebra.name,
                           " is not the unique-inverse map"));
    file.algebra.inv = std::move(inv);
  }
  if (!add.empty()) file.algebra.add = std::move(add);

  if (!matrix_lines.empty()) {
    // Parse "NAME: c->r ...", dimension = largest index mentioned.
    struct RawMap {
      int element;
      std::vector<std::pair<int, int>> pairs;
    };
    std::vector<RawMap> raw;
    int dim = 0;
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < matrix_lines.size(); ++i) {
      const std::size_t ln = matrix_line_numbers[i];
      const auto toks2 = tokens(matrix_lines[i]);
      if (toks2.empty() || toks2[0].size() < 2 || toks2[0].back() != ':')
        fail(ln, "expected 'NAME: c1->r1 c2->r2 ...'");
      const std::string ename = toks2[0].substr(0, toks2[0].size() - 1);
      auto it = ix.find(ename);
      if (it == ix.end()) fail(ln, concat("unknown element '", ename, "'"));
      if (seen[it->second]) fail(ln, concat("duplicate matrix for '", ename,
                                            "'"));
      seen[it->second] = 1;
      RawMap rm{it->second, {}};
      for (std::size_t t = 1; t < toks2.size(); ++t) {
        const std::string& pair = toks2[t];
        const std::size_t arrow = pair.find("->");
        if (arrow == std::string::npos)
          fail(ln, concat("expected 'c->r', got '", pair, "'"));
        int col = 0, row = 0;
        try {
          col = std::stoi(pair.substr(0, arrow));
          row = std::stoi(pair.substr(arrow + 2));
        } catch (const std::exception&) {
          fail(ln, concat("bad pair '", pair, "'"));
        }
        if (col < 1 || row < 1) fail(ln, concat("bad pair '", pair, "'"));
        dim = std::max({dim, col, row});
        rm.pairs.emplace_back(col, row);
      }
      raw.push_back(std::move(rm));
    }
    if (dim == 0)
      throw IoError("%matrices section never mentions an index; "
                    "the dimension cannot be inferred");
    file.matrices.assign(n, PartialInjection(dim));
    for (const auto& rm : raw) {
      std::vector<int> image(dim, PartialInjection::kUndefined);
      for (const auto& [col, row] : rm.pairs) {
        if (image[col - 1] != PartialInjection::kUndefined)
          throw IoError(concat("column ", col, " repeated for element ",
                               file.algebra.elements[rm.element]));
        image[col - 1] = row - 1;
      }
      file.matrices[rm.element] = PartialInjection::from_map(std::move(image));
    }
    for (int i = 0; i < n; ++i)
      if (!seen[i])
        throw IoError(concat("missing matrix for element '",
                             file.algebra.elements[i], "'"));
  }

  // Elements named c1..ck, when all present from 1 up, act as generators.
  for (int k = 1;; ++k) {
    const int idx = file.algebra.element_index(concat("c", k));
    if (idx < 0) break;
    file.generators.push_back(idx);
  }
  return file;
}

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(concat("cannot open ", path.string()));
  try {
    return read_algebra_file(in);
  } catch (const IoError& e) {
    throw IoError(concat(path.string(), ": ", e.what()));
  }
}

namespace {

void write_common(std::ostream& out, const FiniteAlgebra& s) {
  const int n = s.size();
  out << "%algebra " << s.name << "\n%elements";
  for (const auto& e : s.elements) out << ' ' << e;
  out << "\n%mul\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      out << (b ? " " : "") << s.elements[s.product(a, b)];
    out << '\n';
  }
  if (s.has_inv()) {
    out << "%inv";
    for (int a = 0; a < n; ++a) out << ' ' << s.elements[s.inverse(a)];
    out << '\n';
  }
  if (s.has_add()) {
    out << "%add\n";
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        out << (b ? " " : "") << s.elements[s.sum(a, b)];
      out << '\n';
    }
  }
}

}  // namespace

void write_algebra_file(std::ostream& out, const FiniteAlgebra& algebra) {
  write_common(out, algebra);
}

void write_algebra_file(std::ostream& out, const GeneratedAlgebra& algebra) {
  write_common(out, algebra.base);
  out << "%matrices\n";
  for (int i = 0; i < algebra.base.size(); ++i) {
    out << algebra.base.elements[i] << ':';
    for (const auto& [col, row] : algebra.reps[i].pairs())
      out << ' ' << col << "->" << row;
    out << '\n';
  }
}

std::string to_algebra_text(const FiniteAlgebra& algebra) {
  std::ostringstream out;
  write_algebra_file(out, algebra);
  return out.str();
}

std::string to_algebra_text(const GeneratedAlgebra& algebra) {
  std::ostringstream out;
  write_algebra_file(out, algebra);
  return out.str();
}

namespace {

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(concat("cannot write ", path.string()));
  out << text;
  if (!out) throw IoError(concat("failed writing ", path.string()));
}

}  // namespace

void save_algebra_file(const std::filesystem::path& path,
                       const FiniteAlgebra& algebra) {
  save_text(path, to_algebra_text(algebra));
}

void save_algebra_file(const std::filesystem::path& path,
                       const GeneratedAlgebra& algebra) {
  save_text(path, to_algebra_text(algebra));
}

GeneratedAlgebra to_generated(const AlgebraFile& file) {
  if (!file.has_matrices())
    throw Error(concat("algebra ", file.algebra.name,
                       " has no %matrices section"));
  GeneratedAlgebra out;
  out.base = file.algebra;
  out.reps = file.matrices;
  out.generators = file.generators;
  return out;
}

}  // namespace seminf
