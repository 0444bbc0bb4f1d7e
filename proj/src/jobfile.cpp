#include "wpcas/jobfile.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "wpcas/parse.hpp"

namespace wpcas {

JobError::JobError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(line == 0     ? what
                         : column == 0 ? "line " + std::to_string(line) + ": " + what
                                       : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                             what),
      line_(line),
      column_(column) {}

namespace {

struct Item {
  std::string text;
  std::size_t column;  // 1-based column of text[0] in the line
};

std::vector<Item> split_items(const std::string& line, std::size_t start) {
  std::vector<Item> out;
  std::size_t pos = start;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    const std::size_t end = comma == std::string::npos ? line.size() : comma;
    std::size_t a = pos, b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
    out.push_back({line.substr(a, b - a), a + 1});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

JobFile parse_job(std::istream& in) {
  JobFile job;
  std::optional<std::vector<std::string>> vars;
  std::optional<std::vector<int>> weights;
  std::string line;
  std::size_t lineno = 0;

  auto need_ring = [&](std::size_t ln) {
    if (job.ring) return;
    if (!vars || !weights) throw JobError(ln, 0, "'vars' and 'weights' must come first");
    if (vars->size() != weights->size())
      throw JobError(ln, 0, "'vars' and 'weights' have different lengths");
    try {
      job.ring = Ring::create(*vars, *weights);
    } catch (const std::invalid_argument& e) {
      throw JobError(ln, 0, e.what());
    }
  };
  auto poly_at = [&](const Item& item, std::size_t ln) {
    try {
      return parse_poly(item.text, job.ring);
    } catch (const ParseError& e) {
      throw JobError(ln, item.column + e.position(), e.what());
    }
  };
  auto poly_list = [&](const std::string& l, std::size_t start, std::size_t ln) {
    need_ring(ln);
    std::vector<Poly> out;
    for (const auto& item : split_items(l, start)) out.push_back(poly_at(item, ln));
    return out;
  };
  auto int_list = [&](const std::string& l, std::size_t start, std::size_t ln) {
    std::vector<int> out;
    for (const auto& item : split_items(l, start)) {
      int v = 0;
      const auto res = std::from_chars(item.text.data(), item.text.data() + item.text.size(), v);
      if (item.text.empty() || res.ec != std::errc() || res.ptr != item.text.data() + item.text.size())
        throw JobError(ln, item.column, "expected an integer, got '" + item.text + "'");
      out.push_back(v);
    }
    return out;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw JobError(lineno, first + 1, "expected 'key: value'");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    const std::size_t start = colon + 1;

    if (key == "vars") {
      if (vars) throw JobError(lineno, 0, "'vars' given twice");
      vars.emplace();
      for (const auto& item : split_items(line, start)) vars->push_back(item.text);
    } else if (key == "weights") {
      if (weights) throw JobError(lineno, 0, "'weights' given twice");
      weights = int_list(line, start, lineno);
    } else if (key == "poly") {
      need_ring(lineno);
      std::size_t a = start, b = line.size();
      while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      job.polys.push_back(poly_at(Item{line.substr(a, b - a), a + 1}, lineno));
    } else if (key == "graph") {
      need_ring(lineno);
      for (auto& p : poly_list(line, start, lineno)) job.graph.push_back(std::move(p));
    } else if (key == "gens") {
      job.gens = poly_list(line, start, lineno);
    } else if (key == "keep") {
      for (const auto& item : split_items(line, start)) job.keep.push_back(item.text);
    } else if (key == "row-degrees") {
      job.row_degrees = int_list(line, start, lineno);
    } else if (key == "column") {
      job.columns.push_back(poly_list(line, start, lineno));
    } else if (key == "row") {
      job.rows.push_back(poly_list(line, start, lineno));
    } else {
      throw JobError(lineno, first + 1, "unknown key '" + key + "'");
    }
  }
  if (!job.ring) need_ring(lineno);
  if (!job.columns.empty()) {
    if (!job.row_degrees) throw JobError(0, 0, "'column' lines need 'row-degrees'");
    for (const auto& c : job.columns)
      if (c.size() != job.row_degrees->size())
        throw JobError(0, 0, "every column needs one entry per row degree");
  }
  return job;
}

JobFile load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JobError(0, 0, "cannot open " + path);
  return parse_job(in);
}

}  // namespace wpcas
