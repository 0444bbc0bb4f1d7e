#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpcas/poly.hpp"

namespace wpcas {

// Input file for the command-line tools. One "key: value" per line; '#'
// starts a comment line. List values are comma separated.
//
//   vars: x, y, z, t            required, before anything that parses
//   weights: 4, 5, 6, 9         required
//   poly: <polynomial>          repeatable
//   graph: <polynomial>         repeatable; ideal of a graph
//   gens: 1, u, v               module generators (with graph)
//   keep: x, y, z, t            variables of the subring (with graph)
//   row-degrees: 0, 2, 3        presentation matrix given by columns
//   column: <p1>, <p2>, ...     repeatable, one entry per row
//   row: <a12>, <a13>, ...      repeatable; strict upper triangle of a
//                               skew matrix, row i lists a(i,i+1)...
struct JobFile {
  RingPtr ring;
  std::vector<Poly> polys;
  std::vector<Poly> graph;
  std::vector<Poly> gens;
  std::vector<std::string> keep;
  std::optional<std::vector<int>> row_degrees;
  std::vector<std::vector<Poly>> columns;
  std::vector<std::vector<Poly>> rows;
};

// Problem in a job file; line and column are 1-based (column 0 when the
// problem concerns the whole line).
class JobError : public std::runtime_error {
 public:
  JobError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

JobFile parse_job(std::istream& in);
// Throws JobError(0, 0, ...) when the file cannot be opened.
JobFile load_job(const std::string& path);

}  // namespace wpcas
