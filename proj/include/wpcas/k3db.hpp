#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpcas {

// Cyclic quotient singularity 1/r(a,b).
struct BasketEntry {
  int r = 0;
  int a = 0;
  int b = 0;

  // Throws std::invalid_argument unless 0 < a,b < r, gcd(a,r) = 1 and
  // a + b = 0 mod r.
  void validate() const;
  std::string to_string() const;  // "1/5(2,3)"
  friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
};

struct Centre {
  // Absent when the source names the projection type but not the point.
  std::optional<BasketEntry> point;
  std::vector<int> types;  // projection types, each in 1..4
  friend bool operator==(const Centre&, const Centre&) = default;
};

struct K3Entry {
  std::string name;
  std::optional<std::vector<int>> weights;
  int codimension = 0;
  std::vector<BasketEntry> basket;
  // (degree, coefficient) pairs in stored order; stored order is kept so a
  // misprinted numerator can be recorded verbatim.
  std::optional<std::vector<std::pair<int, long>>> numerator;
  std::vector<Centre> centres;
  std::string notes;

  // Throws std::invalid_argument naming the entry.
  void validate() const;
  friend bool operator==(const K3Entry&, const K3Entry&) = default;
};

// Schema or invariant violation while reading a database file. line() is
// 1-based, 0 when the problem is not tied to one line.
class DbError : public std::runtime_error {
 public:
  DbError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// JSON Lines: one object per line. Blank lines and lines starting with '#'
// are skipped. Entry names must be unique.
std::vector<K3Entry> load_db(std::istream& in);
std::vector<K3Entry> load_db_file(const std::string& path);
void save_db(std::ostream& out, const std::vector<K3Entry>& db);
std::string entry_to_json(const K3Entry& e);

// Entries matching every filter given, in database order. A centre type k
// matches entries with at least one centre whose type list contains k.
std::vector<K3Entry> query(const std::vector<K3Entry>& db, std::optional<int> codimension,
                           std::optional<int> centre_type, std::optional<std::string> name = std::nullopt);

const std::vector<Centre>& centres(const K3Entry& e);

// Human-readable block of lines.
std::string describe(const K3Entry& e);

}  // namespace wpcas
