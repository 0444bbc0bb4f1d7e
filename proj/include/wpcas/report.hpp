#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wpcas {

enum class CheckStatus { Pass, Fail, Flag, Info };

const char* status_name(CheckStatus s);

// One verified claim. FLAG marks a discrepancy with the printed source that
// was resolved in favour of the computed value; it does not fail a report.
struct Check {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::Info;
  std::string detail;
};

class UnprojectionReport {
 public:
  explicit UnprojectionReport(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& meta() const { return meta_; }

  void set_meta(const std::string& key, const std::string& value);
  // Adds a PASS or FAIL entry; returns ok.
  bool expect(const std::string& id, const std::string& anchor, bool ok, const std::string& detail);
  void flag(const std::string& id, const std::string& anchor, const std::string& detail);
  void info(const std::string& id, const std::string& anchor, const std::string& detail);
  void append(const UnprojectionReport& other);

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  const Check* find(const std::string& id) const;

  // Aligned text, one check per line, then a summary line.
  std::string to_text() const;
  // JSON Lines: a header object, then {id, anchor, status, detail} per check.
  std::string to_kv() const;

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<Check> checks_;
};

}  // namespace wpcas
