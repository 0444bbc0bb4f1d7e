#include "wpcas/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace wpcas {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Flag:
      return "FLAG";
    case CheckStatus::Info:
      return "INFO";
  }
  return "?";
}

void UnprojectionReport::set_meta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : meta_)
    if (k == key) {
      v = value;
      return;
    }
  meta_.emplace_back(key, value);
}

bool UnprojectionReport::expect(const std::string& id, const std::string& anchor, bool ok,
                                const std::string& detail) {
  checks_.push_back({id, anchor, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  return ok;
}

void UnprojectionReport::flag(const std::string& id, const std::string& anchor, const std::string& detail) {
  checks_.push_back({id, anchor, CheckStatus::Flag, detail});
}

void UnprojectionReport::info(const std::string& id, const std::string& anchor, const std::string& detail) {
  checks_.push_back({id, anchor, CheckStatus::Info, detail});
}

void UnprojectionReport::append(const UnprojectionReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool UnprojectionReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t UnprojectionReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* UnprojectionReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

std::string UnprojectionReport::to_text() const {
  std::ostringstream os;
  os << "# " << title_ << "\n";
  for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << "\n";
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.id.size());
  for (const auto& c : checks_) {
    os << status_name(c.status) << "  " << c.id << std::string(width - c.id.size() + 2, ' ') << c.detail;
    if (!c.anchor.empty()) os << "  [" << c.anchor << "]";
    os << "\n";
  }
  os << "# summary: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail) << " fail, "
     << count(CheckStatus::Flag) << " flag, " << count(CheckStatus::Info) << " info\n";
  return os.str();
}

std::string UnprojectionReport::to_kv() const {
  std::ostringstream os;
  nlohmann::ordered_json head;
  head["report"] = title_;
  for (const auto& [k, v] : meta_) head[k] = v;
  head["passed"] = passed();
  os << head.dump() << "\n";
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["detail"] = c.detail;
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace wpcas
