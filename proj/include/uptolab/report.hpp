#ifndef UPTOLAB_REPORT_HPP
#define UPTOLAB_REPORT_HPP

// Ordered key/value reports, rendered as `key: value` lines or JSON.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace uptolab {

class Report {
 public:
  using Json = nlohmann::ordered_json;

  Report& add(std::string key, Json value) {
    entries_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Report& add(std::string key, const char* value) { return add(std::move(key), Json(std::string(value))); }

  const std::vector<std::pair<std::string, Json>>& entries() const noexcept { return entries_; }

  std::string text() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + ": " + render(v) + "\n";
    return out;
  }

  Json json() const {
    Json j = Json::object();
    for (const auto& [k, v] : entries_) j[k] = v;
    return j;
  }

  static std::string render(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      for (const auto& e : v) out += (out.empty() ? "" : ", ") + render(e);
      return "[" + out + "]";
    }
    return v.dump();
  }

 private:
  std::vector<std::pair<std::string, Json>> entries_;
};

}  // namespace uptolab

#endif  // UPTOLAB_REPORT_HPP
