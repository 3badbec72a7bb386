#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ldt {

uint64_t fnv1a64(std::string_view data);
std::string hex16(uint64_t v);

// Ordered key-value report, rendered as one "key value" line per entry.
// Key order is fixed by insertion so outputs can be diffed against goldens.
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, int64_t value);
  void add(std::string key, uint64_t value);
  void add(std::string key, int value) { add(std::move(key), static_cast<int64_t>(value)); }
  void add(std::string key, bool value);
  void add(std::string key, double value);  // fixed 6-digit precision

  std::string text() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

}  // namespace ldt
