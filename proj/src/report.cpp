#include "ldt/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ldt {

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void Report::add(std::string key, std::string value) {
  kv_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, int64_t value) {
  kv_.emplace_back(std::move(key), std::to_string(value));
}

void Report::add(std::string key, uint64_t value) {
  kv_.emplace_back(std::move(key), std::to_string(value));
}

void Report::add(std::string key, bool value) {
  kv_.emplace_back(std::move(key), value ? "true" : "false");
}

void Report::add(std::string key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  kv_.emplace_back(std::move(key), buf);
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : kv_) {
    out += k;
    out += ' ';
    out += v;
    out += '\n';
  }
  return out;
}

void Report::write(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write report: " + path);
  os << text();
}

}  // namespace ldt
