#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ewkit {

// Verification outcome plus ordered witness data. Serialized as key=value
// lines terminated by a blank line; identical inputs yield identical bytes.
struct Certificate {
  std::string property;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> fields;

  Certificate() = default;
  Certificate(std::string prop, bool ok)
      : property(std::move(prop)), pass(ok) {}

  static Certificate failure(std::string prop, std::string reason) {
    Certificate c(std::move(prop), false);
    c.add("reason", std::move(reason));
    return c;
  }

  Certificate& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  void write(std::ostream& os) const;
};

}  // namespace ewkit
