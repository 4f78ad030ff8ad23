#pragma once

#include <string>
#include <vector>

namespace fbca {

struct Report {
  struct Item {
    std::string check;
    bool pass = true;
    std::string detail;
  };
  std::vector<Item> items;

  void add(const std::string &check, bool pass, const std::string &detail = "") {
    items.push_back({check, pass, detail});
  }
  bool all_pass() const {
    for (const auto &it : items)
      if (!it.pass) return false;
    return true;
  }
  std::string summary() const {
    std::string out;
    for (const auto &it : items) {
      out += (it.pass ? "[pass] " : "[FAIL] ") + it.check;
      if (!it.pass && !it.detail.empty()) out += ": " + it.detail;
      out += "\n";
    }
    return out;
  }
};

} // namespace fbca
