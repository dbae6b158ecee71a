#pragma once

// Deterministic line-oriented check reports.  Every verification in the
// project produces "key: PASS" or "key: FAIL [witness: ...]" lines, in a fixed
// order, with no addresses, timestamps, or locale-dependent formatting, so two
// runs of the same check are byte-identical.

#include <ostream>
#include <string>
#include <vector>

namespace glint {

struct CheckLine {
  std::string key;
  bool pass = false;
  std::string witness;  // empty unless FAIL (or informational)
};

struct Report {
  std::vector<CheckLine> lines;

  void add(const std::string& key, bool pass, const std::string& witness = "") {
    lines.push_back({key, pass, witness});
  }

  void merge(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  // First failing line, or nullptr.
  const CheckLine* first_fail() const {
    for (const auto& l : lines)
      if (!l.pass) return &l;
    return nullptr;
  }

  std::string str() const {
    std::string out;
    for (const auto& l : lines) {
      out += l.key;
      out += l.pass ? ": PASS" : ": FAIL";
      if (!l.witness.empty()) {
        out += " [witness: ";
        out += l.witness;
        out += "]";
      }
      out += "\n";
    }
    return out;
  }

  void print(std::ostream& os) const { os << str(); }
};

}  // namespace glint
