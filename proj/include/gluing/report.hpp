#pragma once

#include <string>
#include <vector>

namespace gluing {

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

// Named pass/fail checks with witnesses. A report that is not applicable
// (precondition unmet) never counts as passing.
struct Report {
  std::string title;
  bool applicable = true;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  Check& add(std::string name);
  void record(const std::string& name, bool ok, std::string witness = {});
  void merge(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const;
  bool ok() const;
  std::string render() const;
};

}  // namespace gluing
