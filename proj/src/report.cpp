#include "gluing/report.hpp"

#include <algorithm>

namespace gluing {

namespace {
constexpr std::size_t kMaxWitnesses = 8;
}

Check& Report::add(std::string name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back(Check{std::move(name), true, {}});
  return checks.back();
}

void Report::record(const std::string& name, bool ok, std::string witness) {
  Check& c = add(name);
  if (ok) return;
  c.passed = false;
  if (!witness.empty() && c.witnesses.size() < kMaxWitnesses)
    c.witnesses.push_back(std::move(witness));
}

void Report::merge(const Report& other, const std::string& prefix) {
  if (!other.applicable) applicable = false;
  for (const auto& c : other.checks) {
    Check& mine = add(prefix + c.name);
    mine.passed = mine.passed && c.passed;
    for (const auto& w : c.witnesses)
      if (mine.witnesses.size() < kMaxWitnesses) mine.witnesses.push_back(w);
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::ok() const {
  return applicable &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Report::render() const {
  std::string out;
  if (!title.empty()) out += title + (applicable ? "" : " [not applicable]") + "\n";
  for (const auto& c : checks) {
    out += "  " + std::string(c.passed ? "pass" : "FAIL") + "  " + c.name + "\n";
    for (const auto& w : c.witnesses) out += "        witness: " + w + "\n";
  }
  for (const auto& n : notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace gluing
