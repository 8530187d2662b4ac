// Machine-readable results: one CheckRecord per verified identity, grouped
// into a VerificationReport. PASS means every residual reduced to the zero
// polynomial; FAIL carries a nonzero witness in canonical text.
#pragma once

#include <string>
#include <vector>

namespace painleve {

enum class CheckStatus { PASS, FAIL, INDETERMINATE };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    default: return "INDETERMINATE";
  }
}

struct CheckRecord {
  std::string check_id;
  std::string subject;
  CheckStatus status = CheckStatus::INDETERMINATE;
  std::string witness;  // canonical residual text; empty on PASS
  std::string note;     // observed orientation, computed order, dimensions...
  double wall_time = 0.0;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void merge(VerificationReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
  }

  bool all_passed() const {
    for (const auto& r : records)
      if (r.status != CheckStatus::PASS) return false;
    return true;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (r.status == s) ++n;
    return n;
  }
  // Sorts records by check_id for deterministic output.
  void sort_by_id();
};

inline CheckRecord make_pass(std::string id, std::string subject,
                             std::string note = "") {
  return CheckRecord{std::move(id), std::move(subject), CheckStatus::PASS, "",
                     std::move(note), 0.0};
}

inline CheckRecord make_fail(std::string id, std::string subject,
                             std::string witness, std::string note = "") {
  return CheckRecord{std::move(id),      std::move(subject),
                     CheckStatus::FAIL,  std::move(witness),
                     std::move(note),    0.0};
}

}  // namespace painleve
