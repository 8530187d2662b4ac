#include "painleve/report.hpp"

#include <algorithm>

namespace painleve {

void VerificationReport::sort_by_id() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.check_id < b.check_id;
                   });
}

}  // namespace painleve
