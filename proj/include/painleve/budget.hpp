// Cooperative size/time budgets for symbolic computations. Braid words can
// explode; a check that exceeds its budget is reported INDETERMINATE instead
// of wedging the suite.
#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace painleve {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class Budget {
 public:
  Budget(std::size_t monomial_cap, double time_cap_secs)
      : monomial_cap_(monomial_cap),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_cap_secs))) {}

  void check_terms(std::size_t n_terms) const {
    if (monomial_cap_ != 0 && n_terms > monomial_cap_)
      throw BudgetExceeded("monomial cap exceeded: " + std::to_string(n_terms) +
                           " > " + std::to_string(monomial_cap_));
    check_time();
  }

  void check_time() const {
    if (std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded("time cap exceeded");
  }

 private:
  std::size_t monomial_cap_;
  std::chrono::steady_clock::time_point deadline_;
};

// Active budget for the current thread, or nullptr (unlimited).
Budget* current_budget();

// RAII installer; restores the previous budget on destruction.
class BudgetScope {
 public:
  explicit BudgetScope(Budget* b);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  Budget* prev_;
};

inline void budget_check_terms(std::size_t n) {
  if (Budget* b = current_budget()) b->check_terms(n);
}

}  // namespace painleve
