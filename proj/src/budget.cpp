#include "painleve/budget.hpp"

namespace painleve {

namespace {
thread_local Budget* g_budget = nullptr;
}

Budget* current_budget() { return g_budget; }

BudgetScope::BudgetScope(Budget* b) : prev_(g_budget) { g_budget = b; }
BudgetScope::~BudgetScope() { g_budget = prev_; }

}  // namespace painleve
