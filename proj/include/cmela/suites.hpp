#pragma once

#include "cmela/registry.hpp"

namespace cmela::suites {

// Each function appends one suite's problems to the registry. Formulas follow the published
// suite definitions as implemented in pymoo.

void add_cdtlz(ProblemRegistry& registry);
void add_dcdtlz(ProblemRegistry& registry);
void add_dascmop(ProblemRegistry& registry);
void add_mw(ProblemRegistry& registry);
void add_ctp(ProblemRegistry& registry);

}  // namespace cmela::suites
