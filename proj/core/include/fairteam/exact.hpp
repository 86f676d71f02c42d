#pragma once

#include "fairteam/solve_result.hpp"

namespace fairteam {

// Exhaustive ground-truth solvers. Ties on revenue are broken toward the
// larger reward, then the smaller bitmask, so runs are reproducible.

// Optimal fair contract by scanning every team and pricing it at its optimal
// minimum share. Submodular models only (the share characterization is what
// makes the per-team optimum valid).
SolveResult optimal_fair_bruteforce(const Instance& inst, int enum_cap = kDefaultEnumCap);

// Optimal non-discriminatory contract: every team pays the uniform share equal
// to its largest member cut-off wage.
SolveResult optimal_nondiscriminatory_bruteforce(const Instance& inst,
                                                 int enum_cap = kDefaultEnumCap);

}  // namespace fairteam
