#pragma once

// Grid kernels over (n,k). Each has an OpenMP version and a serial reference
// that tests compare it against; results are identical and ordered by (k,n)
// whatever the schedule.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclojones/bracket.hpp"
#include "cyclojones/execution.hpp"
#include "cyclojones/wnk.hpp"

namespace cyclojones {

// Worker threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

// Level k+1 over [lo, hi] from level k.
BracketLevel next_level(const BracketLevel& prev, std::int64_t lo, std::int64_t hi,
                        Execution exec);

struct VerifyCell {
  FamilyParams params;
  bool agree = false;
  std::string detail;  // empty when agree
};

struct VerifyOptions {
  Execution exec = Execution::parallel;
  // Test hook: perturbs the closed-form result of one cell.
  std::optional<FamilyParams> inject_fault;
};

// Closed form vs. kink recursion for every cell of the grid, exact.
std::vector<VerifyCell> verify_grid(IntRange n_range, IntRange k_range,
                                    const VerifyOptions& options = {});

struct SymmetryCell {
  FamilyParams params;
  bool polynomial_symmetric = false;
  SymmetryClass predicted;  // from the parameters alone
  // For predicted-symmetric cells: V == phi_tilde(m).
  bool matches_phi_tilde = false;

  // The "if and only if" holds for this cell and symmetric cells match.
  bool consistent() const;
};

std::vector<SymmetryCell> symmetry_sweep(IntRange n_range, IntRange k_range,
                                         Execution exec = Execution::parallel);

}  // namespace cyclojones
