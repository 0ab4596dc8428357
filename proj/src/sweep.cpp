#include "cyclojones/sweep.hpp"

#include <exception>

#ifdef CYCLOJONES_HAVE_OPENMP
#include <omp.h>
#endif

#include "cyclojones/cyclotomic.hpp"

namespace cyclojones {

int parallel_threads() {
#ifdef CYCLOJONES_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

std::vector<FamilyParams> grid_cells(IntRange n_range, IntRange k_range) {
  std::vector<FamilyParams> cells;
  for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k)
    for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) cells.emplace_back(n, k);
  return cells;
}

// Runs body(i) for i in [0, count). Exceptions inside the parallel region are
// captured and the first one rethrown afterwards.
template <class Body>
void for_each_index(std::int64_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#ifdef CYCLOJONES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#ifdef CYCLOJONES_HAVE_OPENMP
#pragma omp critical(cyclojones_sweep_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

BracketLevel next_level(const BracketLevel& prev, std::int64_t lo, std::int64_t hi,
                        Execution exec) {
  if (hi < lo) throw DomainError("empty bracket window");
  std::vector<LaurentPoly> values(static_cast<std::size_t>(hi - lo + 1),
                                  LaurentPoly(Variable::A));
  for_each_index(hi - lo + 1, exec, [&](std::int64_t i) {
    values[static_cast<std::size_t>(i)] = next_bracket(lo + i, prev);
  });
  return BracketLevel(prev.k() + 1, lo, std::move(values));
}

std::vector<VerifyCell> verify_grid(IntRange n_range, IntRange k_range,
                                    const VerifyOptions& options) {
  if (n_range.size() == 0 || k_range.size() == 0 || k_range.lo < 0)
    throw DomainError("verify needs non-empty ranges with k >= 0");
  const std::int64_t radius = std::max(magnitude(n_range.lo), magnitude(n_range.hi));

  const std::vector<BracketLevel> levels = bracket_levels(radius, k_range.hi, options.exec);

  const std::vector<FamilyParams> cells = grid_cells(n_range, k_range);
  std::vector<VerifyCell> out(cells.size());
  for_each_index(static_cast<std::int64_t>(cells.size()), options.exec, [&](std::int64_t i) {
    const FamilyParams& p = cells[static_cast<std::size_t>(i)];
    VerifyCell& cell = out[static_cast<std::size_t>(i)];
    cell.params = p;
    try {
      LaurentPoly closed = jones_wnk(p);
      if (options.inject_fault && *options.inject_fault == p)
        closed += LaurentPoly::monomial(1, closed.max_exponent());
      LaurentPoly recursed =
          bracket_to_jones(p, levels[static_cast<std::size_t>(p.k)].at(p.n));
      cell.agree = closed == recursed;
      if (!cell.agree)
        cell.detail = "closed form " + to_string(closed) + " vs recursion " + to_string(recursed);
    } catch (const std::exception& e) {
      cell.agree = false;
      cell.detail = e.what();
    }
  });
  return out;
}

bool SymmetryCell::consistent() const {
  if (predicted.symmetric()) return polynomial_symmetric && matches_phi_tilde;
  return !polynomial_symmetric || (params.k == 0 && is_trivial_unknot(params));
}

std::vector<SymmetryCell> symmetry_sweep(IntRange n_range, IntRange k_range, Execution exec) {
  if (k_range.lo < 0) throw DomainError("symmetry sweep needs k >= 0");
  const std::vector<FamilyParams> cells = grid_cells(n_range, k_range);
  std::vector<SymmetryCell> out(cells.size());
  for_each_index(static_cast<std::int64_t>(cells.size()), exec, [&](std::int64_t i) {
    const FamilyParams& p = cells[static_cast<std::size_t>(i)];
    SymmetryCell& cell = out[static_cast<std::size_t>(i)];
    cell.params = p;
    cell.predicted = classify_by_parameters(p);
    const LaurentPoly v = jones_wnk(p);
    cell.polynomial_symmetric = is_symmetric(v);
    if (cell.predicted.symmetric()) cell.matches_phi_tilde = v == phi_tilde(*cell.predicted.m);
  });
  return out;
}

}  // namespace cyclojones
