#include "cyclojones/diagram.hpp"

#include <string>

namespace cyclojones {

ArrowRecord::ArrowRecord(int sign_, std::int64_t winding_) : sign(sign_), winding(winding_) {
  if (sign != 1 && sign != -1)
    throw DomainError("arrow sign must be +1 or -1, got " + std::to_string(sign));
}

std::int64_t writhe_from_summary(const ArrowDiagramSummary& s) {
  std::int64_t total = s.bare_writhe;
  std::int64_t signs = 0;
  for (const auto& r : s.arrows) {
    total += 2 * r.sign * r.winding;
    signs += r.sign;
  }
  return total + signs * (signs + 1);
}

ArrowDiagramSummary wnk_summary(const FamilyParams& p) {
  ArrowDiagramSummary s;
  s.bare_writhe = p.k;
  for (std::int64_t i = 0; i < p.k; ++i) s.arrows.emplace_back(1, i);
  const int kink_sign = p.n > 0 ? -1 : 1;
  const std::int64_t count = p.n < 0 ? -p.n : p.n;
  for (std::int64_t i = 0; i < count; ++i) s.arrows.emplace_back(kink_sign, -1);
  return s;
}

std::int64_t pair_contribution_identity(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw DomainError("arrow counts must be non-negative");
  const std::int64_t lhs = 2 * a + a * (a - 1) + b * (b - 1) - 2 * a * b;
  const std::int64_t rhs = (a - b) * (a - b + 1);
  if (lhs != rhs)
    throw InconsistencyError("pair contribution identity fails for a = " + std::to_string(a) +
                             ", b = " + std::to_string(b));
  return lhs;
}

}  // namespace cyclojones
