#pragma once

// Arrow diagrams reduced to the data the writhe formula consumes: the writhe
// of the underlying diagram with arrows ignored, and a sign and winding
// number per arrow.

#include <cstdint>
#include <vector>

#include "cyclojones/wnk.hpp"

namespace cyclojones {

struct ArrowRecord {
  int sign = 1;               // +1 along the orientation, -1 against
  std::int64_t winding = 0;   // winding number of a point just right of the arrow

  ArrowRecord() = default;
  // Throws DomainError unless sign is +1 or -1.
  ArrowRecord(int sign_, std::int64_t winding_);
  friend bool operator==(const ArrowRecord&, const ArrowRecord&) = default;
};

struct ArrowDiagramSummary {
  std::int64_t bare_writhe = 0;
  std::vector<ArrowRecord> arrows;
  friend bool operator==(const ArrowDiagramSummary&, const ArrowDiagramSummary&) = default;
};

// w(D) = bare writhe + sum 2 sign(r) ind(r) + s(s+1), s = sum of signs.
std::int64_t writhe_from_summary(const ArrowDiagramSummary& s);

// The standard diagram of W(n,k): bare writhe k, arrows (+1, i) for
// i = 0..k-1 on the strands, and |n| arrows of winding -1 on the kink,
// negative for n > 0 and positive for n < 0.
ArrowDiagramSummary wnk_summary(const FamilyParams& p);

// 2a + a(a-1) + b(b-1) - 2ab == (a-b)(a-b+1); returns the common value.
std::int64_t pair_contribution_identity(std::int64_t a, std::int64_t b);

}  // namespace cyclojones
