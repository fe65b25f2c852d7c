#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galrep {

/// One row of the published L/U table.
struct ReferenceRow {
  std::uint64_t p;
  std::uint64_t L;
  bool star;  // exactness marker printed next to L
  std::uint64_t U;
  std::string ratio;  // the printed (U-L)/p^2 string
};

// All 299 rows, 11 <= p <= 1999, ascending. The transcription is
// self-checked on first use: every ratio string must equal the 6-digit
// truncation of (U-L)/p^2 with trailing zeros stripped.
const std::vector<ReferenceRow>& reference_table();

// Row lookup; nullptr when p is out of range.
const ReferenceRow* reference_row(std::uint64_t p);

// The annotated discrepancy set: rows with p = 7 mod 12, whose printed U
// exceeds the value of the dimension-sum bound evaluated directly.
bool is_annotated_discrepancy(std::uint64_t p);

}  // namespace galrep
