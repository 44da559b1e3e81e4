#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framered/frame.hpp"
#include "framered/redundancy.hpp"

namespace framered {

struct PropertyCheck {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

// Result of the single-frame invariant battery: the redundancy report plus
// one entry per checked property. Checks that do not apply to the given
// frame stay applicable = false and count as passing.
struct PropertyReport {
  RedundancyReport report;
  bool tight = false;
  std::vector<PropertyCheck> checks;

  bool all_pass() const;
};

template <Scalar T>
PropertyReport check_frame(const Frame<T>& f, std::uint64_t seed);

}  // namespace framered
