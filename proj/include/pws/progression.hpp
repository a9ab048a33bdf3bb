#pragma once

#include <vector>

#include "pws/error.hpp"

namespace pws {

/// start + i*gap for i = 0..length (length + 1 terms).
struct Progression {
  Nat start = 1;
  Nat gap = 1;
  Nat length = 0;

  Nat term(Nat i) const noexcept { return start + i * gap; }
  Nat last() const noexcept { return term(length); }

  std::vector<Nat> terms() const {
    std::vector<Nat> out;
    out.reserve(length + 1);
    for (Nat i = 0; i <= length; ++i) out.push_back(term(i));
    return out;
  }

  friend bool operator==(const Progression&, const Progression&) = default;
};

}  // namespace pws
