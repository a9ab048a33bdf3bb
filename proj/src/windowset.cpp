#include "pws/windowset.hpp"

#include <algorithm>
#include <atomic>

namespace pws {

namespace {
std::atomic<std::size_t> g_horizon_cap{std::size_t{1} << 24};
}

std::size_t horizon_cap() noexcept { return g_horizon_cap.load(std::memory_order_relaxed); }

void set_horizon_cap(std::size_t cap) {
  if (cap == 0) throw PreconditionError("horizon cap must be positive");
  g_horizon_cap.store(cap, std::memory_order_relaxed);
}

WindowSet::WindowSet(BitWord bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw PreconditionError("window horizon must be positive");
}

WindowSet WindowSet::from_string(std::string_view bits) {
  BitWord out;
  out.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ParseError("expected 0 or 1", i);
    out.push_back(bits[i] == '1');
  }
  return WindowSet(std::move(out));
}

bool WindowSet::contains(Nat n) const {
  if (n == 0 || n > bits_.size()) {
    throw HorizonError("position " + std::to_string(n) + " outside window 1.." +
                       std::to_string(bits_.size()));
  }
  return bits_[n - 1];
}

std::string to_string(const WindowSet& w) { return bits_to_string(w.bits()); }

WindowSet materialize(const EpSet& s, std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  if (horizon > horizon_cap()) {
    throw ResourceError("horizon " + std::to_string(horizon) + " exceeds cap " +
                        std::to_string(horizon_cap()));
  }
  return WindowSet(s.prefix(horizon));
}

WindowSet shift_left(const WindowSet& w, std::size_t n) {
  if (n >= w.horizon()) throw HorizonError("shift leaves an empty window");
  return WindowSet(BitWord(w.bits().begin() + static_cast<std::ptrdiff_t>(n), w.bits().end()));
}

WindowSet unite(const WindowSet& a, const WindowSet& b) {
  const std::size_t h = std::min(a.horizon(), b.horizon());
  BitWord out(h);
  for (std::size_t i = 0; i < h; ++i) out[i] = a.bits()[i] || b.bits()[i];
  return WindowSet(std::move(out));
}

bool oracle_thick(const WindowSet& w, std::size_t length) {
  if (length == 0 || length > w.horizon()) {
    throw PreconditionError("interval length must lie in 1..horizon");
  }
  std::size_t run = 0;
  for (bool b : w.bits()) {
    run = b ? run + 1 : 0;
    if (run >= length) return true;
  }
  return false;
}

std::optional<Nat> oracle_gap_bound(const WindowSet& w) {
  // Every length-g interval meets W iff no run of g consecutive non-members
  // exists, so the answer is (longest non-member run) + 1.
  std::size_t run = 0, longest = 0;
  bool any = false;
  for (bool b : w.bits()) {
    if (b) {
      any = true;
      run = 0;
    } else {
      longest = std::max(longest, ++run);
    }
  }
  if (!any) return std::nullopt;
  return longest + 1;
}

std::optional<Progression> oracle_find_ap(const WindowSet& w, Nat k) {
  if (k == 0) throw PreconditionError("progression length must be positive");
  const Nat h = w.horizon();
  for (Nat x = 1; x <= h; ++x) {
    if (!w.bits()[x - 1]) continue;
    for (Nat y = 1; x + k * y <= h; ++y) {
      bool ok = true;
      for (Nat i = 1; i <= k && ok; ++i) ok = w.bits()[x + i * y - 1];
      if (ok) return Progression{x, y, k};
    }
  }
  return std::nullopt;
}

}  // namespace pws
