#include "pws/epset.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pws {

namespace {

std::atomic<std::size_t> g_lcm_cap{std::size_t{1} << 16};

std::size_t checked_lcm(std::size_t p, std::size_t q) {
  const std::size_t l = p / std::gcd(p, q) * q;
  if (l > lcm_cap()) {
    throw ResourceError("common period " + std::to_string(l) + " exceeds lcm cap " +
                        std::to_string(lcm_cap()));
  }
  return l;
}

// Smallest d dividing v.size() such that v is a power of its first d bits.
std::size_t primitive_period(const BitWord& v) {
  const std::size_t p = v.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = v[i] == v[i - d];
    if (ok) return d;
  }
  return p;
}

template <class Op>
EpSet combine(const EpSet& a, const EpSet& b, Op op) {
  const std::size_t pre = std::max(a.preperiod_len(), b.preperiod_len());
  const std::size_t per = checked_lcm(a.period_len(), b.period_len());
  BitWord w(pre), v(per);
  for (std::size_t i = 0; i < pre; ++i) w[i] = op(a.contains(i + 1), b.contains(i + 1));
  for (std::size_t j = 0; j < per; ++j) {
    const Nat n = pre + 1 + j;
    v[j] = op(a.contains(n), b.contains(n));
  }
  return EpSet(std::move(w), std::move(v));
}

}  // namespace

std::size_t lcm_cap() noexcept { return g_lcm_cap.load(std::memory_order_relaxed); }

void set_lcm_cap(std::size_t cap) {
  if (cap == 0) throw PreconditionError("lcm cap must be positive");
  g_lcm_cap.store(cap, std::memory_order_relaxed);
}

EpSet::EpSet() : per_{false} {}

EpSet::EpSet(BitWord preperiod, BitWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw PreconditionError("period word must be nonempty");
  canonicalize();
}

void EpSet::canonicalize() {
  per_.resize(primitive_period(per_));
  // Drop trailing preperiod bits that agree with the periodic continuation;
  // each drop rotates the period word right by one.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

EpSet EpSet::empty() { return EpSet(); }

EpSet EpSet::naturals() { return EpSet({}, {true}); }

EpSet EpSet::residue(Nat r, Nat m) {
  if (m == 0) throw PreconditionError("residue modulus must be positive");
  if (m > lcm_cap()) throw ResourceError("residue modulus exceeds lcm cap");
  BitWord v(m);
  for (Nat j = 0; j < m; ++j) v[j] = (j + 1) % m == r % m;
  return EpSet({}, std::move(v));
}

EpSet EpSet::finite(std::span<const Nat> elements) {
  Nat top = 0;
  for (Nat e : elements) top = std::max(top, e);
  BitWord w(top);
  for (Nat e : elements) {
    if (e > 0) w[e - 1] = true;
  }
  return EpSet(std::move(w), {false});
}

EpSet EpSet::finite(std::initializer_list<Nat> elements) {
  return finite(std::span<const Nat>(elements.begin(), elements.size()));
}

EpSet EpSet::interval(Nat lo, Nat hi) {
  if (lo == 0) lo = 1;
  if (lo > hi) return empty();
  BitWord w(hi);
  for (Nat n = lo; n <= hi; ++n) w[n - 1] = true;
  return EpSet(std::move(w), {false});
}

EpSet EpSet::periodic(std::string_view period_bits) {
  BitWord v;
  for (char c : period_bits) {
    if (c != '0' && c != '1') throw PreconditionError("period bits must be 0/1");
    v.push_back(c == '1');
  }
  return EpSet({}, std::move(v));
}

bool EpSet::contains(Nat n) const noexcept {
  if (n == 0) return false;
  if (n <= pre_.size()) return pre_[n - 1];
  return per_[(n - pre_.size() - 1) % per_.size()];
}

BitWord EpSet::prefix(std::size_t horizon) const {
  BitWord out(horizon);
  for (std::size_t i = 0; i < horizon; ++i) out[i] = contains(i + 1);
  return out;
}

EpSet shift_left(const EpSet& s, Nat n) {
  const std::size_t a = s.preperiod_len();
  if (n <= a) {
    BitWord w(s.preperiod().begin() + static_cast<std::ptrdiff_t>(n), s.preperiod().end());
    return EpSet(std::move(w), s.period());
  }
  const std::size_t p = s.period_len();
  const std::size_t k = static_cast<std::size_t>((n - a) % p);
  BitWord v = s.period();
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return EpSet({}, std::move(v));
}

EpSet complement(const EpSet& s) {
  BitWord w = s.preperiod();
  BitWord v = s.period();
  w.flip();
  v.flip();
  return EpSet(std::move(w), std::move(v));
}

EpSet unite(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EpSet intersect(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EpSet difference(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool is_empty(const EpSet& s) noexcept {
  // Canonical empty set has no preperiod and period "0".
  return s.preperiod_len() == 0 && s.period_len() == 1 && !s.period()[0];
}

bool is_finite(const EpSet& s) noexcept { return s.period_len() == 1 && !s.period()[0]; }

bool is_cofinite(const EpSet& s) noexcept { return s.period_len() == 1 && s.period()[0]; }

bool is_subset(const EpSet& a, const EpSet& b) { return is_empty(difference(a, b)); }

EpSet rotation_and(const EpSet& s) {
  const BitWord& v = s.period();
  const std::size_t p = v.size();
  BitWord acc(p, true);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t j = 0; j < p; ++j) acc[j] = acc[j] && v[(j + r) % p];
  }
  return EpSet({}, std::move(acc));
}

std::optional<Nat> min_element(const EpSet& s) noexcept {
  const std::size_t span = s.preperiod_len() + s.period_len();
  for (std::size_t n = 1; n <= span; ++n) {
    if (s.contains(n)) return n;
  }
  return std::nullopt;
}

std::optional<Nat> max_element(const EpSet& s) noexcept {
  if (!is_finite(s) || is_empty(s)) return std::nullopt;
  // Canonical finite sets end their preperiod on a member.
  return s.preperiod_len();
}

std::vector<Nat> elements(const EpSet& s) {
  if (!is_finite(s)) throw PreconditionError("elements() requires a finite set");
  std::vector<Nat> out;
  for (std::size_t n = 1; n <= s.preperiod_len(); ++n) {
    if (s.preperiod()[n - 1]) out.push_back(n);
  }
  return out;
}

std::pair<BitWord, BitWord> expand(const EpSet& s, std::size_t pre, std::size_t per) {
  if (pre < s.preperiod_len() || per == 0 || per % s.period_len() != 0) {
    throw PreconditionError("expand: target shape does not refine the set's shape");
  }
  BitWord w(pre), v(per);
  for (std::size_t i = 0; i < pre; ++i) w[i] = s.contains(i + 1);
  for (std::size_t j = 0; j < per; ++j) v[j] = s.contains(pre + 1 + j);
  return {std::move(w), std::move(v)};
}

std::string bits_to_string(const BitWord& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::string to_string(const EpSet& s) {
  std::string out = "ep(a=" + std::to_string(s.preperiod_len()) + ";w=";
  out += bits_to_string(s.preperiod());
  out += ";per=";
  out += bits_to_string(s.period());
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const EpSet& s) { return os << to_string(s); }

EpSet parse_ep(std::string_view text) {
  const std::string_view head = "ep(a=";
  std::size_t pos = 0;
  auto expect = [&](std::string_view lit) {
    if (text.substr(pos, lit.size()) != lit) {
      throw ParseError("expected '" + std::string(lit) + "'", pos);
    }
    pos += lit.size();
  };
  auto bits = [&]() {
    BitWord out;
    while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
      out.push_back(text[pos] == '1');
      ++pos;
    }
    return out;
  };
  expect(head);
  std::size_t a = 0;
  const auto* first = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), a);
  if (ec != std::errc{} || ptr == first) throw ParseError("expected preperiod length", pos);
  pos += static_cast<std::size_t>(ptr - first);
  expect(";w=");
  const std::size_t w_pos = pos;
  BitWord w = bits();
  if (w.size() != a) {
    throw ParseError("preperiod word has length " + std::to_string(w.size()) + ", expected " +
                         std::to_string(a),
                     w_pos);
  }
  expect(";per=");
  const std::size_t v_pos = pos;
  BitWord v = bits();
  if (v.empty()) throw ParseError("period word must be nonempty", v_pos);
  expect(")");
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return EpSet(std::move(w), std::move(v));
}

}  // namespace pws
