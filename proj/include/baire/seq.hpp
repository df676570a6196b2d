#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace baire {

/// Natural numbers are machine-width nonnegative integers. Arithmetic that
/// could wrap must go through the checked helpers in errors.hpp.
using Nat = std::uint64_t;

/// sg(n) = min(1, n).
constexpr Nat sg(Nat n) { return n == 0 ? 0 : 1; }

/// Truncated subtraction: max(x - y, 0).
constexpr Nat monus(Nat x, Nat y) { return x > y ? x - y : 0; }

/// A finite sequence of naturals. Immutable value type; doubles as a path
/// into decision trees and as a map key (lexicographic order).
class FiniteSeq {
 public:
  FiniteSeq() = default;
  FiniteSeq(std::initializer_list<Nat> xs) : items_(xs) {}
  explicit FiniteSeq(std::vector<Nat> xs) : items_(std::move(xs)) {}

  Nat size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Nat at(Nat i) const { return items_.at(i); }
  const std::vector<Nat>& items() const { return items_; }

  /// Concatenation; associative with the empty sequence as identity.
  FiniteSeq operator+(const FiniteSeq& rhs) const {
    std::vector<Nat> xs = items_;
    xs.insert(xs.end(), rhs.items_.begin(), rhs.items_.end());
    return FiniteSeq(std::move(xs));
  }

  FiniteSeq append(Nat n) const {
    std::vector<Nat> xs = items_;
    xs.push_back(n);
    return FiniteSeq(std::move(xs));
  }

  /// The first `len` items; `len` must not exceed size().
  FiniteSeq prefix(Nat len) const {
    if (len > size()) throw std::out_of_range("FiniteSeq::prefix: length exceeds size");
    return FiniteSeq(std::vector<Nat>(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  bool is_prefix_of(const FiniteSeq& other) const {
    if (size() > other.size()) return false;
    return std::equal(items_.begin(), items_.end(), other.items_.begin());
  }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const FiniteSeq&, const FiniteSeq&) = default;
  friend auto operator<=>(const FiniteSeq&, const FiniteSeq&) = default;

 private:
  std::vector<Nat> items_;
};

/// An infinite sequence of naturals. Two backings: an eventually periodic
/// form (prefix + nonempty period, the serializable wire form) and an
/// in-memory oracle. Values are immutable after construction and oracles
/// must be pure: the same index always yields the same value.
class Stream {
 public:
  using OracleFn = std::function<Nat(Nat)>;

  static Stream eventually_periodic(FiniteSeq prefix, FiniteSeq period) {
    if (period.empty()) throw std::invalid_argument("Stream: period must be nonempty");
    auto repr = std::make_shared<Repr>();
    repr->prefix = std::move(prefix);
    repr->period = std::move(period);
    return Stream(std::move(repr));
  }

  static Stream oracle(OracleFn fn) {
    auto repr = std::make_shared<Repr>();
    repr->fn = std::move(fn);
    return Stream(std::move(repr));
  }

  /// 0^ω.
  static Stream zeros() { return eventually_periodic({}, {0}); }

  /// Constant stream n^ω.
  static Stream constant(Nat n) { return eventually_periodic({}, {n}); }

  Nat at(Nat i) const {
    const Repr& r = *repr_;
    if (r.fn) return r.fn(i);
    if (i < r.prefix.size()) return r.prefix.at(i);
    return r.period.at((i - r.prefix.size()) % r.period.size());
  }

  /// True when this stream carries the serializable prefix/period form.
  bool is_eventually_periodic() const { return !repr_->fn; }
  const FiniteSeq& ep_prefix() const { return repr_->prefix; }
  const FiniteSeq& ep_period() const { return repr_->period; }

 private:
  struct Repr {
    FiniteSeq prefix;
    FiniteSeq period;
    OracleFn fn;  // engaged => oracle backing
  };
  explicit Stream(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;
};

/// Initial segment of length n.
inline FiniteSeq take(const Stream& s, Nat n) {
  std::vector<Nat> xs;
  xs.reserve(n);
  for (Nat i = 0; i < n; ++i) xs.push_back(s.at(i));
  return FiniteSeq(std::move(xs));
}

/// The stream a * s: answers a's items first, then s shifted by |a|.
/// Preserves eventually periodic representability.
inline Stream extend(const FiniteSeq& a, const Stream& s) {
  if (a.empty()) return s;
  if (s.is_eventually_periodic()) {
    return Stream::eventually_periodic(a + s.ep_prefix(), s.ep_period());
  }
  return Stream::oracle([a, s](Nat i) { return i < a.size() ? a.at(i) : s.at(i - a.size()); });
}

}  // namespace baire
