#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "baire/seq.hpp"

namespace baire {

/// Base class for domain errors. Each carries a stable machine-readable
/// code; the CLI maps these to exit status 1 with a structured body.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class LeafHasNoChildren : public Error {
 public:
  LeafHasNoChildren() : Error("leaf-has-no-children", "leaf nodes have no children") {}
};

class DepthBudgetExceeded : public Error {
 public:
  DepthBudgetExceeded(Nat depth, Nat cap)
      : Error("depth-budget-exceeded",
              "tree depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap)),
        depth_(depth),
        cap_(cap) {}
  Nat depth() const { return depth_; }
  Nat cap() const { return cap_; }

 private:
  Nat depth_;
  Nat cap_;
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(Nat fuel, std::optional<FiniteSeq> path = std::nullopt)
      : Error("fuel-exhausted", "stabilization not certified within fuel " + std::to_string(fuel)),
        fuel_(fuel),
        path_(std::move(path)) {}
  Nat fuel() const { return fuel_; }
  const std::optional<FiniteSeq>& path() const { return path_; }

 private:
  Nat fuel_;
  std::optional<FiniteSeq> path_;
};

class DominationViolated : public Error {
 public:
  explicit DominationViolated(FiniteSeq at)
      : Error("domination-violated", "dominating function is unsecured at a secured sequence"),
        at_(std::move(at)) {}
  const FiniteSeq& at() const { return at_; }

 private:
  FiniteSeq at_;
};

class NonUniformDefault : public Error {
 public:
  NonUniformDefault(FiniteSeq at, Nat index)
      : Error("non-uniform-default", "function differs across unlisted branches"),
        at_(std::move(at)),
        index_(index) {}
  const FiniteSeq& at() const { return at_; }
  Nat index() const { return index_; }

 private:
  FiniteSeq at_;
  Nat index_;
};

class NotBarWithinDepth : public Error {
 public:
  explicit NotBarWithinDepth(FiniteSeq witness)
      : Error("not-bar-within-depth", "a maximal-depth path has no secured prefix"),
        witness_(std::move(witness)) {}
  const FiniteSeq& witness() const { return witness_; }

 private:
  FiniteSeq witness_;
};

class PremiseViolated : public Error {
 public:
  PremiseViolated() : Error("premise-violated", "both truncations contain a nonzero entry") {}
};

class Overflow : public Error {
 public:
  Overflow() : Error("overflow", "natural-number overflow") {}
};

/// Malformed or out-of-schema input; the CLI maps this to exit status 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

inline Nat checked_add(Nat x, Nat y) {
  if (x > std::numeric_limits<Nat>::max() - y) throw Overflow();
  return x + y;
}

inline Nat checked_mul(Nat x, Nat y) {
  if (y != 0 && x > std::numeric_limits<Nat>::max() / y) throw Overflow();
  return x * y;
}

}  // namespace baire
