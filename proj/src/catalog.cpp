#include "baire/catalog.hpp"

#include <algorithm>
#include <charconv>

namespace baire::catalog {

PointwiseFn head() {
  return PointwiseFn{"head", [](const Stream& s) { return s.at(0); }, [](const Stream&) { return Nat{1}; }};
}

PointwiseFn sum2() {
  return PointwiseFn{"sum2", [](const Stream& s) { return checked_add(s.at(0), s.at(1)); },
                     [](const Stream&) { return Nat{2}; }};
}

PointwiseFn constant(Nat k) {
  return PointwiseFn{"const-" + std::to_string(k), [k](const Stream&) { return k; },
                     [](const Stream&) { return Nat{0}; }};
}

PointwiseFn index(Nat i) {
  return PointwiseFn{"index-" + std::to_string(i), [i](const Stream& s) { return s.at(i); },
                     [i](const Stream&) { return i + 1; }};
}

namespace {

std::optional<Nat> parse_nat_suffix(const std::string& rule, const std::string& prefix) {
  if (rule.size() <= prefix.size() || rule.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  Nat value = 0;
  const char* first = rule.data() + prefix.size();
  const char* last = rule.data() + rule.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::optional<DetachablePredicate> predicate(const std::string& rule) {
  if (rule == "true") return DetachablePredicate{rule, [](const FiniteSeq&) { return true; }};
  if (rule == "false") return DetachablePredicate{rule, [](const FiniteSeq&) { return false; }};
  if (rule == "contains1-or-len4") {
    return DetachablePredicate{rule, [](const FiniteSeq& a) {
                                 return a.size() >= 4 || std::find(a.begin(), a.end(), Nat{1}) != a.end();
                               }};
  }
  if (auto n = parse_nat_suffix(rule, "len-ge-")) {
    Nat len = *n;
    return DetachablePredicate{rule, [len](const FiniteSeq& a) { return a.size() >= len; }};
  }
  if (auto v = parse_nat_suffix(rule, "starts-with-")) {
    Nat want = *v;
    return DetachablePredicate{rule, [want](const FiniteSeq& a) { return !a.empty() && a.at(0) == want; }};
  }
  if (auto v = parse_nat_suffix(rule, "contains-")) {
    Nat want = *v;
    return DetachablePredicate{rule, [want](const FiniteSeq& a) {
                                 return std::find(a.begin(), a.end(), want) != a.end();
                               }};
  }
  return std::nullopt;
}

}  // namespace baire::catalog
