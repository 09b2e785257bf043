#pragma once

#include <string>
#include <vector>

namespace hermex {

enum class Relation { eq, le, ge };

/// One evaluated rank/inertia (in)equality, e.g. "r[A, B] = r(A)" with both
/// sides computed.
struct Condition {
  std::string text;
  long lhs = 0;
  long rhs = 0;
  Relation rel = Relation::eq;

  bool holds() const {
    switch (rel) {
      case Relation::le: return lhs <= rhs;
      case Relation::ge: return lhs >= rhs;
      default: return lhs == rhs;
    }
  }
  std::string str() const {
    const char* op = rel == Relation::eq ? " = " : rel == Relation::le ? " <= " : " >= ";
    return text + "  [" + std::to_string(lhs) + op + std::to_string(rhs) + "]";
  }
};

inline Condition cond(std::string text, long lhs, long rhs, Relation rel = Relation::eq) {
  return Condition{std::move(text), lhs, rhs, rel};
}

inline bool all_hold(const std::vector<Condition>& cs) {
  for (const auto& c : cs)
    if (!c.holds()) return false;
  return true;
}

}  // namespace hermex
