#include "hermex/fault.hpp"

namespace hermex::fault {

namespace {
thread_local std::optional<Site> current;
}

std::string Site::str() const {
  std::string s = matrix + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
  s += mode == Mode::negate ? " negated" : " zeroed";
  if (mirror && row != col) s += " (mirrored)";
  return s;
}

Scope::Scope(Site s) : prev_(current) { current = std::move(s); }
Scope::~Scope() { current = prev_; }

const Site* active() { return current ? &*current : nullptr; }

}  // namespace hermex::fault
