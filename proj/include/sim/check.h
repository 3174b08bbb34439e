#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace sim {

// Fatal protocol-invariant breach. Never compiled out: these guards stay
// active in release builds, and the CLI maps them to exit code 2.
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

inline void invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

namespace checks {

// Named counters of invariant evaluations so test suites can verify the
// guards were actually exercised, not just silent.
void bump(const char* name);
std::uint64_t count(const char* name);
const std::map<std::string, std::uint64_t>& all();
void reset();

}  // namespace checks

// Counted invariant: records that the named guard ran, then enforces it.
inline void check(const char* name, bool ok, const char* what) {
  checks::bump(name);
  invariant(ok, what);
}

}  // namespace sim
