#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairteam {

using AgentId = int;

// Agent sets are bitmasks: agent i <-> bit i. Hard cap of 63 agents.
using AgentSet = std::uint64_t;

inline constexpr int kMaxAgents = 63;
inline constexpr int kDefaultEnumCap = 25;
inline constexpr double kDefaultTol = 1e-9;

inline constexpr AgentSet agent_bit(AgentId i) { return AgentSet{1} << i; }
inline constexpr bool contains(AgentSet s, AgentId i) { return (s >> i) & AgentSet{1}; }
inline constexpr AgentSet with_agent(AgentSet s, AgentId i) { return s | agent_bit(i); }
inline constexpr AgentSet without_agent(AgentSet s, AgentId i) { return s & ~agent_bit(i); }
inline constexpr int set_size(AgentSet s) { return std::popcount(s); }
inline constexpr AgentSet full_team(int n) { return n == 0 ? 0 : (AgentSet{1} << n) - 1; }
inline constexpr AgentId lowest_agent(AgentSet s) { return std::countr_zero(s); }

std::vector<AgentId> members(AgentSet s);
std::string set_to_string(AgentSet s);

// Threshold comparisons share one tolerance so that ties resolve in favor of
// effort/inclusion everywhere (the favor-the-principal tie-break).
struct Tolerance {
  double eps = kDefaultTol;
  bool weakly_ge(double a, double b) const { return a >= b - eps; }
  bool weakly_le(double a, double b) const { return a <= b + eps; }
  bool strictly_gt(double a, double b) const { return a > b + eps; }
  bool strictly_lt(double a, double b) const { return a < b - eps; }
  bool close(double a, double b) const { return a >= b - eps && a <= b + eps; }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed files or invalid instance data.
struct SchemaError : Error {
  using Error::Error;
};

// An operation was invoked outside its contract (wrong reward model,
// infeasible contract, parameter out of range, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A set-enumeration routine was asked to scan more agents than the cap allows.
struct CapExceededError : Error {
  using Error::Error;
};

}  // namespace fairteam
