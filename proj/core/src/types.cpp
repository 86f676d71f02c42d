#include "fairteam/types.hpp"

namespace fairteam {

std::vector<AgentId> members(AgentSet s) {
  std::vector<AgentId> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(lowest_agent(rest));
  }
  return out;
}

std::string set_to_string(AgentSet s) {
  std::string out = "{";
  bool first = true;
  for (AgentSet rest = s; rest != 0; rest &= rest - 1) {
    if (!first) out += ",";
    out += std::to_string(lowest_agent(rest));
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace fairteam
