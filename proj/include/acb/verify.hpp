#pragma once

#include <acb/core.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace acb {

/// families, critical-small, sperner, equivalences, gamma.
const std::vector<std::string>& verify_suite_names();

/// Prints one "<check>: ... ok|FAIL" line per check. Returns true iff all
/// pass; throws std::invalid_argument for an unknown suite.
bool run_verify_suite(const std::string& name, std::ostream& out);

/// Every bipartite graph with |X| = x_size and |Y| = y_size, one per class
/// under isomorphisms that keep X and Y in place.
void for_each_oriented(std::size_t x_size, std::size_t y_size, const std::function<void(const BipartiteGraph&)>& fn);

} // namespace acb
