#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Error codes. Validation codes map to CLI exit 2, budget codes to exit 3.
enum class errc {
  // input / validation
  malformed_line,
  loop_edge,
  duplicate_edge,
  disconnected_graph,
  empty_graph,
  bad_argument,
  bad_edge_index,
  negative_exponent,
  support_overlap,
  unbalanced,
  zero_binomial,
  walk_open,
  walk_odd,
  walk_not_incident,
  walk_reducible,
  not_mixed,
  no_pure_block,
  not_a_circuit,
  length_mismatch,
  // budgets / caps
  cycle_budget,
  candidate_budget,
  block_budget,
  pair_budget,
  lp_budget,
  cycle_cap,
  time_budget,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

  bool budget() const {
    switch (code_) {
      case errc::cycle_budget:
      case errc::candidate_budget:
      case errc::block_budget:
      case errc::pair_budget:
      case errc::lp_budget:
      case errc::cycle_cap:
      case errc::time_budget:
        return true;
      default:
        return false;
    }
  }

 private:
  errc code_;
};

}  // namespace toric
