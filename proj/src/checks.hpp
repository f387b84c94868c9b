#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ncsf {

struct Counterexample {
  int n = 0;          // degree where it was found
  std::string index;  // e.g. "Qp[3,3,1]" or "H[2]*S[1,3]"
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  std::string range;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Counterexample> counterexamples;  // sorted by (n, index)
  double seconds = 0;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& check_names();
// Throws DomainError for an unknown name or max_n < 1.
CheckReport run_check(std::string_view name, int max_n);

CheckReport check_hl_positivity(int max_n);
CheckReport check_left_pieri(int max_n);
CheckReport check_dual_pieri(int max_n);
CheckReport check_hl_identities(int max_n);
CheckReport check_projection(int max_n);
CheckReport check_right_pieri(int max_n);
CheckReport check_hl_pieri(int max_n);
CheckReport check_hook_length(int max_n);

}  // namespace ncsf
