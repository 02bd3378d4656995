#pragma once

#include <string>
#include <vector>

namespace poskit::cli {

struct OpVerb {
  std::string op;    // library operation
  std::string verb;  // the one CLI verb that exercises it
};

// Every library operation mapped to exactly one verb; the coverage test
// keeps this table total and consistent with the registered verbs.
const std::vector<OpVerb>& op_verb_table();

// All registered verb paths.
const std::vector<std::string>& all_verbs();

}  // namespace poskit::cli
