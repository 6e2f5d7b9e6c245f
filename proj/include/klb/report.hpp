#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace klb {

// Outcome of one named exhaustive verification. Counterexamples keep only
// the first few witnesses; violations counts all of them.
struct CheckReport {
  std::string id;
  int rank = 0;
  bool holds = true;
  std::size_t violations = 0;
  std::vector<std::string> counterexamples;
  std::string note;

  static CheckReport make(std::string id, int rank) {
    CheckReport r;
    r.id = std::move(id);
    r.rank = rank;
    return r;
  }

  void fail(const std::string& witness) {
    holds = false;
    ++violations;
    if (counterexamples.size() < 8) counterexamples.push_back(witness);
  }
  void require(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
};

}  // namespace klb
