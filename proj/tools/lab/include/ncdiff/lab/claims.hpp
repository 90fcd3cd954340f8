#pragma once

#include <string>
#include <vector>

namespace ncdiff::lab {

/// A mathematical statement some scenario check encodes.
struct Claim {
  std::string id;
  std::string statement;
  /// "result" for statements of the theory, "acceptance" for release criteria.
  std::string kind;
};

const std::vector<Claim>& claims();
/// nullptr when unknown.
const Claim* find_claim(const std::string& id);

}  // namespace ncdiff::lab
