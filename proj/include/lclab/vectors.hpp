#pragma once

#include <string>
#include <vector>

namespace lclab {

/// One derived example value: the independently recomputed oracle value
/// next to the library result.
struct VectorEntry {
  std::string name;
  std::string oracle;
  std::string library;
  bool match = false;
};

struct VectorDoc {
  std::string module;
  std::vector<VectorEntry> entries;
  bool all_match = true;
};

/// Recomputes the pinned example values of the named module with
/// independent oracles and compares them to the library results.
VectorDoc emit_test_vectors(const std::string& module);

std::vector<std::string> vector_modules();

}  // namespace lclab
