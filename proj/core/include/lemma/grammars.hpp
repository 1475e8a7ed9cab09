#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lemma/syntax.hpp"

namespace lemma {

// Program files compiled into the library (also installed under
// share/lemma/programs).
struct BundledAsset {
  std::string_view name;
  std::string_view description;
  std::string_view source;
};

class UnknownAssetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<BundledAsset>& bundled_assets();
const BundledAsset* find_bundled(std::string_view name);

// Parses the named asset; throws UnknownAssetError for other names.
LoadedProgram load_bundled(std::string_view name);

}  // namespace lemma
