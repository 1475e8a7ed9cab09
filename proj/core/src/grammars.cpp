#include "lemma/grammars.hpp"

#include <algorithm>

#include "bundled_sources.hpp"

namespace lemma {

const std::vector<BundledAsset>& bundled_assets() {
  static const std::vector<BundledAsset> assets = {
      {"dutch_cg", "Dutch verb-cluster categorial grammar with coroutined lexical rules",
       generated::kDutchCg},
      {"transitive_closure", "left-recursive path/edge program (function-free)",
       generated::kTransitiveClosure},
      {"memo_loop", "memoized self-loop p ::- [p]", generated::kMemoLoop},
      {"right_recursive_dcg", "right-recursive difference-list grammar, SLD-terminating",
       generated::kRightRecursiveDcg},
  };
  return assets;
}

const BundledAsset* find_bundled(std::string_view name) {
  const auto& assets = bundled_assets();
  auto it = std::find_if(assets.begin(), assets.end(),
                         [&](const BundledAsset& a) { return a.name == name; });
  return it == assets.end() ? nullptr : &*it;
}

LoadedProgram load_bundled(std::string_view name) {
  const BundledAsset* asset = find_bundled(name);
  if (asset == nullptr) throw UnknownAssetError("unknown bundled program: " + std::string(name));
  return parse_program(asset->source);
}

}  // namespace lemma
