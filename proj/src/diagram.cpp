#include "hoctop/diagram.hpp"

#include <algorithm>

namespace hoctop {

Diagram::Diagram(std::vector<PersistencePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

Diagram Diagram::off_diagonal() const {
  std::vector<PersistencePair> kept;
  kept.reserve(pairs_.size());
  for (const auto& p : pairs_) {
    if (!p.is_diagonal()) kept.push_back(p);
  }
  return Diagram(std::move(kept));
}

}  // namespace hoctop
