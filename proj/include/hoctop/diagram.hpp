#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

namespace hoctop {

/// A hole of the growing offset that exists for scales in [birth, death).
struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;

  double persistence() const noexcept { return death - birth; }
  bool is_diagonal() const noexcept { return death <= birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PersistencePair& p) {
  return os << '(' << p.birth << ", " << p.death << ')';
}

/// Multiset of persistence pairs, kept sorted by (birth, death).
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<PersistencePair> pairs);

  std::span<const PersistencePair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const PersistencePair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Copy without pairs that have zero persistence.
  Diagram off_diagonal() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<PersistencePair> pairs_;
};

}  // namespace hoctop
