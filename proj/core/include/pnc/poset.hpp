#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pnc {

/// A binary relation on {0, ..., size-1} stored as a dense matrix. Used for
/// both reduction families and S_m; the partial-order axioms are checked by
/// check_partial_order() rather than assumed.
class Poset {
 public:
  Poset() = default;
  explicit Poset(std::size_t size) : size_(size), leq_(size * size, false) {}

  std::size_t size() const noexcept { return size_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  void set_leq(std::size_t a, std::size_t b, bool value = true) { leq_[a * size_ + b] = value; }

  /// Cover pairs (greater, lesser): lesser < greater with nothing strictly
  /// between them.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<bool> leq_;
};

struct OrderAxiomReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::string first_violation;

  bool ok() const noexcept { return reflexive && antisymmetric && transitive; }
};

/// Exhaustive reflexivity / antisymmetry / transitivity check (cubic).
OrderAxiomReport check_partial_order(const Poset& order);

}  // namespace pnc
