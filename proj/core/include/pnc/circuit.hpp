#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pnc {

/// Opaque vertex token: non-empty, no whitespace. Compared by exact equality.
using Label = std::string;

/// A pair of interior positions 0 < first < last < n carrying the same label.
struct Intersection {
  std::size_t first = 0;
  std::size_t last = 0;

  friend auto operator<=>(const Intersection&, const Intersection&) = default;
};

/// The sub-circuit [first, last]: positions first..last of a circuit with
/// v_first == v_last. Always normalized so that first < last.
struct SubCircuitRef {
  std::size_t first = 0;
  std::size_t last = 0;

  friend auto operator<=>(const SubCircuitRef&, const SubCircuitRef&) = default;
};

/// A closed walk v_0 v_1 ... v_n (n >= 3) over a simple graph with no repeated
/// edge. The vertex sequence is stored verbatim, including the closing v_n.
///
/// Identity is exact sequence equality: rotations and reflections of the same
/// walk are different circuits.
class Circuit {
 public:
  /// Number of edges, i.e. n. The walk has n + 1 vertex positions.
  std::size_t size() const noexcept { return vertices_.size() - 1; }

  std::span<const Label> vertices() const noexcept { return vertices_; }
  const Label& operator[](std::size_t pos) const { return vertices_[pos]; }
  const Label& start() const noexcept { return vertices_.front(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend std::strong_ordering operator<=>(const Circuit& a, const Circuit& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  explicit Circuit(std::vector<Label> vertices) : vertices_(std::move(vertices)) {}

  friend Circuit validate_circuit(std::vector<Label> vertices);
  friend Circuit internal_reduction(const Circuit& c, SubCircuitRef sub);
  friend Circuit external_reduction(const Circuit& c, SubCircuitRef sub);

  std::vector<Label> vertices_;
};

/// Checks every circuit invariant and returns the circuit unchanged.
/// Throws Error with InvalidLabel, TooShort, NotClosed, SelfLoop or
/// RepeatedEdge.
Circuit validate_circuit(std::vector<Label> vertices);

bool circuit_equal(const Circuit& a, const Circuit& b) noexcept;

/// All pairs (i, j) with 0 < i < j < n and v_i == v_j, sorted.
std::vector<Intersection> intersections(const Circuit& c);

/// The vertex associated with an intersection. Throws NotAnIntersection.
const Label& vertex_of(const Circuit& c, Intersection x);

/// True when no vertex repeats among positions 0..n-1.
bool is_simple_cycle(const Circuit& c);

/// Every proper sub-circuit [i, j] (i < j, v_i == v_j, (i, j) != (0, n)),
/// sorted.
std::vector<SubCircuitRef> proper_sub_circuits(const Circuit& c);

bool is_proper_sub_circuit(const Circuit& c, SubCircuitRef sub) noexcept;

/// Removes the interior of the sub-circuit: v_0..v_i v_{j+1}..v_n, or
/// v_j..v_n when i == 0. Throws NotASubCircuit.
Circuit internal_reduction(const Circuit& c, SubCircuitRef sub);

/// Keeps only the sub-circuit v_i..v_j. Throws NotASubCircuit.
Circuit external_reduction(const Circuit& c, SubCircuitRef sub);

/// Every circuit reachable in one reduction step (internal or external, at
/// every proper sub-circuit), deduplicated and sorted.
std::vector<Circuit> one_step_reductions(const Circuit& c);

}  // namespace pnc
