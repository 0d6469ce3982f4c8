#pragma once

#include <cstddef>
#include <vector>

#include "pnc/circuit.hpp"

namespace pnc {

/// Positions of the internal vertices of a perfectly nested circuit:
///
///   0 < opens[0] < ... < opens[m-1] < closes[m-1] < ... < closes[0] < n
///
/// closes[i] is the second occurrence of the label at opens[i], so `closes`
/// is strictly decreasing.
struct InternalSequence {
  std::vector<std::size_t> opens;
  std::vector<std::size_t> closes;

  std::size_t depth() const noexcept { return opens.size(); }

  /// opens followed by closes innermost-first, e.g. 2,6,10,12.
  std::vector<std::size_t> flattened() const;

  friend bool operator==(const InternalSequence&, const InternalSequence&) = default;
};

/// A circuit known to be perfectly nested, with its internal sequence.
/// Only recognize() and compose() produce these.
class NestedCircuit {
 public:
  const Circuit& circuit() const noexcept { return circuit_; }
  const InternalSequence& internal() const noexcept { return internal_; }

  /// Number of internal vertices (m). Zero for a simple cycle.
  std::size_t depth() const noexcept { return internal_.depth(); }

  /// Internal vertices from outermost to innermost.
  std::vector<Label> internal_vertices() const;

 private:
  NestedCircuit(Circuit circuit, InternalSequence internal)
      : circuit_(std::move(circuit)), internal_(std::move(internal)) {}

  friend NestedCircuit recognize(const Circuit& c);

  Circuit circuit_;
  InternalSequence internal_;
};

/// Throws NotPncError (VertexTriple, StartVertexRepeats, NotTotallyNested).
NestedCircuit recognize(const Circuit& c);

bool is_perfectly_nested(const Circuit& c);

/// u is strictly more internal than w. Throws NotInternalVertex.
bool more_internal(const NestedCircuit& p, const Label& u, const Label& w);

/// Throws TrivialPnc when depth() == 0.
const Label& outermost(const NestedCircuit& p);
const Label& innermost(const NestedCircuit& p);

/// Simple cycles glued in sequence: joints[j] is the only label shared by
/// links[j] and links[j+1]. The walk starts at links[0].start().
struct ChainOfCycles {
  std::vector<Circuit> links;
  std::vector<Label> joints;

  /// The sub-chain links[first..last] with the joints between them.
  ChainOfCycles slice(std::size_t first, std::size_t last) const;

  /// Edge count of every link.
  std::vector<std::size_t> link_lengths() const;
};

/// Cuts a PNC into its links. Link j > 0 starts at joints[j-1], so compose()
/// reproduces the input exactly.
ChainOfCycles decompose(const NestedCircuit& p);

/// Walks links[0] from its start, descends through every joint, goes around
/// the last link and climbs back out. Throws InvalidChain.
NestedCircuit compose(const ChainOfCycles& chain);

}  // namespace pnc
