#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pnc/binseq.hpp"
#include "pnc/circuit.hpp"
#include "pnc/family.hpp"
#include "pnc/nesting.hpp"

namespace pnc {

/// The map from a PNC's reduction family onto S_m, as explicit pairs.
struct IsoWitness {
  std::size_t depth = 0;
  std::vector<std::pair<Circuit, SeqClass>> pairs;
};

/// Sends the member left after z 0-reductions and o 1-reductions to the
/// class (z + o, o). The root goes to the class of the empty sequence.
IsoWitness build_isomorphism(const NestedCircuit& p);

struct IsoReport {
  bool total = true;        // every member has exactly one image
  bool injective = true;
  bool surjective = true;
  bool order_preserving = true;  // a <= b in the family iff f(a) <= f(b)
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool passed() const noexcept { return total && injective && surjective && order_preserving; }
};

/// Exhaustively checks the witness against a family and S_m built for the
/// same depth. Throws DimensionMismatch when the sizes or bounds disagree.
IsoReport verify_isomorphism(const IsoWitness& witness, const ReductionFamily& family,
                             const SeqClassPoset& sm);

/// Pair table ("<member> -> p:k") followed by a PASS/FAIL summary line.
std::string render_report(const IsoWitness& witness, const IsoReport& report);

/// Both Hasse diagrams in one DOT graph, one cluster each, with matched
/// members and classes sharing a fill colour.
std::string isomorphism_to_dot(const IsoWitness& witness, const ReductionFamily& family,
                               const SeqClassPoset& sm);

}  // namespace pnc
