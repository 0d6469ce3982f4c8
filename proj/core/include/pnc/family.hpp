#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnc/circuit.hpp"
#include "pnc/nesting.hpp"
#include "pnc/poset.hpp"

namespace pnc {

/// Links first..last of a chain, as a member of a PNC's reduction family.
struct ChainInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  friend auto operator<=>(const ChainInterval&, const ChainInterval&) = default;
};

/// X_c: every circuit reachable from a root by zero or more reductions,
/// ordered by  a <= b  iff  b reduces to a. Member 0 is always the root.
class ReductionFamily {
 public:
  std::size_t size() const noexcept { return members_.size(); }
  const Circuit& root() const noexcept { return members_.front(); }
  const std::vector<Circuit>& members() const noexcept { return members_; }

  std::optional<std::size_t> index_of(const Circuit& c) const;
  bool contains(const Circuit& c) const { return index_of(c).has_value(); }

  /// members()[lesser] <= members()[greater].
  bool leq(std::size_t lesser, std::size_t greater) const { return order_.leq(lesser, greater); }
  /// Throws NotAMember.
  bool leq(const Circuit& lesser, const Circuit& greater) const;

  const Poset& order() const noexcept { return order_; }

  /// Hasse edges as (greater, lesser) member indices, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept {
    return covers_;
  }

  /// Set for families built by family_closed_form(): the link range each
  /// member spans.
  const std::optional<std::vector<ChainInterval>>& intervals() const noexcept {
    return intervals_;
  }

  /// "C_j..C_k" for closed-form families, the vertex sequence otherwise.
  std::string node_label(std::size_t member) const;

 private:
  ReductionFamily(std::vector<Circuit> members, Poset order,
                  std::vector<std::pair<std::size_t, std::size_t>> covers,
                  std::optional<std::vector<ChainInterval>> intervals);

  friend ReductionFamily family_closed_form(const NestedCircuit& p);
  friend ReductionFamily family_bfs_oracle(const Circuit& c);

  std::vector<Circuit> members_;
  std::map<Circuit, std::size_t> index_;
  Poset order_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::optional<std::vector<ChainInterval>> intervals_;
};

/// Members are the compositions of every sub-chain C_j..C_k of the PNC's
/// chain (single links included), ordered by interval inclusion. Covers come
/// from the 0-/1-reduction rule.
ReductionFamily family_closed_form(const NestedCircuit& p);

/// Breadth-first closure of one_step_reductions(). Makes no nesting
/// assumption, so it also handles non-PNC inputs. Covers are the transitive
/// reduction of reachability.
ReductionFamily family_bfs_oracle(const Circuit& c);

/// Members directly below `d` in the family order. Throws NotAMember.
std::vector<Circuit> immediate_predecessors(const ReductionFamily& family, const Circuit& d);

/// Internal reduction at the innermost vertex. Throws TrivialPnc.
NestedCircuit zero_reduction(const NestedCircuit& p);
/// External reduction at the outermost vertex. Throws TrivialPnc.
NestedCircuit one_reduction(const NestedCircuit& p);

/// A path of 0-/1-reductions. steps.front() is the root and steps.back() the
/// target; tags[i] says which reduction produced steps[i+1].
struct ZeroOneRecord {
  std::vector<Circuit> steps;
  std::vector<std::uint8_t> tags;

  std::size_t zeros() const;
  std::size_t ones() const;
};

/// Reaches `target` by all 1-reductions first, then all 0-reductions.
/// Throws NotInFamily.
ZeroOneRecord zero_one_sequence(const NestedCircuit& p, const Circuit& target);

/// The member left after `zeros` 0-reductions and `ones` 1-reductions in any
/// order: C_ones .. C_{m-zeros}. Throws OutOfRange when zeros + ones > m.
Circuit locate(const NestedCircuit& p, std::size_t zeros, std::size_t ones);

/// Hasse diagram in DOT: one node per member, one edge per cover, pointing
/// from the greater member to the lesser.
std::string family_to_dot(const ReductionFamily& family, const std::string& graph_name = "family");

}  // namespace pnc
