#include "pnc/family.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "pnc/error.hpp"
#include "pnc/text_format.hpp"

namespace pnc {

ReductionFamily::ReductionFamily(std::vector<Circuit> members, Poset order,
                                 std::vector<std::pair<std::size_t, std::size_t>> covers,
                                 std::optional<std::vector<ChainInterval>> intervals)
    : members_(std::move(members)),
      order_(std::move(order)),
      covers_(std::move(covers)),
      intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> ReductionFamily::index_of(const Circuit& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ReductionFamily::leq(const Circuit& lesser, const Circuit& greater) const {
  auto a = index_of(lesser);
  auto b = index_of(greater);
  if (!a || !b) throw Error(Errc::NotAMember, "circuit is not in the family");
  return order_.leq(*a, *b);
}

std::string ReductionFamily::node_label(std::size_t member) const {
  if (intervals_) {
    const ChainInterval& span = (*intervals_)[member];
    if (span.first == span.last) return "C_" + std::to_string(span.first);
    return "C_" + std::to_string(span.first) + "..C_" + std::to_string(span.last);
  }
  return format_circuit(members_[member]);
}

ReductionFamily family_closed_form(const NestedCircuit& p) {
  const ChainOfCycles chain = decompose(p);
  const std::size_t m = p.depth();

  std::vector<ChainInterval> spans;
  for (std::size_t width = m + 1; width-- > 0;)
    for (std::size_t first = 0; first + width <= m; ++first)
      spans.push_back({first, first + width});

  std::vector<Circuit> members;
  members.reserve(spans.size());
  for (const ChainInterval& span : spans) {
    if (span.first == 0 && span.last == m) {
      members.push_back(p.circuit());
    } else {
      members.push_back(compose(chain.slice(span.first, span.last)).circuit());
    }
  }

  Poset order(spans.size());
  for (std::size_t a = 0; a < spans.size(); ++a)
    for (std::size_t b = 0; b < spans.size(); ++b)
      order.set_leq(a, b, spans[b].first <= spans[a].first && spans[a].last <= spans[b].last);

  auto position = [&spans](ChainInterval span) {
    return static_cast<std::size_t>(std::find(spans.begin(), spans.end(), span) - spans.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < spans.size(); ++a) {
    const ChainInterval& span = spans[a];
    if (span.first == span.last) continue;
    covers.emplace_back(a, position({span.first, span.last - 1}));  // 0-reduction
    covers.emplace_back(a, position({span.first + 1, span.last}));  // 1-reduction
  }
  return ReductionFamily(std::move(members), std::move(order), std::move(covers),
                         std::move(spans));
}

ReductionFamily family_bfs_oracle(const Circuit& c) {
  std::vector<Circuit> members{c};
  std::map<Circuit, std::size_t> seen{{c, 0}};
  std::vector<std::vector<std::size_t>> direct(1);

  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Circuit& next : one_step_reductions(members[head])) {
      auto [it, inserted] = seen.emplace(next, members.size());
      if (inserted) {
        members.push_back(std::move(next));
        direct.emplace_back();
      }
      direct[head].push_back(it->second);
    }
  }

  // Reductions strictly shrink circuits, so visiting members by increasing
  // size sees every successor's reachability set first.
  const std::size_t count = members.size();
  std::vector<std::size_t> by_size(count);
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(), [&members](std::size_t a, std::size_t b) {
    return members[a].size() < members[b].size();
  });

  Poset order(count);
  for (std::size_t from : by_size) {
    order.set_leq(from, from);
    for (std::size_t to : direct[from])
      for (std::size_t below = 0; below < count; ++below)
        if (order.leq(below, to)) order.set_leq(below, from);
  }
  auto covers = order.covers();
  return ReductionFamily(std::move(members), std::move(order), std::move(covers), std::nullopt);
}

std::vector<Circuit> immediate_predecessors(const ReductionFamily& family, const Circuit& d) {
  auto index = family.index_of(d);
  if (!index) throw Error(Errc::NotAMember, "circuit is not in the family");
  std::vector<Circuit> out;
  for (const auto& [greater, lesser] : family.covers())
    if (greater == *index) out.push_back(family.members()[lesser]);
  std::sort(out.begin(), out.end());
  return out;
}

NestedCircuit zero_reduction(const NestedCircuit& p) {
  if (p.depth() == 0) throw Error(Errc::TrivialPnc, "a simple cycle has no 0-reduction");
  const auto& seq = p.internal();
  return recognize(internal_reduction(p.circuit(), {seq.opens.back(), seq.closes.back()}));
}

NestedCircuit one_reduction(const NestedCircuit& p) {
  if (p.depth() == 0) throw Error(Errc::TrivialPnc, "a simple cycle has no 1-reduction");
  const auto& seq = p.internal();
  return recognize(external_reduction(p.circuit(), {seq.opens.front(), seq.closes.front()}));
}

std::size_t ZeroOneRecord::zeros() const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), std::uint8_t{0}));
}

std::size_t ZeroOneRecord::ones() const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), std::uint8_t{1}));
}

Circuit locate(const NestedCircuit& p, std::size_t zeros, std::size_t ones) {
  const std::size_t m = p.depth();
  if (zeros + ones > m) {
    throw Error(Errc::OutOfRange, std::to_string(zeros) + " 0-reductions plus " +
                                      std::to_string(ones) + " 1-reductions exceed depth " +
                                      std::to_string(m));
  }
  if (zeros == 0 && ones == 0) return p.circuit();
  return compose(decompose(p).slice(ones, m - zeros)).circuit();
}

ZeroOneRecord zero_one_sequence(const NestedCircuit& p, const Circuit& target) {
  const std::size_t m = p.depth();
  for (std::size_t ones = 0; ones <= m; ++ones) {
    for (std::size_t zeros = 0; zeros + ones <= m; ++zeros) {
      if (locate(p, zeros, ones) != target) continue;

      ZeroOneRecord record;
      NestedCircuit current = p;
      record.steps.push_back(current.circuit());
      for (std::size_t k = 0; k < ones; ++k) {
        current = one_reduction(current);
        record.steps.push_back(current.circuit());
        record.tags.push_back(1);
      }
      for (std::size_t k = 0; k < zeros; ++k) {
        current = zero_reduction(current);
        record.steps.push_back(current.circuit());
        record.tags.push_back(0);
      }
      return record;
    }
  }
  throw Error(Errc::NotInFamily, "circuit is not in the reduction family");
}

std::string family_to_dot(const ReductionFamily& family, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n";
  for (std::size_t i = 0; i < family.size(); ++i)
    out << "  m" << i << " [label=" << dot_quote(family.node_label(i)) << "];\n";
  for (const auto& [greater, lesser] : family.covers())
    out << "  m" << greater << " -> m" << lesser << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pnc
