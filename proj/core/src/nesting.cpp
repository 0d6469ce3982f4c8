#include "pnc/nesting.hpp"

#include <algorithm>
#include <map>
#include <string_view>

#include "pnc/error.hpp"

namespace pnc {

std::vector<std::size_t> InternalSequence::flattened() const {
  std::vector<std::size_t> out(opens);
  out.insert(out.end(), closes.rbegin(), closes.rend());
  return out;
}

std::vector<Label> NestedCircuit::internal_vertices() const {
  std::vector<Label> out;
  out.reserve(depth());
  for (std::size_t pos : internal_.opens) out.push_back(circuit_[pos]);
  return out;
}

NestedCircuit recognize(const Circuit& c) {
  const std::size_t n = c.size();
  std::map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t pos = 0; pos < n; ++pos) positions[c[pos]].push_back(pos);

  if (positions[c.start()].size() > 1) {
    throw NotPncError(NotPncReason::StartVertexRepeats,
                      "start vertex '" + c.start() + "' reappears at position " +
                          std::to_string(positions[c.start()][1]));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [label, where] : positions) {
    if (where.size() > 2) {
      throw NotPncError(NotPncReason::VertexTriple,
                        "vertex '" + std::string(label) + "' occurs " +
                            std::to_string(where.size()) + " times");
    }
    if (where.size() == 2) pairs.emplace_back(where[0], where[1]);
  }
  std::sort(pairs.begin(), pairs.end());

  // Opens are ascending after the sort; total nesting means closes strictly
  // descend, which also places every open before every close.
  InternalSequence seq;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].second > pairs[i - 1].second) {
      throw NotPncError(NotPncReason::NotTotallyNested,
                        "sub-circuits [" + std::to_string(pairs[i - 1].first) + "," +
                            std::to_string(pairs[i - 1].second) + "] and [" +
                            std::to_string(pairs[i].first) + "," +
                            std::to_string(pairs[i].second) + "] are not nested");
    }
    seq.opens.push_back(pairs[i].first);
    seq.closes.push_back(pairs[i].second);
  }
  return NestedCircuit(c, std::move(seq));
}

bool is_perfectly_nested(const Circuit& c) {
  try {
    recognize(c);
    return true;
  } catch (const NotPncError&) {
    return false;
  }
}

namespace {

std::size_t nesting_level(const NestedCircuit& p, const Label& v) {
  const auto& opens = p.internal().opens;
  for (std::size_t i = 0; i < opens.size(); ++i)
    if (p.circuit()[opens[i]] == v) return i;
  throw Error(Errc::NotInternalVertex, "'" + v + "' is not an internal vertex");
}

}  // namespace

bool more_internal(const NestedCircuit& p, const Label& u, const Label& w) {
  return nesting_level(p, u) > nesting_level(p, w);
}

const Label& outermost(const NestedCircuit& p) {
  if (p.depth() == 0) throw Error(Errc::TrivialPnc, "a simple cycle has no internal vertex");
  return p.circuit()[p.internal().opens.front()];
}

const Label& innermost(const NestedCircuit& p) {
  if (p.depth() == 0) throw Error(Errc::TrivialPnc, "a simple cycle has no internal vertex");
  return p.circuit()[p.internal().opens.back()];
}

ChainOfCycles ChainOfCycles::slice(std::size_t first, std::size_t last) const {
  if (first > last || last >= links.size()) {
    throw Error(Errc::OutOfRange, "link range [" + std::to_string(first) + "," +
                                      std::to_string(last) + "] outside chain of " +
                                      std::to_string(links.size()));
  }
  ChainOfCycles out;
  out.links.assign(links.begin() + static_cast<std::ptrdiff_t>(first),
                   links.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  out.joints.assign(joints.begin() + static_cast<std::ptrdiff_t>(first),
                    joints.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

std::vector<std::size_t> ChainOfCycles::link_lengths() const {
  std::vector<std::size_t> out;
  for (const Circuit& link : links) out.push_back(link.size());
  return out;
}

ChainOfCycles decompose(const NestedCircuit& p) {
  const Circuit& c = p.circuit();
  const auto v = c.vertices();
  const std::size_t m = p.depth();

  // Level j spans [open(j), close(j)] with open(0) = 0 and close(0) = n.
  auto open = [&](std::size_t j) { return j == 0 ? std::size_t{0} : p.internal().opens[j - 1]; };
  auto close = [&](std::size_t j) { return j == 0 ? c.size() : p.internal().closes[j - 1]; };

  ChainOfCycles chain;
  for (std::size_t j = 0; j <= m; ++j) {
    std::vector<Label> walk;
    if (j < m) {
      walk.assign(v.begin() + static_cast<std::ptrdiff_t>(open(j)),
                  v.begin() + static_cast<std::ptrdiff_t>(open(j + 1)) + 1);
      walk.insert(walk.end(), v.begin() + static_cast<std::ptrdiff_t>(close(j + 1)) + 1,
                  v.begin() + static_cast<std::ptrdiff_t>(close(j)) + 1);
      chain.joints.push_back(v[open(j + 1)]);
    } else {
      walk.assign(v.begin() + static_cast<std::ptrdiff_t>(open(j)),
                  v.begin() + static_cast<std::ptrdiff_t>(close(j)) + 1);
    }
    chain.links.push_back(validate_circuit(std::move(walk)));
  }
  return chain;
}

namespace {

void check_chain(const ChainOfCycles& chain) {
  if (chain.links.empty())
    throw Error(Errc::InvalidChain, "a chain needs at least one link");
  if (chain.joints.size() + 1 != chain.links.size()) {
    throw Error(Errc::InvalidChain, std::to_string(chain.links.size()) + " links need " +
                                        std::to_string(chain.links.size() - 1) +
                                        " joints, got " + std::to_string(chain.joints.size()));
  }
  for (std::size_t j = 0; j < chain.links.size(); ++j) {
    if (!is_simple_cycle(chain.links[j]))
      throw Error(Errc::InvalidChain, "link " + std::to_string(j) + " is not a simple cycle");
  }

  std::map<std::string_view, std::size_t> joint_index;
  for (std::size_t j = 0; j < chain.joints.size(); ++j) {
    if (!joint_index.emplace(chain.joints[j], j).second)
      throw Error(Errc::InvalidChain, "joint '" + chain.joints[j] + "' is used twice");
  }

  // Every label lives in a single link unless it is joint j, which must live
  // in exactly links j and j+1.
  std::map<std::string_view, std::vector<std::size_t>> owners;
  for (std::size_t j = 0; j < chain.links.size(); ++j) {
    const Circuit& link = chain.links[j];
    for (std::size_t pos = 0; pos < link.size(); ++pos) owners[link[pos]].push_back(j);
  }
  for (const auto& [label, where] : owners) {
    auto joint = joint_index.find(label);
    if (joint == joint_index.end()) {
      if (where.size() > 1)
        throw Error(Errc::InvalidChain,
                    "label '" + std::string(label) + "' is shared by links " +
                        std::to_string(where[0]) + " and " + std::to_string(where[1]) +
                        " but is not a joint");
      continue;
    }
    const std::size_t j = joint->second;
    if (where != std::vector<std::size_t>{j, j + 1}) {
      throw Error(Errc::InvalidChain, "joint '" + std::string(label) +
                                          "' must appear in exactly links " +
                                          std::to_string(j) + " and " + std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < chain.joints.size(); ++j) {
    if (!owners.contains(chain.joints[j]))
      throw Error(Errc::InvalidChain, "joint '" + chain.joints[j] + "' lies on no link");
  }
  if (!chain.joints.empty() && chain.links[0].start() == chain.joints[0]) {
    throw Error(Errc::InvalidChain,
                "the first joint '" + chain.joints[0] + "' coincides with the start vertex");
  }
}

std::size_t position_in(const Circuit& link, const Label& label) {
  for (std::size_t pos = 0; pos < link.size(); ++pos)
    if (link[pos] == label) return pos;
  return link.size();
}

// Appends link j entered at `entry`; the entry vertex itself is already on
// the walk unless j == 0.
void append_link(const ChainOfCycles& chain, std::size_t j, std::size_t entry,
                 std::vector<Label>& walk) {
  const Circuit& link = chain.links[j];
  const std::size_t len = link.size();
  const bool has_child = j < chain.joints.size();
  for (std::size_t step = (j == 0 ? 0 : 1); step <= len; ++step) {
    const Label& label = link[(entry + step) % len];
    walk.push_back(label);
    if (has_child && step < len && label == chain.joints[j]) {
      append_link(chain, j + 1, position_in(chain.links[j + 1], label), walk);
    }
  }
}

}  // namespace

NestedCircuit compose(const ChainOfCycles& chain) {
  check_chain(chain);
  std::vector<Label> walk;
  append_link(chain, 0, 0, walk);
  return recognize(validate_circuit(std::move(walk)));
}

}  // namespace pnc
