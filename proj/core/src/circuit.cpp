#include "pnc/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>
#include <utility>

#include "pnc/error.hpp"

namespace pnc {
namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' ||
           ch == '\f';
  });
}

std::string describe(const SubCircuitRef& sub) {
  return "[" + std::to_string(sub.first) + "," + std::to_string(sub.last) + "]";
}

}  // namespace

Circuit validate_circuit(std::vector<Label> vertices) {
  for (std::size_t pos = 0; pos < vertices.size(); ++pos) {
    if (!valid_label(vertices[pos])) {
      throw Error(Errc::InvalidLabel,
                  "label at position " + std::to_string(pos) +
                      " is empty or contains whitespace");
    }
  }
  if (vertices.size() < 4) {
    throw Error(Errc::TooShort, "a circuit needs at least 3 edges, got " +
                                    std::to_string(vertices.empty() ? 0 : vertices.size() - 1));
  }
  const std::size_t n = vertices.size() - 1;
  if (vertices.front() != vertices.back()) {
    throw Error(Errc::NotClosed,
                "first vertex '" + vertices.front() + "' differs from last '" +
                    vertices.back() + "'");
  }
  std::set<std::pair<std::string_view, std::string_view>> edges;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::string_view a = vertices[pos];
    std::string_view b = vertices[pos + 1];
    if (a == b) {
      throw Error(Errc::SelfLoop, "loop at position " + std::to_string(pos) +
                                      " on '" + vertices[pos] + "'");
    }
    if (b < a) std::swap(a, b);
    if (!edges.emplace(a, b).second) {
      throw Error(Errc::RepeatedEdge, "edge {" + std::string(a) + "," +
                                          std::string(b) + "} repeats at position " +
                                          std::to_string(pos));
    }
  }
  return Circuit(std::move(vertices));
}

bool circuit_equal(const Circuit& a, const Circuit& b) noexcept { return a == b; }

std::vector<Intersection> intersections(const Circuit& c) {
  const std::size_t n = c.size();
  std::map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t pos = 1; pos < n; ++pos) positions[c[pos]].push_back(pos);

  std::vector<Intersection> out;
  for (const auto& [label, where] : positions) {
    for (std::size_t a = 0; a < where.size(); ++a)
      for (std::size_t b = a + 1; b < where.size(); ++b)
        out.push_back({where[a], where[b]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Label& vertex_of(const Circuit& c, Intersection x) {
  const std::size_t n = c.size();
  if (!(0 < x.first && x.first < x.last && x.last < n) || c[x.first] != c[x.last]) {
    throw Error(Errc::NotAnIntersection, "(" + std::to_string(x.first) + "," +
                                             std::to_string(x.last) +
                                             ") is not an intersection");
  }
  return c[x.first];
}

bool is_simple_cycle(const Circuit& c) {
  std::set<std::string_view> seen;
  for (std::size_t pos = 0; pos < c.size(); ++pos)
    if (!seen.insert(c[pos]).second) return false;
  return true;
}

bool is_proper_sub_circuit(const Circuit& c, SubCircuitRef sub) noexcept {
  const std::size_t n = c.size();
  return sub.first < sub.last && sub.last <= n && c[sub.first] == c[sub.last] &&
         !(sub.first == 0 && sub.last == n);
}

std::vector<SubCircuitRef> proper_sub_circuits(const Circuit& c) {
  const std::size_t n = c.size();
  std::map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t pos = 0; pos <= n; ++pos) positions[c[pos]].push_back(pos);

  std::vector<SubCircuitRef> out;
  for (const auto& [label, where] : positions) {
    for (std::size_t a = 0; a < where.size(); ++a) {
      for (std::size_t b = a + 1; b < where.size(); ++b) {
        if (where[a] == 0 && where[b] == n) continue;
        out.push_back({where[a], where[b]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Circuit internal_reduction(const Circuit& c, SubCircuitRef sub) {
  if (!is_proper_sub_circuit(c, sub))
    throw Error(Errc::NotASubCircuit, describe(sub) + " is not a proper sub-circuit");
  const auto v = c.vertices();
  std::vector<Label> out;
  if (sub.first == 0) {
    out.assign(v.begin() + static_cast<std::ptrdiff_t>(sub.last), v.end());
  } else {
    out.reserve(v.size() - (sub.last - sub.first));
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(sub.first) + 1);
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(sub.last) + 1, v.end());
  }
  return Circuit(std::move(out));
}

Circuit external_reduction(const Circuit& c, SubCircuitRef sub) {
  if (!is_proper_sub_circuit(c, sub))
    throw Error(Errc::NotASubCircuit, describe(sub) + " is not a proper sub-circuit");
  const auto v = c.vertices();
  return Circuit(std::vector<Label>(v.begin() + static_cast<std::ptrdiff_t>(sub.first),
                                    v.begin() + static_cast<std::ptrdiff_t>(sub.last) + 1));
}

std::vector<Circuit> one_step_reductions(const Circuit& c) {
  std::vector<Circuit> out;
  for (const SubCircuitRef& sub : proper_sub_circuits(c)) {
    out.push_back(internal_reduction(c, sub));
    out.push_back(external_reduction(c, sub));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pnc
