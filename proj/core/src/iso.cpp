#include "pnc/iso.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "pnc/error.hpp"
#include "pnc/text_format.hpp"

namespace pnc {

IsoWitness build_isomorphism(const NestedCircuit& p) {
  const std::size_t m = p.depth();
  const ChainOfCycles chain = decompose(p);

  IsoWitness witness;
  witness.depth = m;
  for (std::size_t ones = 0; ones <= m; ++ones) {
    for (std::size_t zeros = 0; zeros + ones <= m; ++zeros) {
      Circuit member = (zeros == 0 && ones == 0)
                           ? p.circuit()
                           : compose(chain.slice(ones, m - zeros)).circuit();
      witness.pairs.emplace_back(std::move(member), SeqClass{zeros + ones, ones, m});
    }
  }
  return witness;
}

IsoReport verify_isomorphism(const IsoWitness& witness, const ReductionFamily& family,
                             const SeqClassPoset& sm) {
  if (family.size() != sm.size() || witness.depth != sm.bound) {
    throw Error(Errc::DimensionMismatch,
                "family has " + std::to_string(family.size()) + " members, S_" +
                    std::to_string(sm.bound) + " has " + std::to_string(sm.size()) +
                    " classes (witness depth " + std::to_string(witness.depth) + ")");
  }

  IsoReport report;
  std::vector<std::optional<std::size_t>> image(family.size());
  std::vector<std::optional<std::size_t>> preimage(sm.size());

  for (const auto& [member, cls] : witness.pairs) {
    const auto from = family.index_of(member);
    const auto to = sm.index_of(cls);
    if (!from) {
      report.total = false;
      report.violations.push_back("not a family member: " + format_circuit(member));
      continue;
    }
    if (!to) {
      report.surjective = false;
      report.violations.push_back("not a class of S_" + std::to_string(sm.bound) + ": " +
                                  to_string(cls));
      continue;
    }
    if (image[*from]) {
      report.total = false;
      report.violations.push_back("member mapped twice: " + format_circuit(member));
      continue;
    }
    image[*from] = *to;
    if (preimage[*to]) {
      report.injective = false;
      report.violations.push_back("class " + to_string(cls) + " hit by " +
                                  format_circuit(family.members()[*preimage[*to]]) + " and " +
                                  format_circuit(member));
    } else {
      preimage[*to] = *from;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!image[i]) {
      report.total = false;
      report.violations.push_back("member has no image: " + format_circuit(family.members()[i]));
    }
  }
  for (std::size_t k = 0; k < sm.size(); ++k) {
    if (!preimage[k]) {
      report.surjective = false;
      report.violations.push_back("class has no preimage: " + to_string(sm.classes[k]));
    }
  }

  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (!image[a] || !image[b]) continue;
      ++report.pairs_checked;
      const bool in_family = family.leq(a, b);
      const bool in_sm = sm.order.leq(*image[a], *image[b]);
      if (in_family != in_sm) {
        report.order_preserving = false;
        report.violations.push_back(
            "order mismatch: " + family.node_label(a) + (in_family ? " <= " : " !<= ") +
            family.node_label(b) + " but " + to_string(sm.classes[*image[a]]) +
            (in_sm ? " <= " : " !<= ") + to_string(sm.classes[*image[b]]));
      }
    }
  }
  return report;
}

std::string render_report(const IsoWitness& witness, const IsoReport& report) {
  std::ostringstream out;
  for (const auto& [member, cls] : witness.pairs)
    out << format_circuit(member) << " -> " << to_string(cls) << '\n';
  for (const std::string& violation : report.violations) out << "violation: " << violation << '\n';
  out << (report.passed() ? "PASS" : "FAIL") << " pairs=" << witness.pairs.size()
      << " total=" << report.total << " injective=" << report.injective
      << " surjective=" << report.surjective << " order=" << report.order_preserving << '\n';
  return out.str();
}

std::string isomorphism_to_dot(const IsoWitness& witness, const ReductionFamily& family,
                               const SeqClassPoset& sm) {
  auto colour = [&sm](std::size_t cls) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f 0.35 1.000",
                  static_cast<double>(cls) / static_cast<double>(sm.size()));
    return std::string(buf);
  };
  std::vector<std::optional<std::size_t>> image(family.size());
  for (const auto& [member, cls] : witness.pairs) {
    auto from = family.index_of(member);
    auto to = sm.index_of(cls);
    if (from && to) image[*from] = *to;
  }

  std::ostringstream out;
  out << "digraph \"isomorphism\" {\n  node [style=filled];\n";
  out << "  subgraph cluster_family {\n    label=\"reduction family\";\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "    m" << i << " [label=" << dot_quote(family.node_label(i));
    if (image[i]) out << ", fillcolor=\"" << colour(*image[i]) << "\"";
    out << "];\n";
  }
  for (const auto& [greater, lesser] : family.covers())
    out << "    m" << greater << " -> m" << lesser << ";\n";
  out << "  }\n  subgraph cluster_sm {\n    label=" << dot_quote("S_" + std::to_string(sm.bound))
      << ";\n";
  for (std::size_t k = 0; k < sm.size(); ++k) {
    out << "    s" << k << " [label=" << dot_quote(to_string(sm.classes[k]))
        << ", fillcolor=\"" << colour(k) << "\"];\n";
  }
  for (const auto& [greater, lesser] : sm.order.covers())
    out << "    s" << greater << " -> s" << lesser << ";\n";
  out << "  }\n}\n";
  return out.str();
}

}  // namespace pnc
