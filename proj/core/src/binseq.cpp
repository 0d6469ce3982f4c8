#include "pnc/binseq.hpp"

#include <algorithm>
#include <sstream>

#include "pnc/error.hpp"
#include "pnc/text_format.hpp"

namespace pnc {
namespace {

void require_same_bound(const SeqClass& a, const SeqClass& b) {
  if (a.bound != b.bound) {
    throw Error(Errc::BoundMismatch, "classes bounded by " + std::to_string(a.bound) + " and " +
                                         std::to_string(b.bound));
  }
}

}  // namespace

std::size_t BinSeq::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

bool BinSeq::extends(const BinSeq& prefix) const noexcept {
  return prefix.length() <= length() &&
         std::equal(prefix.bits.begin(), prefix.bits.end(), bits.begin());
}

SeqClass make_class(std::size_t length, std::size_t ones, std::size_t bound) {
  if (ones > length || length > bound) {
    throw Error(Errc::OutOfRange, "no class " + std::to_string(length) + ":" +
                                      std::to_string(ones) + " under bound " +
                                      std::to_string(bound));
  }
  return {length, ones, bound};
}

SeqClass class_of(const BinSeq& s, std::size_t bound) {
  if (s.length() > bound) {
    throw Error(Errc::TooLong, "sequence of length " + std::to_string(s.length()) +
                                   " exceeds bound " + std::to_string(bound));
  }
  return {s.length(), s.ones(), bound};
}

bool leq_m(const SeqClass& a, const SeqClass& b) {
  require_same_bound(a, b);
  return b.ones <= a.ones && b.zeros() <= a.zeros();
}

std::vector<BinSeq> representatives(std::size_t length, std::size_t ones) {
  std::vector<BinSeq> out;
  if (ones > length) return out;
  // Start from 0...01...1 and walk every permutation.
  std::vector<bool> bits(length, false);
  std::fill(bits.end() - static_cast<std::ptrdiff_t>(ones), bits.end(), true);
  do {
    out.push_back({bits});
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

bool leq_m_oracle(const SeqClass& a, const SeqClass& b) {
  require_same_bound(a, b);
  const auto longer = representatives(a.length, a.ones);
  const auto shorter = representatives(b.length, b.ones);
  for (const BinSeq& s : longer)
    for (const BinSeq& t : shorter)
      if (s.extends(t)) return true;
  return false;
}

std::string to_string(const SeqClass& cls) {
  return std::to_string(cls.length) + ":" + std::to_string(cls.ones);
}

std::optional<std::size_t> SeqClassPoset::index_of(const SeqClass& cls) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), cls);
  if (it == classes.end() || *it != cls) return std::nullopt;
  return static_cast<std::size_t>(it - classes.begin());
}

SeqClassPoset build_sm(std::size_t bound) {
  SeqClassPoset sm;
  sm.bound = bound;
  for (std::size_t length = 0; length <= bound; ++length)
    for (std::size_t ones = 0; ones <= length; ++ones) sm.classes.push_back({length, ones, bound});
  sm.order = Poset(sm.classes.size());
  for (std::size_t a = 0; a < sm.classes.size(); ++a)
    for (std::size_t b = 0; b < sm.classes.size(); ++b)
      sm.order.set_leq(a, b, leq_m(sm.classes[a], sm.classes[b]));
  return sm;
}

std::string sm_to_dot(const SeqClassPoset& sm, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n";
  for (std::size_t i = 0; i < sm.size(); ++i)
    out << "  s" << i << " [label=" << dot_quote(to_string(sm.classes[i])) << "];\n";
  for (const auto& [greater, lesser] : sm.order.covers())
    out << "  s" << greater << " -> s" << lesser << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pnc
