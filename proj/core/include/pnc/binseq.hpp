#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pnc/poset.hpp"

namespace pnc {

/// A finite binary sequence.
struct BinSeq {
  std::vector<bool> bits;

  std::size_t length() const noexcept { return bits.size(); }
  std::size_t ones() const noexcept;
  std::size_t zeros() const noexcept { return length() - ones(); }

  /// `prefix` is an initial segment of this sequence.
  bool extends(const BinSeq& prefix) const noexcept;

  friend bool operator==(const BinSeq&, const BinSeq&) = default;
};

/// An equivalence class of sequences of length <= bound, identified by its
/// length and number of ones.
struct SeqClass {
  std::size_t length = 0;
  std::size_t ones = 0;
  std::size_t bound = 0;

  std::size_t zeros() const noexcept { return length - ones; }

  friend auto operator<=>(const SeqClass&, const SeqClass&) = default;
};

/// Throws OutOfRange unless ones <= length <= bound.
SeqClass make_class(std::size_t length, std::size_t ones, std::size_t bound);

/// Throws TooLong when s is longer than bound.
SeqClass class_of(const BinSeq& s, std::size_t bound);

/// a <= b iff some representative of a extends some representative of b,
/// decided by counting: b has no more ones and no more zeros than a.
/// Throws BoundMismatch.
bool leq_m(const SeqClass& a, const SeqClass& b);

/// Same relation by enumerating every pair of representatives.
bool leq_m_oracle(const SeqClass& a, const SeqClass& b);

/// Every sequence of the given length with exactly `ones` ones, in
/// lexicographic order.
std::vector<BinSeq> representatives(std::size_t length, std::size_t ones);

/// "p:k"
std::string to_string(const SeqClass& cls);

/// S_m with its order.
struct SeqClassPoset {
  std::size_t bound = 0;
  std::vector<SeqClass> classes;  // sorted by (length, ones)
  Poset order;

  std::size_t size() const noexcept { return classes.size(); }
  std::optional<std::size_t> index_of(const SeqClass& cls) const;
};

SeqClassPoset build_sm(std::size_t bound);

std::string sm_to_dot(const SeqClassPoset& sm, const std::string& graph_name = "sm");

}  // namespace pnc
