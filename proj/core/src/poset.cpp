#include "pnc/poset.hpp"

namespace pnc {

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t hi = 0; hi < size_; ++hi) {
    for (std::size_t lo = 0; lo < size_; ++lo) {
      if (!less(lo, hi)) continue;
      bool direct = true;
      for (std::size_t mid = 0; mid < size_ && direct; ++mid)
        if (less(lo, mid) && less(mid, hi)) direct = false;
      if (direct) out.emplace_back(hi, lo);
    }
  }
  return out;
}

OrderAxiomReport check_partial_order(const Poset& order) {
  OrderAxiomReport report;
  const std::size_t n = order.size();
  auto note = [&report](const std::string& what) {
    if (report.first_violation.empty()) report.first_violation = what;
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (!order.leq(a, a)) {
      report.reflexive = false;
      note("not reflexive at " + std::to_string(a));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && order.leq(a, b) && order.leq(b, a)) {
        report.antisymmetric = false;
        note("not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (!order.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (order.leq(b, c) && !order.leq(a, c)) {
          report.transitive = false;
          note("not transitive at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace pnc
