#include "pnc/generator.hpp"

#include <string>
#include <vector>

#include "pnc/error.hpp"

namespace pnc {

ChainOfCycles random_chain(std::uint64_t seed, std::size_t depth, std::size_t max_link_len) {
  if (max_link_len < 3) {
    throw Error(Errc::OutOfRange,
                "max link length must be at least 3, got " + std::to_string(max_link_len));
  }
  Lcg64 rng(seed);
  std::size_t counter = 0;
  auto fresh = [&counter] { return "g" + std::to_string(counter++); };

  ChainOfCycles chain;
  for (std::size_t j = 0; j <= depth; ++j) {
    const auto len = static_cast<std::size_t>(rng.uniform(3, max_link_len));
    std::vector<Label> walk;
    walk.reserve(len + 1);
    walk.push_back(j == 0 ? fresh() : chain.joints.back());
    while (walk.size() < len) walk.push_back(fresh());
    walk.push_back(walk.front());
    if (j < depth) {
      const auto pos = static_cast<std::size_t>(rng.uniform(1, len - 1));
      chain.joints.push_back(walk[pos]);
    }
    chain.links.push_back(validate_circuit(std::move(walk)));
  }
  return chain;
}

NestedCircuit random_pnc(std::uint64_t seed, std::size_t depth, std::size_t max_link_len) {
  return compose(random_chain(seed, depth, max_link_len));
}

}  // namespace pnc
