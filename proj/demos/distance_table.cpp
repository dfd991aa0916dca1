// Prints the level-target distances of the dyadic family three ways: the
// closed form, the split-recursion table, and the BFS oracle.

#include <cstdio>

#include "opg/bfs.hpp"
#include "opg/dyadic.hpp"

int main() {
  opg::target_distance_table table(14);
  std::printf("%4s %16s %10s %10s %6s\n", "i", "target", "closed", "table",
              "bfs");
  for (int i = 1; i <= 14; ++i) {
    const auto g = opg::dyadic_spec<std::int64_t>(i);
    const std::int64_t target = std::int64_t(1) << (i - 1);
    const auto d = opg::bfs_distance(g, std::int64_t(0), target);
    std::printf("%4d %16lld %10s %10s %6lld\n", i,
                static_cast<long long>(target),
                opg::target_distance_closed(i).str().c_str(),
                table.distance(i).str().c_str(), static_cast<long long>(d));
  }
  return 0;
}
