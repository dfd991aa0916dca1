// Writes the growth curves of the three built-in families as CSV files,
// ready for plotting: dyadic_growth.csv, poly_growth.csv, prime_growth.csv.

#include <fstream>
#include <iostream>

#include "opg/bfs.hpp"
#include "opg/dyadic.hpp"
#include "opg/io.hpp"
#include "opg/prime_family.hpp"

int main() {
  const auto write = [](const char* path, const opg::growth_curve& c) {
    std::ofstream out(path);
    out << opg::curve_to_csv(c);
    std::cout << path << ": " << c.spec_name << ", radius " << c.radius()
              << ", |B_R| = " << c.volumes.back() << "\n";
  };
  write("dyadic_growth.csv",
        opg::ball(opg::dyadic_spec<std::int64_t>(16), std::int64_t(0), 80));
  write("poly_growth.csv",
        opg::ball(opg::poly_spec<std::int64_t>(5), std::int64_t(0), 161));
  write("prime_growth.csv",
        opg::ball(opg::prime_spec(6), opg::bigint(2), 8));
  return 0;
}
