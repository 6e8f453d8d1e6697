// Runs the acceptance battery and prints one line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "fillings/suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool ok = true;
  for (const auto& c : fillings::run_suite(seed)) {
    std::cout << fillings::format_line(c) << std::endl;
    ok = ok && c.pass;
  }
  std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}
