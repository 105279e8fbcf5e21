// Walk census and inequality report for a graph document.
//
//   walk_inequalities [graph.json] [k]
//
// Without arguments the 1-factorized K_4 with k = 2 is used.

#include <iostream>
#include <string>

#include "rainbow/rainbow.hpp"

int main(int argc, char** argv) {
  using namespace rainbow;
  try {
    const ColoredGraph g = argc > 1 ? load_graph(read_file(argv[1])) : complete_one_factorization(4);
    const unsigned k = argc > 2 ? static_cast<unsigned>(std::stoul(argv[2])) : 2;

    const auto p = walk_census(g, k);
    std::cout << "n = " << g.n() << ", e = " << g.edge_count() << ", k = " << k << "\n"
              << "closed " << 2 * k << "-walks: " << p.hom_count << " (" << p.rainbow_count << " rainbow)\n";
    for (const auto& [s, c] : p.o_counts) std::cout << "  |O_" << s << "| = " << c << "\n";

    const auto report = verify_graph(g, k);
    for (const auto& c : report.checks) {
      std::cout << to_string(c.status) << "  " << c.name << ": " << c.lhs << ' ' << to_string(c.relation) << ' '
                << c.rhs << "\n";
    }
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
