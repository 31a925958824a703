// Command-line interface for the cornered-algebra library (subcommands are
// registered as the corresponding modules land).
#include <CLI11.hpp>

#include "cornered/strands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact cornered-algebra computations"};
  app.require_subcommand(1);

  int n = 2;
  auto* nil = app.add_subcommand("nilcoxeter", "homology of the nilCoxeter algebra");
  nil->add_option("--n", n, "strand count");
  nil->callback([&] {
    for (auto& [deg, dim] : cornered::nc_homology(n))
      std::cout << "degree " << deg << ": dim " << dim << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
