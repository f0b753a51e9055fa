// Walks the path on four vertices through degeneracy, colorings, the
// representation, a universal vertex and the oracle.

#include <iostream>

#include "cubrep/cubrep.hpp"

using namespace cubrep;

int main() {
  const Graph p4 = path_graph(4);

  const auto d = degeneracy_order(p4);
  std::cout << "degeneracy k = " << d.k << ", order:";
  for (Vertex v : d.order) std::cout << ' ' << v + 1;
  std::cout << '\n';

  const OrderedGraph og(p4);
  DeterministicTrace trace;
  const auto fam = deterministic_coloring_family(og, &trace);
  std::cout << fam.colorings.size() << " deterministic coloring(s) from " << fam.palette_size << " colors\n";
  for (const auto& st : trace.stages)
    std::cout << "  uncovered non-edges " << st.mbar_before << " -> " << st.mbar_after << '\n';

  const auto rep = construct_cub_rep(p4);
  std::cout << "det: " << rep.dimension() << " dimensions (bound " << rep.meta.dimension_bound << "), "
            << (verify_representation(p4, rep).ok() ? "verified" : "NOT verified") << '\n';

  BuildOptions opt;
  opt.mode = BuildMode::randomized;
  opt.seed = 2024;
  const auto rrep = construct_cub_rep(p4, opt);
  std::cout << "rand: " << rrep.dimension() << " dimensions after " << rrep.meta.attempts << " draw(s)\n";

  BuildOptions pr;
  pr.prune = true;
  const auto pruned = construct_cub_rep(p4, pr);
  std::cout << "pruned: " << pruned.dimension() << " dimensions, exact cubicity "
            << oracle::exact_cubicity(p4) << '\n';

  const auto ext = extend_with_universal(rep, 1);
  std::cout << "with a universal vertex: "
            << (verify_representation(with_universal_vertices(p4, 1), ext).ok() ? "verified" : "NOT verified")
            << '\n';

  std::cout << io::emit_representation(pruned);
}
