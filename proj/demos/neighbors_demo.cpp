// Prints a few neighborhoods and the DOT slice of a small graph.

#include <iostream>

#include "hecke/graph_io.hpp"

int main() {
  using namespace hecke;
  const Field f3 = make_field(3);

  // Rank 2, a degree-1 place: the generic and the balanced chamber.
  const HeckeGenerator rank2({f3, 2, 1, 1});
  std::cout << rank2.neighbors(Vertex({3, 0})).to_string() << rank2.neighbors(Vertex({2, 2})).to_string() << "\n";

  // Rank 3, r = 2, a degree-2 place over F_2.
  const HeckeGenerator rank3({make_field(2), 3, 2, 2}, {true, true});
  const EdgeSet nb = rank3.neighbors(Vertex({10, 5, 0}));
  std::cout << nb.to_string() << "total " << rational_to_string(nb.total()) << " = " << rank3.params().mass() << "\n\n";

  std::cout << to_dot(build_graph({f3, 2, 1, 1}, 0, 2));
}
