// Builds Hecke-algebra elements from generators and evaluates them lazily.

#include <iostream>

#include "hecke/algebra.hpp"

int main() {
  using namespace hecke;
  const Field f = make_field(2);
  const int n = 3;
  const Vertex v({4, 1, 0});

  const auto phi1 = NeighborFn::generator({f, n, 1, 1});
  const auto phi2 = NeighborFn::generator({f, n, 2, 1});
  const auto phi3 = NeighborFn::generator({f, n, 3, 1});

  const auto ab = NeighborFn::convolve(phi1, phi2);
  const auto ba = NeighborFn::convolve(phi2, phi1);
  std::cout << ab.describe() << " at " << v.to_string() << ":\n" << ab(v).to_string();
  std::cout << "commutes: " << (ab(v) == ba(v) ? "yes" : "no") << "\n\n";

  const auto back = NeighborFn::convolve(phi3, NeighborFn::inverse_shift({f, n, n, 1}));
  std::cout << back.describe() << " at " << v.to_string() << ":\n" << back(v).to_string() << "\n";

  const auto mix = NeighborFn::scale(Rational(1, 2), phi1 + NeighborFn::identity(f, n));
  std::cout << mix.describe() << " at " << v.to_string() << ":\n" << mix(v).to_string();
}
