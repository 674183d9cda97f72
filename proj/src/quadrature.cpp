#include "gl3twist/quadrature.hpp"

#include <stdexcept>

namespace gl3twist {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  gauss_legendre_rule(n, nodes, weights);
}

}  // namespace gl3twist
