#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvq/diagram.hpp"

namespace mvq {

// Z[A^{+-1}] with exact integer coefficients; zero coefficients never stored.
struct LaurentPolynomial {
  std::map<int, std::int64_t> c;  // exponent -> coefficient

  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial term(std::int64_t coeff, int exp);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial scaled(std::int64_t k) const;

  bool is_zero() const { return c.empty(); }
  int max_exponent() const;  // throws on zero

  bool operator==(const LaurentPolynomial& o) const = default;
};

// d = -A^2 - A^-2.
LaurentPolynomial loop_value();
LaurentPolynomial loop_value_pow(int k);

// Terms in descending exponent order, e.g. "-A^2 - A^-2", "2*A^4 + 1".
std::string to_string(const LaurentPolynomial& p);

enum class VertexKind { Classical, Box, Circle, Node };

// Four-port vertex model of a diagram for the state sum. Ports pair into
// edges via the semiarcs; classical vertices carry the orientation data (which
// port is over-in etc.) that fixes the A/B smoothings.
struct PortDiagram {
  struct Vertex {
    VertexKind kind = VertexKind::Circle;
    int sign = +1;  // classical only
    // Semiarc indices: {over_in, over_out, under_in, under_out} for classical,
    // {in1, out1, in2, out2} otherwise.
    int port[4] = {0, 0, 0, 0};
  };
  int semiarcs = 0;
  int free_loops = 0;  // components without passages
  std::vector<Vertex> vertices;
};

// Maps type labels to Box/Circle (and the reserved label "node" to Node).
// Throws DomainError if more than two non-node types are in use; with exactly
// two, the first declared becomes box and the second circle unless an
// explicit assignment is given.
PortDiagram to_port_diagram(const Diagram& d,
                            const std::map<std::string, VertexKind>& label_map = {});

// Number of circles in a flat state: nodes merge all four incident edges,
// circle vertices pass through. Input must contain no classical or box
// vertices.
int flat_components(const PortDiagram& pd);
LaurentPolynomial flat_value(const PortDiagram& pd);

// The chromatic bracket: classical crossings expand by the Kauffman skein
// rule, boxes by the box-circle relation (2·node - circle), terminal flat
// states evaluate as d^#circles. Throws BudgetError past state_budget states.
LaurentPolynomial chromatic_bracket(const Diagram& d,
                                    const std::map<std::string, VertexKind>& label_map = {},
                                    std::uint64_t state_budget = 1u << 22);

}  // namespace mvq
