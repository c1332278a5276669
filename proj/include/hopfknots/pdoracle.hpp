// Brute-force Kauffman bracket on classical planar diagrams (PD codes),
// plus torus braid-closure generation. This is the independent reference
// the closed-form evaluations are anchored against.
#pragma once

#include "hopfknots/laurent.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfknots {

struct StateBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultiComponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One crossing as the 4-tuple of incident edge labels, listed
// counterclockwise starting at the incoming under-strand. The under-strand
// occupies slots 0 and 2, the over-strand slots 1 and 3.
struct PdCrossing {
  std::array<int, 4> e;
};

struct PlanarDiagram {
  std::vector<PdCrossing> crossings;

  std::size_t crossing_count() const { return crossings.size(); }
  // Every edge label must occur exactly twice across all tuples.
  void validate() const;
};

// Braid word on `strands` strands; letter +i / -i is the positive / negative
// crossing of strand positions i and i+1 (1 <= i < strands).
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

// Planar diagram of the braid closure.
PlanarDiagram braid_closure_pd(const BraidWord& w);

// T(m,n) as the closure of (sigma_1 ... sigma_{m-1})^n: n(m-1) positive
// crossings. Requires gcd(m,n)=1 and m >= 2.
PlanarDiagram torus_braid_pd(long long m, long long n);

// Kauffman bracket state sum over all 2^k smoothings, loop counting by
// union-find, normalized so the crossingless unknot gives 1. Diagrams with
// more than 20 crossings are rejected.
LaurentPoly kauffman_bracket_pd(const PlanarDiagram& pd);

// Writhe of an (implicitly oriented) single-component diagram; the sign of
// each crossing is recovered from a full knot traversal. Orientation
// reversal leaves it unchanged, so no explicit orientation input is needed.
long long writhe_pd(const PlanarDiagram& pd);

// True when the diagram has a single component (the traversal visits every
// edge exactly once).
bool is_knot_pd(const PlanarDiagram& pd);

// (-A)^{-3w} <D> converted to t. Throws MultiComponent on links.
LaurentPoly jones_from_pd(const PlanarDiagram& pd);

// Parse the textual form "X(1,3,4,2), X(3,5,6,4), ...".
PlanarDiagram parse_pd(const std::string& text);

std::string pd_to_string(const PlanarDiagram& pd);

}  // namespace hopfknots
