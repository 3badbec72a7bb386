#pragma once

#include <string>

#include "ldt/feasible_set.hpp"

namespace ldt {

struct Instance {
  FeasibleSet set;
  CostDomain domain;
  std::string descriptor;
};

// Binary knapsack family: items 1..d with weight i and capacity d; all
// feasible packings enumerated lexicographically. Cost domain is the open
// positive orthant of dimension d.
Instance gen_knp(int d);

// Cut vectors of the complete graph on d vertices: one incidence vector per
// unordered bipartition (vertex 1 kept outside the selected side), edges
// ordered lexicographically as (i,j), i < j. |X| = 2^(d-1), positive orthant.
Instance gen_cut(int d);

// Edge-incidence vectors of all undirected Hamiltonian cycles on d vertices.
// |X| = (d-1)!/2, negative orthant (costs encode the opposite of distances).
Instance gen_tsp(int d);

// Reads the feasible-set text format; domain defaults to Free when absent.
Instance load_custom(const std::string& path);

// cls in {knp, cut, tsp}.
Instance make_instance(const std::string& cls, int d);

// Index of undirected edge (i,j), 1-based endpoints, in the lexicographic
// edge order of the complete graph on d vertices.
int edge_index(int i, int j, int d);

}  // namespace ldt
