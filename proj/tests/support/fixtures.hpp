#pragma once

#include <vector>

#include "lapspec/graph.hpp"

// The four counterexample graphs printed in the reference results, exactly as
// published (canonical adjacency-text form), with the conjecture sets they
// violate, plus small standard graphs used across tests.
namespace fixtures {

const char* graph2_text();   // 12 vertices
const char* graph66_text();  // 20 vertices
const char* graph41_text();  // 20 vertices
const char* graph65_text();  // 21 vertices

lapspec::Graph graph2();
lapspec::Graph graph66();
lapspec::Graph graph41();
lapspec::Graph graph65();

const std::vector<int>& graph2_violations();
const std::vector<int>& graph66_violations();
const std::vector<int>& graph41_violations();
const std::vector<int>& graph65_violations();

lapspec::Graph path(int n);
lapspec::Graph star(int n);   // K_{1,n-1}
lapspec::Graph cycle(int n);
lapspec::Graph two_k2();      // disconnected: two disjoint edges on 4 vertices

}  // namespace fixtures
