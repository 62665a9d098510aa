// Copyright 2026 The noisy-qaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nqaoa/statevector.hpp"

namespace nqaoa {

struct Edge {
  std::size_t i;
  std::size_t j;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph. Edges are normalised to i < j and kept sorted
/// by (i, j). Self-loops, duplicates, out-of-range nodes and zero or
/// non-finite weights are rejected with ValidationError.
class WeightedGraph {
 public:
  WeightedGraph(std::size_t num_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  double total_weight() const;
  double total_squared_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t num_nodes_;
  std::vector<Edge> edges_;
};

/// The seven-node, nine-edge benchmark graph (weights sum to 5.17).
WeightedGraph table1_graph();

struct ZZTerm {
  std::size_t i;
  std::size_t j;
  double coefficient;
};

/// H = sum C_ij Z_i Z_j. Diagonal and traceless; no identity term.
class ProblemHamiltonian {
 public:
  ProblemHamiltonian(std::size_t num_qubits, std::vector<ZZTerm> terms);

  std::size_t num_qubits() const { return num_qubits_; }
  std::span<const ZZTerm> terms() const { return terms_; }

  /// Energy of computational basis state |index>; bit b maps to z = (-1)^b.
  double energy(std::uint64_t index) const;

  /// All 2^m diagonal entries. Throws SizeError above kMaxStateQubits.
  std::vector<double> diagonal() const;

 private:
  std::size_t num_qubits_;
  std::vector<ZZTerm> terms_;
};

ProblemHamiltonian problem_hamiltonian(const WeightedGraph& graph);

/// `bits[k]` is the value (0 or 1) of node k.
double energy_of_bitstring(const ProblemHamiltonian& h, std::span<const std::uint8_t> bits);

double exact_expectation(const StateVector& state, const ProblemHamiltonian& h);
double exact_expectation(const DensityMatrix& rho, const ProblemHamiltonian& h);

struct GroundStates {
  double energy;
  std::vector<std::uint64_t> optima;  ///< basis indices, ascending
};

/// Exhaustive minimum over all 2^m assignments (m <= 24). Ties within 1e-9.
GroundStates brute_force_ground(const WeightedGraph& graph);

/// Weight of edges crossing the partition encoded by `index`.
double cut_value(const WeightedGraph& graph, std::uint64_t index);

/// "0001111"-style string, character k is node k.
std::string bitstring(std::uint64_t index, std::size_t num_nodes);

/// "{0,1,2,3}|{4,5,6}" with the side containing node 0 first.
std::string partition_string(std::uint64_t index, std::size_t num_nodes);

}  // namespace nqaoa
