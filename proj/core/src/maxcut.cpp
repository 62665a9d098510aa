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

#include "nqaoa/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "nqaoa/error.hpp"

namespace nqaoa {

WeightedGraph::WeightedGraph(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ == 0) throw ValidationError("graph needs at least one node");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    Edge& e = edges_[k];
    std::ostringstream where;
    where << "edge " << k << " (" << e.i << ", " << e.j << ")";
    if (e.i == e.j) throw ValidationError(where.str() + ": self-loop");
    if (e.i >= num_nodes_ || e.j >= num_nodes_)
      throw ValidationError(where.str() + ": node index out of range");
    if (!std::isfinite(e.weight)) throw ValidationError(where.str() + ": non-finite weight");
    if (e.weight == 0.0) throw ValidationError(where.str() + ": zero weight");
    if (e.i > e.j) std::swap(e.i, e.j);
    if (!seen.emplace(e.i, e.j).second) throw ValidationError(where.str() + ": duplicate edge");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.weight;
  return s;
}

double WeightedGraph::total_squared_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.weight * e.weight;
  return s;
}

WeightedGraph table1_graph() {
  return WeightedGraph(7, {{0, 4, 0.73},
                           {0, 5, 0.33},
                           {0, 6, 0.50},
                           {1, 4, 0.69},
                           {1, 5, 0.36},
                           {2, 5, 0.88},
                           {2, 6, 0.58},
                           {3, 5, 0.67},
                           {3, 6, 0.43}});
}

ProblemHamiltonian::ProblemHamiltonian(std::size_t num_qubits, std::vector<ZZTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  for (const ZZTerm& t : terms_) {
    if (t.i == t.j || t.i >= num_qubits_ || t.j >= num_qubits_)
      throw ValidationError("invalid ZZ term indices");
  }
}

double ProblemHamiltonian::energy(std::uint64_t index) const {
  double e = 0.0;
  for (const ZZTerm& t : terms_) {
    const bool differ = (((index >> t.i) ^ (index >> t.j)) & 1U) != 0;
    e += differ ? -t.coefficient : t.coefficient;
  }
  return e;
}

std::vector<double> ProblemHamiltonian::diagonal() const {
  if (num_qubits_ > kMaxStateQubits) throw SizeError("Hamiltonian too large to tabulate");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits_;
  std::vector<double> d(dim);
  for (std::uint64_t z = 0; z < dim; ++z) d[z] = energy(z);
  return d;
}

ProblemHamiltonian problem_hamiltonian(const WeightedGraph& graph) {
  std::vector<ZZTerm> terms;
  terms.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) terms.push_back({e.i, e.j, e.weight});
  return ProblemHamiltonian(graph.num_nodes(), std::move(terms));
}

double energy_of_bitstring(const ProblemHamiltonian& h, std::span<const std::uint8_t> bits) {
  if (bits.size() != h.num_qubits()) throw ValidationError("bitstring length mismatch");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] > 1) throw ValidationError("bit values must be 0 or 1");
    index |= std::uint64_t{bits[k]} << k;
  }
  return h.energy(index);
}

double exact_expectation(const StateVector& state, const ProblemHamiltonian& h) {
  if (state.num_qubits() != h.num_qubits()) throw SizeError("state/Hamiltonian size mismatch");
  double e = 0.0;
  for (std::uint64_t z = 0; z < state.dimension(); ++z) {
    const double w = std::norm(state[z]);
    if (w != 0.0) e += w * h.energy(z);
  }
  return e;
}

double exact_expectation(const DensityMatrix& rho, const ProblemHamiltonian& h) {
  if (rho.num_qubits() != h.num_qubits()) throw SizeError("state/Hamiltonian size mismatch");
  double e = 0.0;
  for (std::uint64_t z = 0; z < rho.dimension(); ++z) e += rho(z, z).real() * h.energy(z);
  return e;
}

GroundStates brute_force_ground(const WeightedGraph& graph) {
  if (graph.num_nodes() > kMaxStateQubits)
    throw SizeError("brute force limited to 24 nodes");
  const ProblemHamiltonian h = problem_hamiltonian(graph);
  const std::uint64_t dim = std::uint64_t{1} << graph.num_nodes();
  constexpr double kTie = 1e-9;
  GroundStates best{h.energy(0), {0}};
  for (std::uint64_t z = 1; z < dim; ++z) {
    const double e = h.energy(z);
    if (e < best.energy - kTie) {
      best.energy = e;
      best.optima.assign(1, z);
    } else if (e <= best.energy + kTie) {
      best.optima.push_back(z);
      best.energy = std::min(best.energy, e);
    }
  }
  return best;
}

double cut_value(const WeightedGraph& graph, std::uint64_t index) {
  double cut = 0.0;
  for (const Edge& e : graph.edges())
    if ((((index >> e.i) ^ (index >> e.j)) & 1U) != 0) cut += e.weight;
  return cut;
}

std::string bitstring(std::uint64_t index, std::size_t num_nodes) {
  std::string s(num_nodes, '0');
  for (std::size_t k = 0; k < num_nodes; ++k)
    if ((index >> k) & 1U) s[k] = '1';
  return s;
}

std::string partition_string(std::uint64_t index, std::size_t num_nodes) {
  const bool zero_side = (index & 1U) != 0;
  std::ostringstream a, b;
  bool first_a = true, first_b = true;
  for (std::size_t k = 0; k < num_nodes; ++k) {
    const bool same = (((index >> k) & 1U) != 0) == zero_side;
    auto& out = same ? a : b;
    bool& first = same ? first_a : first_b;
    if (!first) out << ',';
    out << k;
    first = false;
  }
  return "{" + a.str() + "}|{" + b.str() + "}";
}

}  // namespace nqaoa
