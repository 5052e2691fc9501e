// Copyright 2026 The FTFP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTFP_ROUNDING_H_
#define FTFP_ROUNDING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftfp/instance.h"
#include "ftfp/integral_solution.h"
#include "ftfp/relaxation.h"
#include "ftfp/rng.h"

namespace ftfp {

// The rounding stage works on a complete, tight fractional solution
// (x_ij in {0, y_i}, sum_i x_ij = r_j), normally the output of MakeComplete.
// F_j denotes the facilities with x_ij > 0.

// Openings scaled by gamma and the min-cost reassignment inside F_j.
struct ScaledSolution {
  double gamma = 1;
  int num_facilities = 0;
  int num_clients = 0;
  std::vector<double> y_bar;
  std::vector<double> x_bar;  // client-major

  // Per client: F_j sorted by (distance, index), and the number of leading
  // entries of that order that make up the close set. The last close
  // facility may be used partially (x_bar < y_bar); its remainder belongs
  // to the distant set.
  std::vector<std::vector<int>> order;
  std::vector<int> close_count;
  std::vector<double> close_volume;    // = r_j
  std::vector<double> distant_volume;  // = r_j (gamma - 1)
  std::vector<double> avg_close;       // D_av^C(j)
  std::vector<double> avg_distant;     // D_av^D(j), 0 if the set is empty
  std::vector<double> max_close;       // D_max^C(j)
  std::vector<double> client_cost;     // sum_i c_ij x_bar_ij

  double XBar(int j, int i) const { return x_bar[static_cast<size_t>(j) * num_facilities + i]; }
};

// gamma must lie in (1, 3].
ScaledSolution ScaleAndReassign(const Instance& inst, const FractionalSolution& fs, double gamma);

// Partition of F_j (unscaled volumes) by the close sets of the gamma grid
// gamma_l = 1 + 2(n - l)/n: level l < n holds the volume between r_j/gamma_{l-1}
// and r_j/gamma_l (with 1/gamma_0 = 0), level n holds the rest up to r_j.
struct ClientLevels {
  std::vector<double> volume;        // index l - 1
  std::vector<double> avg_distance;  // c_l(j); 0 for an empty level
  std::vector<double> max_distance;  // largest distance with mass in the prefix up to level l
};
std::vector<ClientLevels> PartitionLevels(const Instance& inst, const FractionalSolution& fs, int n);

// A piece is a slice of a facility row's scaled opening. Pieces never
// exceed 1, so each stands for at most one copy.
struct Piece {
  int facility = 0;
  double value = 0;
};

struct Cluster {
  int center = 0;
  int residual = 0;              // r_center when the center was selected
  std::vector<int> pieces;       // CP(center)
  std::vector<int> members;      // N(center)
};

struct ClusterSet {
  std::vector<Piece> pieces;
  std::vector<Cluster> clusters;
  std::vector<double> radius;      // q_j = D_max^C(j)
  std::vector<int> cluster_of;     // cluster that client j is the center or a member of
  std::vector<char> is_center;
  // Initial close set F_j^C of each client, as pieces.
  std::vector<std::vector<int>> close_pieces;
};

// Cuts every scaled opening into pieces at integer points and at each
// client's close-set boundary, then runs the clustering loop: pick the
// active client of smallest radius (lowest index on ties), reduce every
// overlapping neighbour by the rounded-up shared volume and shrink its
// proposal to the nearest remaining volume; repeat until no requirement is
// left.
ClusterSet BuildClusters(const Instance& inst, const ScaledSolution& scaled);

// Every member j of a cluster sees every facility of that cluster within
// 3 * D_max^C(j); also checks q_center <= q_member and piece disjointness.
std::optional<std::string> CheckClusterSet(const Instance& inst, const ScaledSolution& scaled,
                                           const ClusterSet& clusters, double tol = 1e-9);

// Everything about A(gamma) that does not depend on the random seed.
struct GammaPlan {
  ScaledSolution scaled;
  ClusterSet clusters;
  std::vector<int> leftover;                 // pieces outside clusters, in rounding order
  std::vector<std::vector<int>> by_distance; // all facility rows per client
  std::vector<int> repair_target;            // nearest row with positive opening
};
GammaPlan PlanGamma(const Instance& inst, const FractionalSolution& fs, double gamma);

// Rounded copy count per facility row. Cluster proposals are rounded first
// in creation order, then the remaining pieces.
std::vector<int> RoundOpenings(const GammaPlan& plan, Rng& rng);

// Opens extra copies at a client's nearest opened-in-the-LP facility until
// every client can reach r_j copies. Returns the number of copies added.
int RepairOpenings(const Instance& inst, const GammaPlan& plan, std::vector<int>& open_count);

// Connects every client to its r_j nearest open copies. Throws
// NumericalError if some client cannot be served.
IntegralSolution ConnectClients(const Instance& inst, const std::vector<int>& open_count);
IntegralSolution ConnectClients(const Instance& inst, const std::vector<int>& open_count,
                                const std::vector<std::vector<int>>& by_distance);

// Closes open copies that no client is connected to and updates the cost.
void CloseUnusedCopies(const Instance& inst, IntegralSolution& sol);

// One run of A(gamma): plan, round, repair, connect, close unused copies.
IntegralSolution RunSingleGamma(const Instance& inst, const FractionalSolution& fs, double gamma, Rng& rng);
IntegralSolution RunPlannedGamma(const Instance& inst, const GammaPlan& plan, Rng& rng);

struct GammaStats {
  int index = 0;  // l
  double gamma = 0;
  int runs = 0;
  double mean_cost = 0;
  double min_cost = 0;
  int repaired_runs = 0;
};

struct Algorithm1Result {
  IntegralSolution best;
  int best_index = 0;
  double best_gamma = 0;
  int best_trial = 0;
  std::vector<GammaStats> per_gamma;
  int total_runs = 0;
  int repaired_runs = 0;
};

// Plans for every grid point gamma_l = 1 + 2(n - l)/n, l = 1..n-1.
std::vector<GammaPlan> PlanAlgorithm1(const Instance& inst, const FractionalSolution& fs, int n);

// Runs A(gamma_l) for l = 1..n-1, `trials` times each with the stream
// DeriveSeed(seed, l, t), and keeps the cheapest solution (first on ties).
Algorithm1Result RunAlgorithm1(const Instance& inst, const FractionalSolution& fs, int n, int trials,
                               uint64_t seed);
Algorithm1Result RunAlgorithm1(const Instance& inst, const std::vector<GammaPlan>& plans, int trials,
                               uint64_t seed);

// Expected connection-cost estimate for a client that is not a cluster
// center under A(gamma_k) on the grid of size n:
//   sum_l c_l(j) e1(k, l) + 3 D_max^k(j) e3(k),
// e1(k, l) = h(gamma_k vol(F_j^{C_l}), r_j) - h(gamma_k vol(F_j^{C_{l-1}}), r_j),
// e3(k) = r_j - h(gamma_k r_j, r_j), summed over all n levels.
std::vector<double> ConnectionCostBounds(const Instance& inst, const FractionalSolution& fs, int n, int k);

}  // namespace ftfp

#endif  // FTFP_ROUNDING_H_
