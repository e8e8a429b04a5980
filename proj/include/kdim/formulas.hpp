#pragma once

#include <string>
#include <vector>

#include "kdim/graph.hpp"

namespace kdim {

/// A closed-form dim_k value together with the case of the formula that fired.
struct FamilyValue {
  std::string family;
  std::vector<int> params;
  int k = 1;
  int value = 0;
  std::string branch;
};

FamilyValue dim_k_path(int n, int k);
FamilyValue dim_k_cycle(int n, int k);
/// Wheel C_n + K_1; independent of k.
FamilyValue dim_k_wheel(int n, int k);
/// Fan P_n + K_1; independent of k.
FamilyValue dim_k_fan(int n, int k);
FamilyValue dim_k_multipartite(const std::vector<int>& parts, int k);
FamilyValue dim_k_complete(int n);
FamilyValue dim_k_petersen();

/// Graphs at the two ends of the dim_k range, plus the n-2 families.
struct ExtremeClass {
  enum class Kind { DimOne, NMinusOne, NMinusTwo, Other };
  enum class Family { None, CompleteBipartite, CliqueJoinIndependent, CliqueJoinK1UnionClique, P4Special };

  Kind kind = Kind::Other;
  Family family = Family::None;
  int path_order = 0;  ///< set for DimOne
  int s = 0;           ///< join parameters for NMinusTwo
  int t = 0;

  friend bool operator==(const ExtremeClass&, const ExtremeClass&) = default;
};

std::string to_string(ExtremeClass::Kind kind);
std::string to_string(ExtremeClass::Family family);

/**
 * Structural classification by dim_k extremes, in polynomial time.
 *
 * DimOne: a path on at most k+2 vertices. NMinusOne: complete. NMinusTwo
 * (n >= 4): K_{s,t}, K_s + complement(K_t) with t >= 2, K_s + (K_1 u K_t),
 * or P_4 when k = 1. Paths are tested first, so K_2 reports DimOne.
 * Throws NotConnected for disconnected g, InputError for n < 2.
 */
ExtremeClass classify_extreme(const Graph& g, int k);

/// The dim_k value implied by a class, or -1 for Other.
int implied_dim(const ExtremeClass& c, int n);

bool is_path_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

}  // namespace kdim
