// Copyright 2026 The leafspace Authors
//
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

#ifndef LEAFSPACE_ENDORDER_HPP_
#define LEAFSPACE_ENDORDER_HPP_

// Cusp counting between positive ends and the linear order it induces.

#include <optional>
#include <string>
#include <vector>

#include "leafspace/model.hpp"
#include "leafspace/paths.hpp"

namespace leafspace {

struct CuspCount {
  int positive = 0;
  int negative = 0;

  int n() const { return positive - negative; }
  int total() const { return positive + negative; }
};

/// Signed cusp count of the broken curve from x1 to x2. Both must be
/// distinct positive ends.
CuspCount cusp_count(const LeafSpace& space, const EndRef& x1, const EndRef& x2);
int n(const LeafSpace& space, const EndRef& x1, const EndRef& x2);

/// Positive ends sorted so that x comes before y iff n(x, y) < 0.
std::vector<EndRef> end_order(const LeafSpace& space);

struct TriangleCheck {
  int n12 = 0;
  int n23 = 0;
  int n13 = 0;
  int delta = 0;  // n13 - (n12 + n23)

  bool holds() const { return delta == 1 || delta == -1; }
};

TriangleCheck triangle_check(const LeafSpace& space, const EndRef& x1, const EndRef& x2,
                             const EndRef& x3);

enum class Curve { C12, C13, C23 };
enum class ProofCase { Case1, Case2, Case3 };
/// Which shared part holds the turning point t of the curve from x1 to x3.
enum class TurningSide { None, Beta1, Beta3 };

std::string to_string(Curve c);
std::string to_string(ProofCase c);
std::string to_string(TurningSide s);

/// Junction traversal identified independently of direction.
struct CuspKey {
  std::string junction;
  std::string a;  // lexicographically smaller member
  std::string b;
  friend auto operator<=>(const CuspKey&, const CuspKey&) = default;
};
CuspKey key_of(const Cusp& c);

/// Common part of two broken curves, computed on the elements of the
/// incidence tree.
struct SharedPart {
  std::vector<std::string> vertices;  // sorted
  std::vector<std::string> edges;     // sorted
  std::vector<Cusp> cusps;            // oriented as in the reference curve
};

struct SpecialCusp {
  Cusp cusp;
  Curve owner;
};

struct TripleDecomposition {
  BrokenPath alpha12;
  BrokenPath alpha13;
  BrokenPath alpha23;
  SharedPart beta1;  // alpha12 ∩ alpha13, oriented along alpha13
  SharedPart beta2;  // alpha12 ∩ alpha23, oriented along alpha12
  SharedPart beta3;  // alpha13 ∩ alpha23, oriented along alpha13
  std::vector<SpecialCusp> special;
  ProofCase proof_case = ProofCase::Case1;
  TurningSide turning_side = TurningSide::None;
  // The junction where the three curves part ways, when there is one.
  std::optional<std::string> center;
};

TripleDecomposition triple_decompose(const LeafSpace& space, const EndRef& x1, const EndRef& x2,
                                     const EndRef& x3);

struct UnicuspPair {
  EndRef x1;
  EndRef x2;
  Cusp cusp;
};

/// Least pair of positive ends (by name) whose broken curve has exactly
/// one cusp. Its two member points are the candidates for a point fixed
/// by every element that fixes all positive ends.
std::optional<UnicuspPair> find_unicusp_pair(const LeafSpace& space);

/// All pairwise n values between positive ends, indexed like
/// ends(space).positive. Diagonal entries are zero.
std::vector<std::vector<int>> n_matrix(const LeafSpace& space);

}  // namespace leafspace

#endif  // LEAFSPACE_ENDORDER_HPP_
