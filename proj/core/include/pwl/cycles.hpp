#pragma once

#include <string>
#include <vector>

#include "pwl/linalg.hpp"
#include "pwl/params.hpp"

namespace pwl {

struct CycleScanEntry {
  std::string sequence;        // itinerary over {L, M, R}, canonical rotation
  int k = 0;                   // length
  EigenPair eig;               // eigenvalues of the composed Jacobian
  bool unit_eigenvalue = false;
  bool admissible = false;     // a nonzero periodic point realizes the itinerary
};

/// Enumerates itineraries of length <= k_max up to cyclic shifts. For each,
/// composes the branch Jacobians and tests for an eigenvalue of +1 via
/// |det(J_k - I)| < tol; a cycle can only exist on the unit eigendirection,
/// so flagged sequences get an admissibility probe: 128 candidate points
/// along that direction (x spanning [-4h, 4h]) are iterated and their
/// branch itineraries compared against the sequence.
///
/// The all-M sequences always carry the unit eigenvalue and are admissible
/// exactly on the fixed-point segment; any other admissible sequence would
/// contradict the generic nonexistence of cycles.
std::vector<CycleScanEntry> cycle_scan(const ModelParams& p, int k_max,
                                       double tol = 1e-8);

}  // namespace pwl
