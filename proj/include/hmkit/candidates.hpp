#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmkit/tower.hpp"

namespace hmkit {

/// F ↦ (s ↦ F(s)(s)). Satisfies the unit, associativity and naturality
/// equations on step functions, and attains every value the proof of
/// non-existence forces.
MuCandidate diagonal_candidate();

/// F ↦ F(0), the outer left value. Breaks the H(η) unit law.
MuCandidate constant_left_candidate();

/// Diagonal flatten, then the last piece is sent to the first point of the
/// space. Breaks naturality under maps that move that point.
MuCandidate remap_last_candidate();

std::vector<std::string> candidate_names();
std::optional<MuCandidate> find_candidate(const std::string& name);

}  // namespace hmkit
