#include "hmkit/candidates.hpp"

namespace hmkit {

MuCandidate diagonal_candidate() {
  return MuCandidate{"diagonal", [](const HmFn2& F) { return diagonal_flatten(F); }};
}

MuCandidate constant_left_candidate() {
  return MuCandidate{"constant-left",
                     [](const HmFn2& F) { return HmFn(F.space, F.fn.values().front()); }};
}

MuCandidate remap_last_candidate() {
  return MuCandidate{"remap-last", [](const HmFn2& F) {
                       RawPieces<Point> raw = flatten_diagonal(F.fn).raw();
                       raw.values.back() = Point{0};
                       return HmFn(F.space, canonicalize(std::move(raw)));
                     }};
}

std::vector<std::string> candidate_names() { return {"diagonal", "constant-left", "remap-last"}; }

std::optional<MuCandidate> find_candidate(const std::string& name) {
  if (name == "diagonal") return diagonal_candidate();
  if (name == "constant-left") return constant_left_candidate();
  if (name == "remap-last") return remap_last_candidate();
  return std::nullopt;
}

}  // namespace hmkit
