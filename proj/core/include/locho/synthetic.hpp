#pragma once

#include <string>
#include <string_view>

#include "locho/geometry.hpp"

namespace locho {

/// Sampled test spaces with known local structure at canonical basepoints.
enum class SpaceKind {
    segment,   // unit segment [0,1] in R^1
    circle,    // unit circle in R^2
    cross2d,   // two crossing unit segments in R^2, singular at the origin
    planes3d,  // two unit squares in R^3 meeting along a segment
    cone2d     // k half-lines of length 1 from the origin in R^2
};

struct SpaceSpec {
    SpaceKind kind = SpaceKind::segment;
    double density = 0.0;  // target sample density eps
    int arms = 3;          // cone2d only
    unsigned seed = 0;     // reserved; the nets are deterministic and jitter-free
};

/// Deterministic eps-net of the specified space: grid / arc-length nets with
/// step <= density, so the coverage radius against the underlying space is at
/// most density (in fact about half of it). Bit-identical across reruns.
PointCloud generate(const SpaceSpec& spec);

/// Expected local-homology signature at a canonical basepoint (singular
/// point, manifold point, boundary point) of the space. These expectations
/// are validated by dense-sample pipeline runs, not asserted as oracles.
/// Throws std::invalid_argument for non-canonical basepoints.
std::string ground_truth_note(const SpaceSpec& spec, const Point& basepoint);

SpaceKind parse_space_kind(std::string_view name);
std::string space_kind_name(SpaceKind kind);

}  // namespace locho
