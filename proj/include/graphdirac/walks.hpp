#pragma once

#include "graphdirac/graph.hpp"
#include "graphdirac/matrix.hpp"

#include <string>
#include <vector>

namespace graphdirac {

enum class WalkTag { vertex, edge };

struct WalkElement {
    WalkTag tag = WalkTag::vertex;
    int index = 0;

    bool operator==(const WalkElement&) const = default;
};

/// Alternating vertex-edge walk with a +-1 sign: each step contributes -1
/// when its edge starts at its vertex and +1 when the edge ends there.
struct SignedWalk {
    std::vector<WalkElement> steps; // length k+1 for a length-k walk
    int sign = 1;
};

/// Sign of a single step between an incident vertex/edge pair, in either
/// direction. Throws on non-incident or same-tag pairs.
int step_sign(const OrientedGraph& g, WalkElement a, WalkElement b);

/// All length-k walks from `from` to `to`, depth-first with incidences
/// explored in ascending index order (deterministic listing).
std::vector<SignedWalk> enumerate_signed_walks(const OrientedGraph& g, WalkElement from,
                                               WalkElement to, int k);

/// k-th power of the vertex-edge block operator over exact integers; entry
/// (i, j) is the signed count of length-k walks i -> j.
IntMatrix walk_count_matrix(const OrientedGraph& g, int k);

/// "v1 -> e2 -> v3 -> e1  sgn=-1" (indices rendered 1-based).
std::string walk_to_string(const SignedWalk& walk);

} // namespace graphdirac
