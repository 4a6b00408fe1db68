#pragma once

// Reference zigzag enumeration that shares no code with the library: it
// works on raw face triples and finds neighbouring faces by linear scan.

#include <array>
#include <string>
#include <vector>

namespace oracle {

using FaceTriple = std::array<std::string, 3>;

// A zigzag as its cyclic vertex walk w0 w1 w2 ..., one pass per step.
using VertexWalk = std::vector<std::string>;

// One walk per zigzag, the reverse orbit dropped.
std::vector<VertexWalk> walk_all_zigzags(const std::vector<FaceTriple>& faces);

// Equal as cyclic sequences, in either direction.
bool same_closed_walk(const VertexWalk& a, const VertexWalk& b);

}  // namespace oracle
