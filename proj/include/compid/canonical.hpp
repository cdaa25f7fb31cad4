#pragma once

#include <cstdint>
#include <string>

#include "compid/graph.hpp"

namespace compid {

/// Canonical byte string of the orbit of `g` under permutations of vertices
/// 2..n (vertex 1 fixed): the lexicographically smallest encoding
/// [n, s1, t1, s2, t2, ...] of the sorted relabelled edge list.
std::string canonical_form(const CompartmentGraph& g);

/// Platform-independent 64-bit FNV-1a hash of a byte string.
std::uint64_t stable_hash(const std::string& bytes);

/// Number of labelled graphs in the orbit of `g` (the (n-1)! permutations
/// divided by the stabilizer size).
std::uint64_t orbit_size(const CompartmentGraph& g);

}  // namespace compid
