#pragma once

#include <cstdint>

#include "strand.hpp"

namespace hp {

struct LiftResult {
    Strand lifted;  // over the quad alphabet, length 2 * |source|
    int64_t mid;    // source midpoint index
};

/// The unique index m with s[m-1 .. m+2] = "1100" (the 11.inv pattern).
/// Throws MidNotFound / MidNotUnique.
int64_t find_mid(const Strand& s);

/// Interleaves the fresh pair: positions up to mid become 2.s[i], positions
/// after it become s[i].inv(2). Distances under Original semantics on lifted
/// strands equal Modified-semantics distances on the sources.
LiftResult lift(const Strand& s);

}  // namespace hp
