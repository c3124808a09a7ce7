#pragma once

#include "flagpath/bijection.hpp"
#include "flagpath/flag.hpp"

namespace flagpath {

struct FlagPair {
  Flag first;
  Flag second;
};

/// Builds an explicit pair of full flags over F_q^n whose distance vector
/// is v, extending one dimension at a time. Witness vectors are always the
/// lexicographically first ones satisfying the membership conditions of
/// the current step, so the output is deterministic in (v, q).
/// Requires n >= 2 and q prime.
FlagPair realize(const DistanceVector& v, std::uint32_t q);

/// True iff the pair's distance vector, recomputed from scratch via the
/// subspace metrics, equals v.
bool verify_pair(const FlagPair& p, const DistanceVector& v);

}  // namespace flagpath
