#pragma once

#include <string>

#include "flagpath/bijection.hpp"
#include "flagpath/code.hpp"
#include "flagpath/construct.hpp"

namespace flagpath {

/// Parses a flag-code document:
///
///   { "n": 4, "q": 2, "type": [1,2,3],
///     "flags": [ [ [[1,0,0,0]], [[1,0,0,0],[0,1,0,0]], ... ], ... ] }
///
/// Each flag is a list of generator matrices (rows of integers in [0,q)),
/// one per type dimension; matrices are normalized to RREF on ingest and
/// dimensions are checked against the type afterwards. For the full type a
/// flag may instead be a single (n-1) x n matrix whose leading i rows span
/// the i-th subspace. Throws DocumentError with per-flag diagnostics.
FlagCode parse_flag_code_document(const std::string& json_text);

/// Serializes a code back to document form (canonical RREF bases).
std::string flag_code_document(const FlagCode& code);

/// Runs realize(v, q) and emits the pair as a 2-flag document with an
/// embedded verification block (recomputed distance vector, flag distance,
/// collapse points).
std::string realize_document(const DistanceVector& v, std::uint32_t q);

/// Plain-text analysis report: size, type, minimum distance, minimum
/// distance vectors, projected sizes, disjointness, the distance bound,
/// and for full type the potential vector counts.
std::string analyze_report(const FlagCode& code, bool all_pairs = false);

}  // namespace flagpath
