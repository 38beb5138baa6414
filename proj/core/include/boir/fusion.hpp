// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "boir/trec_io.hpp"

namespace boir {

/// Combines two runs by summing per-topic z-standardized scores. Scores are
/// standardized over each run's retrieved set for the topic (z = 0 everywhere
/// when the standard deviation is 0); a document missing from one run takes
/// that run-topic's minimum z. Topics present in only one run keep that run's
/// z scores. Output is re-sorted by (score desc, docno asc) and truncated to
/// the longer input ranking's length.
RunFile zsum_fuse(const RunFile& a, const RunFile& b, const std::string& tag);

}  // namespace boir
