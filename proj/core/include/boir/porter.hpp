// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace boir {

/// Porter's 1980 suffix-stripping algorithm (the original rule set, without
/// the later "porter2" revisions). Expects a lowercased token; words of
/// length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace boir
