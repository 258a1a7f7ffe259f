// Copyright 2026 The zipcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZIPCOVER_SYNTHESIS_HPP_
#define ZIPCOVER_SYNTHESIS_HPP_

#include <map>
#include <string>

#include "zipcover/cover.hpp"
#include "zipcover/filter.hpp"

namespace zipcover {

struct SynthesisResult {
  Filter minimized;
  // original state id -> merged state id (the canonically least clique
  // containing the state)
  std::map<std::string, std::string> state_map;
};

// Folds a zipper-satisfying clique cover of the compatibility graph
// back into a deterministic filter: one state per clique, the clique's
// shared output, and transitions targeting the least clique containing
// all y-children of the source clique.  When no single clique holds
// the whole child set -- pairwise constraints promise pairwise
// co-coverage only -- the child of the least member decides the
// target, and the mandatory output-simulation check at the end keeps
// the construction sound: a cover that fails verification raises
// DomainError with a witness sequence instead of returning.
SynthesisResult synthesize(const Filter& f, const CliqueCover& cover);

}  // namespace zipcover

#endif  // ZIPCOVER_SYNTHESIS_HPP_
