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

#ifndef ZIPCOVER_ZIPPER_HPP_
#define ZIPCOVER_ZIPPER_HPP_

#include <array>
#include <string>
#include <vector>

namespace zipcover {

// Determinism-enforcing constraint: whenever a cover clique contains
// both vertices of u_pair, some clique of the cover must contain both
// vertices of w_pair.  Pairs are kept sorted.  The observation that
// generated the constraint is carried for diagnostics only; equality
// and ordering ignore it.
struct ZipperConstraint {
  std::array<std::string, 2> u_pair;
  std::array<std::string, 2> w_pair;
  std::string observation;

  ZipperConstraint() = default;
  ZipperConstraint(std::string u0, std::string u1, std::string w0,
                   std::string w1, std::string obs = "");

  friend bool operator==(const ZipperConstraint& a,
                         const ZipperConstraint& b) {
    return a.u_pair == b.u_pair && a.w_pair == b.w_pair;
  }
  friend bool operator<(const ZipperConstraint& a, const ZipperConstraint& b) {
    if (a.u_pair != b.u_pair) return a.u_pair < b.u_pair;
    return a.w_pair < b.w_pair;
  }
};

// Wire format: [{"u":["s0","s1"],"w":["s2","s3"]},...], pairs sorted,
// list sorted.
std::vector<ZipperConstraint> parse_zippers_json(const std::string& text);
std::string zippers_to_json(const std::vector<ZipperConstraint>& zippers);

// Sorts and removes duplicates (ignoring observations).
void canonicalize_zippers(std::vector<ZipperConstraint>& zippers);

}  // namespace zipcover

#endif  // ZIPCOVER_ZIPPER_HPP_
