// Copyright 2026 The matchcf Authors
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

#ifndef MATCHCF_EXEC_HPP
#define MATCHCF_EXEC_HPP

namespace matchcf {

// Selects between the OpenMP kernels and their serial reference
// counterparts. Both must produce identical results; the serial path exists
// so tests can pin the parallel one down and benchmarks can compare them.
enum class Exec {
  serial,
  parallel,
};

}  // namespace matchcf

#endif  // MATCHCF_EXEC_HPP
