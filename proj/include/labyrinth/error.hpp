// Copyright 2026 The Labyrinth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LABYRINTH_ERROR_HPP_
#define LABYRINTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace labyrinth {

enum class ErrorCode {
  kInvalidArgument,
  // grid_graph
  kUnsatisfiable,
  // solver
  kNoPath,
  kCapExceeded,
  kAtTarget,
  // tasks
  kDegenerate,
  kNoSharedTile,
  kNoKeyCandidate,
  kNeedsBraiding,
  kNoUniqueTiles,
  kInvalidPlacement,
  // env / observe
  kEpisodeOver,
  kSizeTooSmall,
  // config_io
  kBadHeader,
  kBadGeometry,
  kBadTiles,
  kMutualExclusion,
  kIo,
  // datagen
  kExhausted,
  kEmptyInput,
  kBadDistribution,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can tell usage problems from data problems.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message)
      : Error(code, "line " + std::to_string(line) +
                        (column > 0 ? ", column " + std::to_string(column)
                                    : std::string()) +
                        ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace labyrinth

#endif  // LABYRINTH_ERROR_HPP_
