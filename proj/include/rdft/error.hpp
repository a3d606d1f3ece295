/*
 * Copyright 2026 The rdft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RDFT_ERROR_HPP
#define RDFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rdft {

enum class ErrorCode {
  kInvalidArgument = 1,  // precondition on N, a, lambda, ... violated
  kDomain = 2,           // mathematically undefined input (zero function, Im tau <= 0)
  kNumerical = 3,        // a numerical check failed (collision, residual, degeneracy)
  kParse = 4,            // malformed JSON / CSV input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kInvalidArgument, what);
}

}  // namespace rdft

#endif  // RDFT_ERROR_HPP
