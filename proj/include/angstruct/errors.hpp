/*
angstruct

Copyright 2026 The angstruct Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

/** @file errors.hpp
 *  @brief Exception types shared across modules
 */

#include <stdexcept>
#include <string>

namespace angstruct
{

/** @brief An input violates an operation's precondition */
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/** @brief A self-check of a computed result failed; indicates a bug */
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

}  // namespace angstruct
