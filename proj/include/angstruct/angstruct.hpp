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

/** @file angstruct.hpp
 *  @brief Umbrella header
 */

#include "angstruct/angles.hpp"
#include "angstruct/errors.hpp"
#include "angstruct/existence.hpp"
#include "angstruct/fixtures.hpp"
#include "angstruct/lp.hpp"
#include "angstruct/matrix.hpp"
#include "angstruct/normal.hpp"
#include "angstruct/perturbation.hpp"
#include "angstruct/rational.hpp"
#include "angstruct/triangulation.hpp"
