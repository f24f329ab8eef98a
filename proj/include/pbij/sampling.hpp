// Copyright 2026 The pbij Authors
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


#pragma once

// Seeded samplers for symbolic values, shared by the randomized checks.

#include "pbij/random.hpp"
#include "pbij/set_descriptor.hpp"
#include "pbij/sym_element.hpp"

namespace pbij {

/// Modulus in [1, max_modulus], each residue kept with probability 1/3,
/// up to three added and three removed points below `span`.
SetDescriptor random_descriptor(Rng& rng, Point max_modulus = 12, Point span = 30);

/// An element whose moved points and finite domain lie below `window`:
/// a finite map, or a partial identity on a random descriptor plus moved pairs.
SymElement random_sym_element(Rng& rng, Point window);

}  // namespace pbij
