/*
    Copyright 2026 The corrforms Authors

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

#include "corrforms/arith.hpp"
#include "corrforms/bounds.hpp"
#include "corrforms/correspondence.hpp"
#include "corrforms/decompose.hpp"
#include "corrforms/differential_form.hpp"
#include "corrforms/divisor.hpp"
#include "corrforms/error.hpp"
#include "corrforms/generators.hpp"
#include "corrforms/invariance.hpp"
#include "corrforms/linear_system.hpp"
#include "corrforms/mobius.hpp"
#include "corrforms/polynomial.hpp"
#include "corrforms/ramification.hpp"
#include "corrforms/rational_function.hpp"
#include "corrforms/squarefree.hpp"
#include "corrforms/sweep.hpp"
