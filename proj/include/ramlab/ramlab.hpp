/*
   Copyright 2026 The ramlab Authors

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

#include "ramlab/rational.hpp"
#include "ramlab/poly.hpp"
#include "ramlab/modp.hpp"
#include "ramlab/factor.hpp"
#include "ramlab/linalg.hpp"
#include "ramlab/numberfield.hpp"
#include "ramlab/order.hpp"
#include "ramlab/prime.hpp"
#include "ramlab/galois.hpp"
#include "ramlab/abhyankar.hpp"
#include "ramlab/report.hpp"
