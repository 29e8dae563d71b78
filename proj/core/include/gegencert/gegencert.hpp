// Copyright 2026 The gegencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef GEGENCERT_GEGENCERT_HPP_
#define GEGENCERT_GEGENCERT_HPP_

#include "gegencert/asymptotics.hpp"
#include "gegencert/errors.hpp"
#include "gegencert/estimates.hpp"
#include "gegencert/gegenbauer.hpp"
#include "gegencert/induction.hpp"
#include "gegencert/interval.hpp"
#include "gegencert/lemmas.hpp"
#include "gegencert/rational.hpp"
#include "gegencert/report.hpp"
#include "gegencert/roots.hpp"
#include "gegencert/suites.hpp"

#endif  // GEGENCERT_GEGENCERT_HPP_
