// Copyright 2026 The adaptpf Authors
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

#include "adaptpf/adaptive.hpp"
#include "adaptpf/errors.hpp"
#include "adaptpf/evolution.hpp"
#include "adaptpf/krylov.hpp"
#include "adaptpf/models_io.hpp"
#include "adaptpf/pauli.hpp"
#include "adaptpf/statevector.hpp"
