// SPDX-License-Identifier: Apache-2.0
//
// mmwlink — link budget and channel statistics for UAV-mounted mmWave square-array links
// Copyright (C) 2026 the mmwlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace mmwlink {

// Requested accuracy could not be reached (non-convergent quadrature,
// failed validation run). Maps to CLI exit code 3.
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string &msg) : std::runtime_error(msg) {}
};

// File could not be opened or written. Maps to CLI exit code 4.
struct io_error : std::runtime_error {
    explicit io_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace mmwlink
