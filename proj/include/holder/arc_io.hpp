// Copyright 2026 The Holder Arcs Authors
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

#include <iosfwd>
#include <string>

#include "holder/arc.hpp"

namespace holder::io {

/// Arc files come in two flavours:
///
///   JSON  {"t": [...], "x": [...], "y": [...], "meta": {...}}
///   CSV   header "t,x,y" followed by one sample per line
///
/// Numbers are written with 17 significant digits, so finite doubles
/// round-trip bit-exactly through either format. The parameter column may
/// be named "u" instead of "t" (Hölder parametrizations use it).
enum class ArcFormat { json, csv };

/// CSV when the path ends in ".csv", JSON otherwise.
ArcFormat format_for_path(const std::string& path);

SampledArc read_arc_json(std::istream& in);
SampledArc read_arc_csv(std::istream& in);
SampledArc read_arc(const std::string& path);

void write_arc_json(std::ostream& out, const SampledArc& arc, const std::string& param_key = "t");
void write_arc_csv(std::ostream& out, const SampledArc& arc, const std::string& param_key = "t");
void write_arc(const std::string& path, const SampledArc& arc, const std::string& param_key = "t");

/// "%.17g" formatting used by every CSV writer in the project.
std::string format_number(double value);

} // namespace holder::io
