// Copyright 2026 The Authors.
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

#ifndef INPUTSEL_JSON_IO_H_
#define INPUTSEL_JSON_IO_H_

#include <string>

#include "json.hpp"

#include "inputsel/constraints.h"
#include "inputsel/select.h"
#include "inputsel/structmat.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

using Json = nlohmann::ordered_json;

Json ToJson(const StructuredMatrix& m);
StructuredMatrix StructuredFromJson(const Json& j);

Json ToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

// Constructor kinds are rebuilt from the embedded graph.
Json ToJson(const DescriptorSystem& sys);
DescriptorSystem SystemFromJson(const Json& j);

Json ToJson(const Certificate& c);
Json ToJson(const SelectionResult& r);

Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace inputsel

#endif  // INPUTSEL_JSON_IO_H_
