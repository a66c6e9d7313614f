// Copyright 2026 The Hylos Authors
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

// One-file-per-ELO XML format:
//
//   <elo id="...">
//     <metadata> one element per LOM field; lists hold <item> children </metadata>
//     <paragraph> <title/> <headwords/> <sectionalTitles/> <body>XML</body> </paragraph>
//     <slide> <title/> <bullets/> <body>XML</body>? </slide>?
//     <refs> <ref kind="glossary|bibliography|taxonomy|person" id="..."/>* </refs>
//   </elo>

#include <string>
#include <string_view>

#include "hylos/elo.hpp"
#include "hylos/xml.hpp"

namespace hylos {

xml::Node elo_to_xml(const Elo& elo);
std::string write_elo(const Elo& elo);

// Throws FormatError on a document that does not follow the schema and
// xml::SyntaxError when it is not well-formed.
Elo elo_from_xml(const xml::Node& root);
Elo read_elo(std::string_view text);

}  // namespace hylos
