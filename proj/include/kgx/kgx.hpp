// Copyright 2026 The kgx Authors.
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

#ifndef KGX_KGX_HPP_
#define KGX_KGX_HPP_

#include "kgx/chunker.hpp"
#include "kgx/config.hpp"
#include "kgx/coref.hpp"
#include "kgx/document.hpp"
#include "kgx/enricher.hpp"
#include "kgx/error.hpp"
#include "kgx/export.hpp"
#include "kgx/graph.hpp"
#include "kgx/interchange.hpp"
#include "kgx/pipeline.hpp"
#include "kgx/similarity.hpp"
#include "kgx/stopwords.hpp"
#include "kgx/text_clean.hpp"
#include "kgx/triples.hpp"
#include "kgx/tsv.hpp"

#endif  // KGX_KGX_HPP_
