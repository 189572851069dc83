/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Deterministic text renderings of exchange graphs and reports.

#ifndef TAUT_EXPORT_HPP
#define TAUT_EXPORT_HPP

#include <string>

#include "taut/reachability.hpp"

namespace taut {

/// Undirected DOT graph; comment lines carry the algebra, status and counts.
std::string graph_to_dot(const ExchangeGraph& g);
/// One JSON record per line: a header, then vertices, then edges.
std::string graph_to_jsonl(const ExchangeGraph& g);
/// Plain "key: value" header followed by vertex and edge lines.
std::string graph_to_text(const ExchangeGraph& g);

/// A single-line JSON record for a report, sub-reports nested.
std::string report_to_json(const ReachabilityReport& r);

} // namespace taut

#endif // TAUT_EXPORT_HPP
