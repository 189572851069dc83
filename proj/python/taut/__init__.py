# Copyright 2026 The taut Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==========================================================================
"""tau-tilting combinatorics of gentle bound quiver algebras."""

import json

from ._taut import (
    Algebra,
    AlgebraError,
    BoundExhausted,
    ConsistencyError,
    Error,
    ExchangeGraph,
    ParseError,
    PreconditionError,
    Reduction,
    check_json,
    exchange_graph,
    reduce,
    validate,
)


def load(path):
    """Parse an algebra file."""
    with open(path, encoding="utf-8") as f:
        return Algebra(f.read())


def check(algebra, property="all", max_letters=8, max_vertices=10000, jobs=1):
    """Reachability reports as dicts, one per property checked."""
    return [json.loads(r) for r in check_json(algebra, property, max_letters, max_vertices, jobs)]


__all__ = [
    "Algebra",
    "AlgebraError",
    "BoundExhausted",
    "ConsistencyError",
    "Error",
    "ExchangeGraph",
    "ParseError",
    "PreconditionError",
    "Reduction",
    "check",
    "exchange_graph",
    "load",
    "reduce",
    "validate",
]
