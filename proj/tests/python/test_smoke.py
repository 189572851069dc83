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
"""Smoke tests for the Python bindings."""

import json
import os
import pathlib

import pytest

import taut

FIXTURES = pathlib.Path(os.environ.get("TAUT_FIXTURE_DIR", pathlib.Path(__file__).parent.parent / "fixtures"))


def fixture(name):
    return taut.load(FIXTURES / f"{name}.alg")


def test_algebra_round_trip():
    a2 = fixture("a2")
    assert a2.label == "A2"
    assert (a2.num_vertices, a2.num_arrows, a2.dimension) == (2, 1, 3)
    assert a2.is_gentle()
    assert taut.Algebra(a2.to_text()).is_isomorphic(a2)


def test_validate():
    report = taut.validate((FIXTURES / "three_loops.alg").read_text())
    assert not report["gentle"]
    assert report["violations"][0][0] == "G1"
    assert taut.validate((FIXTURES / "a2.alg").read_text()) == {"gentle": True, "violations": [], "dimension": 3}


def test_errors():
    with pytest.raises(taut.ParseError):
        taut.Algebra((FIXTURES / "malformed.alg").read_text())
    with pytest.raises(taut.Error):
        taut.reduce(fixture("a2"), "module q")
    with pytest.raises(taut.PreconditionError):
        taut.reduce(fixture("a2"), "module S1, module S2")


@pytest.mark.parametrize("name,vertices,edges", [("a1", 2, 1), ("a2", 5, 5), ("a3_linear", 14, 21)])
def test_exchange_graph_counts(name, vertices, edges):
    g = taut.exchange_graph(fixture(name))
    assert g.complete and g.status == "complete"
    assert len(g.vertices) == vertices
    assert len(g.edges) == edges
    assert len(g.components()) == 1
    head = json.loads(g.to_jsonl().splitlines()[0])
    assert (head["vertices"], head["edges"]) == (vertices, edges)
    assert g.to_dot().count(" -- ") == edges


def test_truncated_graph():
    g = taut.exchange_graph(fixture("kronecker"), max_letters=4)
    assert not g.complete
    assert g.status == "truncated@4"
    reports = taut.check(fixture("kronecker"), "connected", max_letters=4)
    assert reports[0]["verdict"] == "inconclusive"


def test_reduce():
    r = taut.reduce(fixture("a2"), "module S1")
    assert r.co_rank == 1
    assert r.algebra.num_vertices == 1
    assert len(r.vertex_modules) == 1
    assert taut.reduce(fixture("a2")).algebra.is_isomorphic(fixture("a2"))


def test_check():
    reports = taut.check(fixture("a2"))
    assert len(reports) == 4
    assert all(r["verdict"] == "holds" for r in reports)
    loop = taut.check(fixture("loop"), "tau-reachable")
    assert loop[0]["verdict"] == "fails"
    with pytest.raises(ValueError):
        taut.check(fixture("a2"), "pretty")
