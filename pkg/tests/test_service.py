"""FastAPI endpoints and document schemas."""

import json

import pytest
from fastapi.testclient import TestClient

from newtonsing.service import create_app
from newtonsing.service.handlers import analyze, deform, paths
from newtonsing.service.schemas import (AnalysisDocument, AnalyzeRequest,
                                        DeformRequest, PathsRequest)


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


REQUIRED_KEYS = {"input", "n", "vertices", "facets", "newton_number",
                 "nondegenerate", "lojasiewicz", "reports", "warnings"}

FACET_KEYS = {"vertices", "normal", "offset", "intercepts", "m",
              "exceptional_for", "proximate_for"}


def test_analyze_endpoint(client):
    resp = client.post("/analyze", json={"poly": "x*z+y*z+y^3", "n": 3})
    assert resp.status_code == 200
    doc = resp.json()
    assert REQUIRED_KEYS <= set(doc)
    assert doc["lojasiewicz"]["value"] == "2"
    assert doc["lojasiewicz"]["method"] == "SegmentCase"
    assert doc["nondegenerate"] is True
    assert doc["newton_number"]["value"] == 2
    facet, = doc["facets"]
    assert FACET_KEYS <= set(facet)
    assert facet["exceptional_for"] == ["z"]
    assert facet["proximate_for"] == ["x", "y"]
    assert facet["intercepts"] == {"x": "3", "y": "3", "z": "3/2"}


def test_analyze_generic(client):
    resp = client.post("/analyze", json={"poly": "x^2+t*y^2+y^3", "n": 2})
    assert resp.status_code == 200
    assert resp.json()["lojasiewicz"]["value"] == "1"


def test_analyze_degenerate(client):
    resp = client.post("/analyze", json={"poly": "x^2+2*x*y+y^2", "n": 2})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["nondegenerate"] is False
    assert doc["lojasiewicz"] is None
    assert any("degenerate" in w for w in doc["warnings"])


def test_analyze_parse_error(client):
    resp = client.post("/analyze", json={"poly": "x^2 + w", "n": 2})
    assert resp.status_code == 400
    detail = resp.json()["detail"]
    assert detail["position"] == 6


def test_deform_endpoint(client):
    resp = client.post("/deform", json={
        "poly": "x^3+x*y^2+z^2", "alpha": [0, 4, 0]})
    assert resp.status_code == 200
    doc = resp.json()
    report, = doc["reports"]
    assert report["mu_constant"] is True
    assert report["L0"]["value"] == "2"
    assert report["Lt"]["value"] == "2"
    assert report["main_theorem_holds"] is True
    assert doc["summary"]["l_violations"] == 0


def test_deform_requires_one_mode(client):
    resp = client.post("/deform", json={"poly": "x^3+x*y^2+z^2"})
    assert resp.status_code == 422


def test_paths_endpoint(client):
    resp = client.post("/paths", json={
        "poly": "x*y^5+x^8", "n": 2, "max_weight": 16})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["ratio"] == "7"
    assert doc["formula"] == "7"
    assert doc["attained"] is True


def test_newton_number_endpoint(client):
    resp = client.post("/newton-number", json={"poly": "x^3+x*y^2+z^2", "n": 3})
    assert resp.status_code == 200
    nn = resp.json()["newton_number"]
    assert nn["value"] == 4 and nn["stabilized"] is True


def test_faces_endpoint(client):
    resp = client.post("/faces", json={"poly": "x^2+y^3+z^7", "n": 3})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["vertices"] == [[0, 0, 7], [0, 3, 0], [2, 0, 0]]
    assert len(doc["facets"]) == 1


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_document_roundtrip():
    doc = analyze(AnalyzeRequest(poly="x^2+y^3", n=2, seed=1))
    assert AnalysisDocument.model_validate(doc.model_dump()) == doc
    blob = json.dumps(doc.model_dump(), sort_keys=True)
    assert AnalysisDocument.model_validate(json.loads(blob)) == doc


def test_documents_never_contain_floats():
    doc = deform(DeformRequest(poly="x^3+x*y^2+z^2", alpha=[0, 4, 0], seed=1))

    def walk(node):
        assert not isinstance(node, float)
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(doc.model_dump())
    pdoc = paths(PathsRequest(poly="x^2+y^3", n=2, max_weight=4))
    walk(pdoc.model_dump())


def test_seeded_determinism():
    a = analyze(AnalyzeRequest(poly="x^2+t*y^2+y^3", n=2, seed=7))
    b = analyze(AnalyzeRequest(poly="x^2+t*y^2+y^3", n=2, seed=7))
    assert a == b
