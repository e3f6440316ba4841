import math

import pytest
from fastapi.testclient import TestClient

from catseries.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok", "schema_version": "1"}


class TestEval:
    def test_g_closed_value(self, client):
        resp = client.post("/eval", json={"what": "g", "m": 0, "z": 0.5})
        assert resp.status_code == 200
        body = resp.json()
        assert body["schema_version"] == "1"
        assert body["value"] == pytest.approx(1 + math.pi / 2, rel=1e-14)

    def test_domain_error_maps_to_400(self, client):
        resp = client.post("/eval", json={"what": "g", "m": 0, "z": 1.5})
        assert resp.status_code == 400
        assert resp.json()["error"] == "domain"
        assert "|z| < 1" in resp.json()["detail"]

    def test_validation_error_maps_to_422(self, client):
        resp = client.post("/eval", json={"what": "g", "m": -1, "z": 0.5})
        assert resp.status_code == 422

    def test_gtrig_variant(self, client):
        resp = client.post("/eval", json={"what": "gtrig", "m": 1, "z": math.pi / 3})
        assert resp.json()["value"] == pytest.approx(
            10 + 32 * math.pi / (3 * math.sqrt(3)), rel=1e-13
        )


class TestPoly:
    def test_p1_m2(self, client):
        resp = client.post("/poly", json={"m": 2, "family": "p1"})
        body = resp.json()
        assert body["coefficients"] == ["-1/8", "3/2", "1/2"]
        assert body["variable"] == "z"
        assert body["degree"] == 2

    def test_q_kernel(self, client):
        resp = client.post("/poly", json={"m": 2, "family": "q"})
        body = resp.json()
        assert body["coefficients"] == ["0/1", "1/1", "2/1"]
        assert body["variable"] == "u"


class TestSum:
    def test_power_series(self, client):
        resp = client.post("/sum", json={"kind": "power", "m": 2, "z": 0.25, "tol": 1e-12})
        body = resp.json()
        assert body["converged"] is True
        assert body["value"] == pytest.approx(
            2 / 3 + 8 * math.sqrt(3) * math.pi / 81, abs=1e-10
        )

    def test_lucas_scaled_split(self, client):
        resp = client.post(
            "/sum",
            json={"kind": "fib", "m": 1, "r": 2, "s": 0, "lucas_scaled": True, "tol": 1e-10},
        )
        assert resp.status_code == 200
        assert resp.json()["converged"] is True

    def test_domain_error(self, client):
        resp = client.post("/sum", json={"kind": "power", "m": 1, "z": 1.5})
        assert resp.status_code == 400


class TestFib:
    def test_theorem1(self, client):
        resp = client.post("/fib", json={"theorem": 1, "kind": "L", "s": 1})
        body = resp.json()
        sqrt5 = math.sqrt(5)
        omega = math.sqrt(sqrt5 * (1 + sqrt5) / 2)
        assert body["value"] == pytest.approx(2 + 8 * sqrt5 * math.pi * omega / 25, rel=1e-13)
        assert "pi*omega" in body["expression"]

    def test_theorem3_odd_r(self, client):
        resp = client.post("/fib", json={"theorem": 3, "kind": "F", "s": 0, "r": 3})
        assert resp.status_code == 400


class TestIntegrate:
    def test_g_route(self, client):
        resp = client.post("/integrate", json={"what": "g", "m": 0, "z": 0.5, "order": 64})
        body = resp.json()
        assert body["value"] == pytest.approx(1 + math.pi / 2, abs=1e-11)
        assert body["estimated_error"] >= 0
        assert body["nodes_used"] > 0


class TestMellin:
    def test_value(self, client):
        resp = client.post("/mellin", json={"m": 1, "z": 0.25})
        assert resp.json()["value"] == pytest.approx(2 / 3, rel=1e-6)

    def test_refusal(self, client):
        resp = client.post("/mellin", json={"m": 0, "z": 0.95})
        assert resp.status_code == 400

    def test_convergence_guard_maps_to_422(self, client):
        resp = client.post("/mellin", json={"m": 0, "z": 0.75, "cutoff": 3.0})
        assert resp.status_code == 422
        assert resp.json()["error"] == "convergence"


class TestVerifyEndpoint:
    def test_filtered_run(self, client):
        resp = client.post("/verify", json={"filter": "s6", "format": "csv"})
        body = resp.json()
        assert body["passed"] is True
        assert body["summary"]["total"] >= 3
        assert body["rendered"].splitlines()[0] == (
            "id,lhs,rhs,abs_delta,rel_delta,classification"
        )

    def test_id_glob_filter(self, client):
        resp = client.post("/verify", json={"filter": "thm1-*", "format": "json"})
        assert resp.json()["summary"]["total"] >= 2
