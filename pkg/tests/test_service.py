import pytest
from fastapi.testclient import TestClient

from surkit import __version__
from surkit.service import main as service_main
from surkit.service import schemas


@pytest.fixture(scope="module")
def client():
    return TestClient(service_main.app)


class TestHealth:
    def test_health(self, client):
        reply = client.get("/health")
        assert reply.status_code == 200
        assert reply.json() == {"status": "ok", "version": __version__}


class TestVerifyEndpoint:
    def test_su3_sweep(self, client):
        reply = client.post("/verify", json={"algebra": "su:3", "trials": 50, "seed": 7})
        assert reply.status_code == 200
        body = reply.json()
        assert body["command"] == "verify"
        assert body["summary"]["all_satisfied"] is True
        assert abs(body["summary"]["min_margin"]) < 1e-9
        assert len(body["results"]) == 51
        assert body["results"][0]["state"] == "saturating"
        assert body["results"][0]["bound_exact"] == "2"

    def test_su2_bound_in_every_report(self, client):
        reply = client.post("/verify", json={"algebra": "su2:j=1", "trials": 20})
        assert reply.status_code == 200
        assert all(r["bound"] == 1.0 for r in reply.json()["results"])

    def test_su11_bound(self, client):
        reply = client.post(
            "/verify", json={"algebra": "su11:kappa=1/2,cutoff=200", "trials": 10}
        )
        assert reply.status_code == 200
        body = reply.json()
        assert body["summary"]["bound"] == 0.5
        assert body["summary"]["bound_exact"] == "1/2"

    def test_bad_algebra_is_422(self, client):
        reply = client.post("/verify", json={"algebra": "so:3", "trials": 1})
        assert reply.status_code == 422

    def test_nonfundamental_irrep_rejected(self, client):
        reply = client.post("/verify", json={"algebra": "su:3:irrep=1,1", "trials": 1})
        assert reply.status_code == 422
        assert "fundamental" in reply.json()["detail"]


class TestMinimizeEndpoint:
    def test_wh_tightness(self, client):
        reply = client.post(
            "/minimize",
            json={"algebra": "wh:cutoff=64", "restarts": 4, "seed": 1},
        )
        assert reply.status_code == 200
        body = reply.json()
        assert abs(body["results"]["best_value"] - 1.0) < 1e-6
        assert body["summary"]["tight"] is True
        assert len(body["results"]["best_state"]) == 64


class TestWitnessEndpoint:
    def test_slater_example(self, client):
        reply = client.post("/witness", json={"n": 3, "particles": 3, "state": "slater"})
        assert reply.status_code == 200
        body = reply.json()
        assert body["results"]["lhs"] == 0.0
        assert body["results"]["rhs"] == -12.0
        assert body["results"]["violated"] is False
        assert body["summary"]["entangled_by_total_variance"] is True

    def test_slater_requires_square_coupling(self, client):
        reply = client.post("/witness", json={"n": 3, "particles": 2, "state": "slater"})
        assert reply.status_code == 422

    def test_product_state_safe(self, client):
        reply = client.post(
            "/witness", json={"n": 3, "particles": 2, "state": "product", "seed": 3}
        )
        body = reply.json()
        assert body["results"]["violated"] is False
        assert body["results"]["total_violated"] is False


class TestIdentitiesEndpoint:
    def test_su4_cartan_sum(self, client):
        reply = client.post("/identities", json={"n": 4, "trials": 50})
        body = reply.json()
        assert body["results"]["cartan_square"] == 1.5
        assert body["summary"]["all_identities_hold"] is True


class TestSampleEndpoint:
    def test_vacuum_quadrature(self, client):
        reply = client.post(
            "/sample",
            json={
                "algebra": "wh:cutoff=40",
                "observable": "x",
                "shots": 2000,
                "seed": 5,
                "include_samples": False,
            },
        )
        assert reply.status_code == 200
        body = reply.json()
        assert body["results"]["exact"] == pytest.approx(0.5, abs=1e-12)
        assert body["results"]["samples"] is None
        assert body["summary"]["within_five_stderr"] is True

    def test_sample_payload_length(self, client):
        reply = client.post(
            "/sample",
            json={"algebra": "su2:j=1/2", "observable": "jx", "state": "basis:1", "shots": 64},
        )
        assert len(reply.json()["results"]["samples"]) == 64

    def test_unknown_observable_is_422(self, client):
        reply = client.post(
            "/sample", json={"algebra": "wh", "observable": "y", "shots": 16}
        )
        assert reply.status_code == 422


class TestTableEndpoint:
    def test_exact_rows(self, client):
        reply = client.post("/table", json={"max_label": 1})
        body = reply.json()
        rows = {(r["n"], tuple(r["label"])): r for r in body["results"]}
        assert rows[(3, (1, 1))]["bound"] == "4"
        assert rows[(3, (1, 1))]["casimir"] == "6"
        assert rows[(4, (1, 0, 0))]["bound"] == "3"
        assert rows[(4, (1, 0, 0))]["casimir"] == "15/4"
        assert rows[(5, (0, 1, 0, 0))]["bound"] == "6"

    def test_row_count(self, client):
        reply = client.post("/table", json={"max_label": 2})
        assert reply.json()["summary"]["rows"] == 3 + 9 + 27 + 81


class TestSchemaRoundTrip:
    def test_verify_response_validates(self, client):
        reply = client.post("/verify", json={"algebra": "su:4", "trials": 5})
        model = schemas.VerifyResponse.model_validate(reply.json())
        assert model.version == __version__
