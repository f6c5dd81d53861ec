import random
import threading

import pytest
from fastapi.testclient import TestClient

from argfacets import (
    Polarity,
    Semantics,
    facet_report,
    render_framework,
    significance_table,
)
from argfacets.service import create_app

from oracles import make_ex1, random_suite

EX1_TEXT = render_framework(make_ex1(), "apx")


@pytest.fixture
def client():
    return TestClient(create_app())


def upload_ex1(client) -> str:
    r = client.post("/frameworks", json={"text": EX1_TEXT, "format": "apx",
                                         "name": "breakfast"})
    assert r.status_code == 201
    return r.json()["id"]


class TestFrameworks:
    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}

    def test_upload_and_detail(self, client):
        fid = upload_ex1(client)
        listing = client.get("/frameworks").json()
        assert [h["id"] for h in listing] == [fid]
        assert listing[0]["n_arguments"] == 7
        detail = client.get(f"/frameworks/{fid}").json()
        assert detail["arguments"] == list("wsbmtep")
        assert ["w", "s"] in detail["attacks"]

    def test_parse_failure_422(self, client):
        r = client.post("/frameworks", json={"text": "arg(a). junk"})
        assert r.status_code == 422

    def test_malformed_body_400(self, client):
        assert client.post("/frameworks", json={"format": "apx"}).status_code == 400
        assert client.post(
            "/frameworks", json={"text": EX1_TEXT, "format": "nope"}
        ).status_code == 400

    def test_unknown_id_404(self, client):
        assert client.get("/frameworks/zzz").status_code == 404
        assert client.get("/frameworks/zzz/facets?semantics=stab").status_code == 404

    def test_extensions(self, client):
        fid = upload_ex1(client)
        r = client.get(f"/frameworks/{fid}/extensions?semantics=stab").json()
        assert r["exhausted"] is True and r["count"] == 3
        assert sorted(map(sorted, r["extensions"])) == [
            ["b", "p", "s"], ["b", "s", "t"], ["m", "p", "w"],
        ]

    def test_extensions_max_models(self, client):
        fid = upload_ex1(client)
        r = client.get(
            f"/frameworks/{fid}/extensions?semantics=stab&max_models=1"
        ).json()
        assert r["count"] == 1 and r["exhausted"] is False

    def test_bad_semantics_400(self, client):
        fid = upload_ex1(client)
        assert client.get(
            f"/frameworks/{fid}/extensions?semantics=zzz"
        ).status_code == 400


class TestFacetEndpoints:
    def test_facets_match_module(self, client):
        fid = upload_ex1(client)
        body = client.get(f"/frameworks/{fid}/facets?semantics=stab").json()
        ex1 = make_ex1()
        report = facet_report(ex1, Semantics.STABLE)
        assert body["facets"] == list(ex1.names_of(report.facets))
        assert body["cred"] == list(ex1.names_of(report.cred))
        assert body["skep"] == []
        assert body["n_facets"] == 6

    def test_significance_matches_module(self, client):
        fid = upload_ex1(client)
        body = client.get(f"/frameworks/{fid}/significance?semantics=stab").json()
        ex1 = make_ex1()
        entries = significance_table(ex1, Semantics.STABLE)
        assert len(body["entries"]) == len(entries) == 12
        for wire, entry in zip(body["entries"], entries):
            assert wire["argument"] == ex1.name_of(entry.literal.argument)
            assert wire["polarity"] == entry.literal.polarity.value
            assert wire["remaining_facets"] == entry.remaining_facets
            assert wire["score"]["num"] == entry.score.numerator
            assert wire["score"]["den"] == entry.score.denominator

    def test_wire_equivalence_on_random_frameworks(self, client):
        for F in random_suite(5, seed0=400):
            r = client.post("/frameworks", json={
                "text": render_framework(F, "apx"), "format": "apx",
            })
            fid = r.json()["id"]
            for sigma in (Semantics.STABLE, Semantics.PREFERRED):
                body = client.get(
                    f"/frameworks/{fid}/facets?semantics={sigma.value}"
                ).json()
                report = facet_report(F, sigma)
                assert body["facets"] == list(F.names_of(report.facets))
                assert body["skep"] == list(F.names_of(report.skep))


class TestSessions:
    def create_session(self, client) -> tuple[str, str]:
        fid = upload_ex1(client)
        r = client.post("/sessions", json={"framework_id": fid,
                                           "semantics": "stab"})
        assert r.status_code == 201
        return fid, r.json()["id"]

    def test_lifecycle(self, client):
        _, sid = self.create_session(client)
        state = client.get(f"/sessions/{sid}").json()
        assert sorted(state["facets"]) == ["b", "m", "p", "s", "t", "w"]
        assert len(state["significance"]) == 12

        r = client.post(f"/sessions/{sid}/approve",
                        json={"argument": "s", "polarity": "approve"})
        assert r.status_code == 200
        assert sorted(r.json()["facets"]) == ["p", "t"]
        assert r.json()["history"] == [{"argument": "s", "polarity": "approve"}]
        sample = r.json()["sample_extension"]
        assert sample is not None and "s" in sample

        r = client.post(f"/sessions/{sid}/undo")
        assert r.status_code == 200
        assert sorted(r.json()["facets"]) == ["b", "m", "p", "s", "t", "w"]

    def test_approve_non_facet_409(self, client):
        _, sid = self.create_session(client)
        r = client.post(f"/sessions/{sid}/approve",
                        json={"argument": "e", "polarity": "approve"})
        assert r.status_code == 409

    def test_undo_empty_409(self, client):
        _, sid = self.create_session(client)
        assert client.post(f"/sessions/{sid}/undo").status_code == 409

    def test_unknown_argument_400(self, client):
        _, sid = self.create_session(client)
        r = client.post(f"/sessions/{sid}/approve",
                        json={"argument": "zzz", "polarity": "approve"})
        assert r.status_code == 400

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/zzz").status_code == 404
        assert client.post("/sessions/zzz/undo").status_code == 404

    def test_session_for_unknown_framework_404(self, client):
        r = client.post("/sessions", json={"framework_id": "zzz",
                                           "semantics": "stab"})
        assert r.status_code == 404

    def test_sessions_are_isolated(self, client):
        """Interleaved operations on many sessions replay like serial ones."""
        fid = upload_ex1(client)
        sids = []
        for _ in range(10):
            r = client.post("/sessions", json={"framework_id": fid,
                                               "semantics": "stab"})
            sids.append(r.json()["id"])

        rng = random.Random(5)
        plans = {
            sid: rng.choice([["w"], ["s"], ["s", "p"], ["s", "t"], ["m"]])
            for sid in sids
        }
        steps = [(sid, name) for sid, plan in plans.items()
                 for name in plan]
        rng.shuffle(steps)
        progress = {sid: 0 for sid in sids}
        ordered = []
        for sid, _ in steps:
            name = plans[sid][progress[sid]]
            progress[sid] += 1
            ordered.append((sid, name))

        def do(sid, name):
            r = client.post(f"/sessions/{sid}/approve",
                            json={"argument": name, "polarity": "approve"})
            assert r.status_code == 200

        threads = [threading.Thread(target=do, args=step) for step in ordered]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        ex1 = make_ex1()
        for sid in sids:
            state = client.get(f"/sessions/{sid}").json()
            assert [h["argument"] for h in state["history"]] == plans[sid]
            session = None
            from argfacets import session_approve, session_create

            session = session_create(ex1, Semantics.STABLE)
            for name in plans[sid]:
                session = session_approve(session, name, Polarity.APPROVE)
            want = list(ex1.names_of(session.report.facets))
            assert state["facets"] == want


class TestExamplesAndBudget:
    def test_examples_listing(self, tmp_path):
        (tmp_path / "ex1.apx").write_text(EX1_TEXT)
        (tmp_path / "notes.txt").write_text("ignored")
        client = TestClient(create_app(example_dir=tmp_path))
        assert client.get("/examples").json() == [{"name": "ex1.apx"}]
        r = client.post("/examples/ex1.apx/load")
        assert r.status_code == 201
        assert r.json()["n_arguments"] == 7
        assert client.post("/examples/missing.apx/load").status_code == 404

    def test_examples_disabled(self, client):
        assert client.get("/examples").json() == []
        assert client.post("/examples/x.apx/load").status_code == 404

    def test_budget_exceeded_202(self, tmp_path):
        from argfacets import random_af

        client = TestClient(create_app(deadline_s=1e-9))
        big = random_af(400, 0.01, 3)
        r = client.post("/frameworks", json={
            "text": render_framework(big, "apx"), "format": "apx",
        })
        fid = r.json()["id"]
        r = client.get(f"/frameworks/{fid}/facets?semantics=pref")
        assert r.status_code == 202
        body = r.json()
        assert body["status"] == "budget_exceeded"
        assert body["exhausted"] is False
