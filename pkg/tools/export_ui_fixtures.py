"""Record live service responses as JSON fixtures for the frontend tests.

Usage: python3 tools/export_ui_fixtures.py
Writes into frontend/test/fixtures/.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from cayrs.service import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures"

FOUR_BAR = {
    "vertices": ["a", "b", "c", "d"],
    "bars": [
        {"u": "a", "v": "b", "length": 2},
        {"u": "b", "v": "c", "length": 6},
        {"u": "a", "v": "d", "length": 3},
        {"u": "d", "v": "c", "length": 4.5},
    ],
    "baseNonedge": ["a", "c"],
}

FAN3 = {
    "vertices": ["a", "b", "u", "v", "w"],
    "bars": [
        {"u": "a", "v": "u", "length": 5},
        {"u": "b", "v": "u", "length": 3},
        {"u": "a", "v": "v", "length": 10},
        {"u": "b", "v": "v", "length": 9.5},
        {"u": "a", "v": "w", "length": 6},
        {"u": "b", "v": "w", "length": 5.51},
    ],
    "baseNonedge": ["a", "b"],
}


def dump(name, payload):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(payload, indent=1))
    print("wrote", OUT / name)


def main():
    client = TestClient(create_app())

    f1 = client.post("/linkages", json=FOUR_BAR).json()
    dump("f1_linkage.json", FOUR_BAR)
    dump("f1_analysis.json", f1)
    fid = f1["id"]
    dump("f1_ccs.json", client.get(f"/linkages/{fid}/ccs").json())
    dump("f1_components.json", client.get(f"/linkages/{fid}/components").json())
    dump(
        "f1_samples.json",
        client.get(f"/linkages/{fid}/components/0/samples", params={"n": 64}).json(),
    )
    dump(
        "f1_realization.json",
        client.get(f"/linkages/{fid}/realization", params={"length": 5, "type": "++"}).json(),
    )
    dump(
        "f1_paths.json",
        client.post(
            f"/linkages/{fid}/path",
            json={"from": {"length": 5, "type": "++"}, "to": {"length": 5, "type": "+-"}},
        ).json(),
    )

    fan = client.post("/linkages", json=FAN3).json()
    dump("fan3_linkage.json", FAN3)
    dump("fan3_analysis.json", fan)
    gid = fan["id"]
    dump("fan3_ccs.json", client.get(f"/linkages/{gid}/ccs").json())
    dump("fan3_components.json", client.get(f"/linkages/{gid}/components").json())
    dump(
        "fan3_samples.json",
        client.get(f"/linkages/{gid}/components/0/samples", params={"n": 32}).json(),
    )
    dump(
        "fan3_curve3d.json",
        client.get(
            f"/linkages/{gid}/components/0/curve3d",
            params={"f1": "a,b", "f2": "u,v", "f3": "u,w", "n": 32},
        ).json(),
    )
    resp = client.post(
        f"/linkages/{gid}/path",
        json={"from": {"length": 5, "type": "+++"}, "to": {"length": 5, "type": "++-"}},
    )
    assert resp.status_code == 422
    dump("fan3_path_not_connected.json", resp.json())


if __name__ == "__main__":
    main()
