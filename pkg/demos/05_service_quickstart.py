"""The HTTP API end to end, without leaving the process (TestClient).

For a live server run `cayrs serve --port 8000` and replace the client
with httpx against http://127.0.0.1:8000.
"""

from fastapi.testclient import TestClient

from cayrs.service import create_app

client = TestClient(create_app())

four_bar = {
    "vertices": ["a", "b", "c", "d"],
    "bars": [
        {"u": "a", "v": "b", "length": 2},
        {"u": "b", "v": "c", "length": 6},
        {"u": "a", "v": "d", "length": 3},
        {"u": "d", "v": "c", "length": 4.5},
    ],
    "baseNonedge": ["a", "c"],
}

analysis = client.post("/linkages", json=four_bar).json()
print("analysis:", analysis)
linkage_id = analysis["id"]

print("\nccs:", client.get(f"/linkages/{linkage_id}/ccs").json())
print("\ncomponents:", client.get(f"/linkages/{linkage_id}/components").json())

realization = client.get(
    f"/linkages/{linkage_id}/realization", params={"length": 5, "type": "++"}
).json()
print("\nrealization at (5, ++):", realization["points"])

paths = client.post(
    f"/linkages/{linkage_id}/path",
    json={"from": {"length": 5, "type": "++"}, "to": {"length": 5, "type": "+-"}},
).json()
print(f"\n{len(paths['paths'])} paths between the mirror realizations")

curve = client.get(
    f"/linkages/{linkage_id}/components/0/trace", params={"vertices": "d", "n": 8}
).json()
print("\nshort trace of d:", curve["d"][:4], "...")
