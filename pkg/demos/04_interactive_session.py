"""Interactive proof construction over the HTTP API, scripted.

The same eight moves a person would click in the browser UI: three
implication introductions, two conjunction introductions, three assumptions.
Uses the in-process test client, so no server needs to be running; point an
httpx client at `veracity serve` for the real thing.

Run:  python demos/04_interactive_session.py
"""

from fastapi.testclient import TestClient

from veracity.service import create_app

client = TestClient(create_app())

CONFIG = """\
assume:
  x ^ P in C1
  y ^ P in C2
  z ^ P in C3
"""

state = client.post(
    "/sessions",
    json={"goal": "p ^ P in C3 -> C2 -> C1 -> (C1 /\\ C2) /\\ C3", "config": CONFIG},
).json()
sid = state["id"]
print(f"session {sid} created; open holes: {[h['id'] for h in state['holes']]}")

while not state["complete"]:
    hole = state["holes"][0]
    rules = client.get(f"/sessions/{sid}/holes/{hole['id']}/rules").json()["candidates"]
    pick = rules[0]
    print(f"  hole {hole['id']:12} goal {hole['goal']['claim']:28} -> {pick['display']}")
    state = client.post(
        f"/sessions/{sid}/holes/{hole['id']}/apply", json={"candidate": pick["id"]}
    ).json()

print(f"\ncomplete after {state['history_depth']} applies; exporting LaTeX:\n")
print(client.get(f"/sessions/{sid}/export", params={"format": "latex", "scale": "0.8"}).text)

# one undo pops the last assumption back open
state = client.post(f"/sessions/{sid}/undo").json()
print("after undo, open holes:", [h["id"] for h in state["holes"]])
