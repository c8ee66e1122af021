"""Drive the HTTP JSON API end to end.

Starts the service on an ephemeral port in a background thread, replays the
nine-cycle press through POST /press, reduces the D(5,3) example through
POST /reduce, and asks POST /equivalent for the isomorphism verdict.
"""

import json
import threading
import urllib.request

from voganpress import service

server = service.make_server("127.0.0.1", 0)
thread = threading.Thread(target=server.serve_forever, daemon=True)
thread.start()
host, port = server.server_address[:2]
base = f"http://{host}:{port}"
print(f"serving on {base}")


def get(path):
    with urllib.request.urlopen(base + path) as resp:
        return json.loads(resp.read())


def post(path, body):
    req = urllib.request.Request(
        base + path,
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


print("families:", [f["family"] for f in get("/families")["families"]])

nine_cycle = {"family": "SL", "params": {"m": 4, "n": 3}}
state = [1, 2, 3, 4, 6]
for vertex in (2, 4, 3):
    out = post("/press", {**nine_cycle, "circling": state, "vertex": vertex})
    state = out["circling"]["circled"]
    print(f"press {vertex} -> {state}, admissible={out['admissible']}, "
          f"pressable={out['pressable']}")

d53 = {"family": "D", "params": {"m": 5, "n": 3}}
print("reduce {2,4,9}:", post("/reduce", {**d53, "circling": [2, 4, 9]}))
print("equivalent {2,4,9} vs {1,4,9}:",
      post("/equivalent", {**d53, "c1": [2, 4, 9], "c2": [1, 4, 9]}))

server.shutdown()
server.server_close()
