"""
The live service, scripted
==========================

The real deployment is `bubble-orchestra serve`: a WebSocket endpoint
at /session that streams PCM16 audio frames and 20 Hz world snapshots
while you steer with JSON messages. This script runs the same ASGI app
in-process and plays a short scripted visit: join, walk, get captured
by a bubble, duck the whole flock down to wheelchair height, and leave
with a recording.

For the real thing:  bubble-orchestra serve --port 8765
(or BUBBLE_ORCH_PORT=8765), then open http://127.0.0.1:8765/ once the
browser UI is built.
"""

import json
import os
import struct
import tempfile
import warnings
from pathlib import Path

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from bubble_orchestra import parse_config
from bubble_orchestra.server import create_app

record_dir = tempfile.mkdtemp(prefix="bubble-orch-demo-")
os.environ["BUBBLE_ORCH_RECORD_DIR"] = record_dir

app = create_app(parse_config('{"seed": 7}'))
client = TestClient(app)


def pump(ws, n_frames):
    """Read until n_frames audio frames pass; return the states seen."""
    states, frames = [], 0
    while frames < n_frames:
        msg = ws.receive()
        if msg.get("bytes") is not None:
            frames += 1
        elif msg.get("text") is not None:
            obj = json.loads(msg["text"])
            if obj.get("type") == "state":
                states.append(obj)
            else:
                print(f"  server: {obj}")
    return states


with client.websocket_connect("/session") as ws:
    # 1. Join: the first state snapshot lists the flock.
    ws.send_text('{"type": "join"}')
    msg = ws.receive()
    first = json.loads(msg["text"])
    print(f"joined: {len(first['bubbles'])} bubbles, listener at "
          f"({first['listener']['x']:.2f}, {first['listener']['y']:.2f})")
    for b in first["bubbles"][:3]:
        print(f"  bubble {b['id']}: {b['chord']:6s} at ({b['x']:.2f}, {b['y']:.2f})")
    print("  ...")

    # 2. Record the visit and walk toward the nearest bubble.
    ws.send_text('{"type": "record", "on": true}')
    target = min(first["bubbles"],
                 key=lambda b: (b["x"] - 1.65) ** 2 + (b["y"] - 1.65) ** 2)
    dx, dy = target["x"] - 1.65, target["y"] - 1.65
    norm = max((dx * dx + dy * dy) ** 0.5, 1e-9)
    ws.send_text(json.dumps({"type": "input",
                             "vx": 1.2 * dx / norm, "vy": 1.2 * dy / norm}))
    print(f"\nwalking toward bubble {target['id']} ({target['chord']})...")
    states = pump(ws, 500)  # ~2.7 s of session time
    inside = [s for s in states if any(b["inside"] for b in s["bubbles"])]
    print(f"  {len(states)} snapshots, inside a bubble in {len(inside)} of them")

    # 3. Accessibility: pull the whole plane down to seated height.
    ws.send_text('{"type": "input", "vx": 0, "vy": 0}')
    ws.send_text('{"type": "set_height", "z": 1.1}')
    states = pump(ws, 250)  # the 1 s ramp fits here
    zs = [s["accessibility_height"] for s in states]
    print(f"\nheight ramp: {zs[0]:.2f} -> {zs[-1]:.2f} m over {len(zs)} snapshots")

    # 4. Stop recording; the server writes trace + events as JSON Lines.
    ws.send_text('{"type": "record", "on": false}')
    pump(ws, 30)

    # 5. Audio is plain PCM16 behind an 8-byte header.
    while True:
        msg = ws.receive()
        if msg.get("bytes") is not None:
            seq, nframes = struct.unpack_from("<II", msg["bytes"], 0)
            print(f"\naudio frame #{seq}: {nframes} frames, "
                  f"{len(msg['bytes'])} bytes")
            break

for p in sorted(Path(record_dir).iterdir()):
    print(f"recorded: {p} ({p.stat().st_size} bytes)")
