"""
Walking through a bubble, ears first
====================================

Sound exists only inside a bubble. Cross one on foot and the chord
fades in toward the center (gain sqrt(1 - d/r)), pans with your heading
(constant-power law), and damps by 0.8 when the center falls behind
you. Here the listener walks east through a stationary bubble while
facing north, so the chord should enter on the right, sweep through
center at the closest pass, and leave on the left.
"""

import json
from pathlib import Path

import numpy as np

from bubble_orchestra import (
    SessionTrace,
    init_world,
    parse_config,
    read_wav,
    render_session,
)

SR = 48000
OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# 1. One stationary bubble; find where it landed.
config = parse_config(json.dumps({
    "bubbles": {"count": 1, "speed": 0.0, "chords": ["Cmaj"]},
    "seed": 14,
}))
center = init_world(config, seed=14).positions[0]
print(f"bubble center: ({center[0]:.2f}, {center[1]:.2f}, {center[2]:.2f}), r = 0.4 m")

# 2. Walk east at 0.5 m/s on a line 0.15 m south of the center, facing
#    north (yaw 0), passing straight through the bubble.
y_line = center[1] - 0.15
duration = (3.1 - 0.2) / 0.5
trace = SessionTrace.from_samples([
    (0.0, 0.2, y_line, center[2], 0.0),
    (duration, 3.1, y_line, center[2], 0.0),
])
wav, events = render_session(config, trace, duration)
print("events:", ", ".join(f"{e.kind}@{e.t:.2f}s" for e in events))

# 3. Left/right energy in quarter-second slices: the stereo image
#    swings right -> center -> left as the bubble passes overhead.
samples, _ = read_wav(wav)
slice_n = SR // 4
print()
print(f"{'t (s)':>6s} {'left':>7s} {'right':>7s}  image")
for k in range(samples.shape[0] // slice_n):
    chunk = samples[k * slice_n : (k + 1) * slice_n]
    l_rms = float(np.sqrt(np.mean(chunk[:, 0] ** 2)))
    r_rms = float(np.sqrt(np.mean(chunk[:, 1] ** 2)))
    if l_rms + r_rms < 1e-4:
        continue
    tilt = (r_rms - l_rms) / (r_rms + l_rms)
    pointer = " " * int((tilt + 1) * 10) + "o"
    print(f"{k * 0.25:6.2f} {l_rms:7.4f} {r_rms:7.4f}  L{pointer:<22s}R")

path = OUT / "walkthrough.wav"
path.write_bytes(wav)
print(f"\nwrote {path}")
