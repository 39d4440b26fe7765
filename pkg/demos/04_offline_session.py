"""
A whole session, rendered offline
=================================

The engine that drives the live service also runs headless: feed it a
head-pose trace (JSON Lines of t/x/y/z/yaw) and it produces the exact
audio and event log a visitor would have experienced. This script
generates a lawn-mower walk across the space, renders two minutes, and
summarizes what the walk ran into. Equivalent CLI:

    bubble-orchestra demo-trace --out walk.jsonl
    bubble-orchestra simulate --trace walk.jsonl --duration 120 \
        --out session.wav --events events.jsonl
"""

from pathlib import Path

from bubble_orchestra import (
    demo_trace,
    dump_trace,
    parse_config,
    read_events,
    render_session_files,
)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# 1. A deterministic world and a deterministic walk.
config = parse_config('{"seed": 2026}')
trace = demo_trace(config.width, config.depth, config.altitude, speed=0.6)
trace_path = OUT / "walk.jsonl"
trace_path.write_text(dump_trace(trace))
print(f"walk: {trace.times[-1]:.0f} s over {len(trace.times)} waypoints "
      f"-> {trace_path}")

# 2. Render 120 s of the session to disk.
wav_path = OUT / "session.wav"
events_path = OUT / "events.jsonl"
nbytes, nevents = render_session_files(
    config, trace, 120.0, str(wav_path), str(events_path), seed=2026,
)
print(f"audio:  {wav_path} ({nbytes / 1e6:.1f} MB)")
print(f"events: {events_path} ({nevents} events)")
print()

# 3. The musical timeline: which chords the walk brushed, and when.
events = read_events(events_path.read_text())
print("first encounters:")
seen = set()
for e in events:
    if e.kind == "enter" and e.bubble_id not in seen:
        seen.add(e.bubble_id)
        print(f"  {e.t:7.2f} s  bubble {e.bubble_id}  {e.chord}")
dwells = {}
entered = {}
for e in events:
    if e.kind == "enter":
        entered[e.bubble_id] = e.t
    elif e.kind == "exit" and e.bubble_id in entered:
        dwells.setdefault(e.bubble_id, 0.0)
        dwells[e.bubble_id] += e.t - entered.pop(e.bubble_id)
total = sum(dwells.values())
print(f"\ntime inside bubbles: {total:.1f} s of 120 s "
      f"({100 * total / 120:.0f}%), {len(seen)} of 10 bubbles visited")
