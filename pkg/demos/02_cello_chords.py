"""
The ten cello chords
====================

Every bubble carries a chord voiced in the cello register and bowed as
band-limited sawtooths under a stroke envelope: 80 ms attack to full
level, decay to a 0.8 sustain, automatic re-bow every 2.5 s while held,
50 ms release on exit. This script renders each chord as one short
stroke and strings them into a listening gallery.
"""

from pathlib import Path

import numpy as np

from bubble_orchestra import (
    CHORD_VOICINGS,
    chord_to_notes,
    new_voice,
    release_stroke,
    render_voice,
    trigger_stroke,
    write_wav,
)

SR = 48000
OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# 1. The voicing table, with equal-temperament fundamentals.
print(f"{'chord':7s} {'midi notes':16s} fundamentals (Hz)")
for name in CHORD_VOICINGS:
    spec = chord_to_notes(name)
    notes = " ".join(f"{n}" for n in spec.notes)
    freqs = " ".join(f"{f:7.2f}" for f in spec.fundamentals)
    print(f"{name:7s} {notes:16s} {freqs}")
print()

# 2. One bowed stroke per chord: 1.6 s held (attack, decay, sustain),
#    then released into silence, with a short gap before the next.
pieces = []
gap = np.zeros(int(0.25 * SR))
for name in CHORD_VOICINGS:
    voice = trigger_stroke(new_voice(chord_to_notes(name)))
    held, voice = render_voice(voice, int(1.6 * SR), SR)
    voice = release_stroke(voice, sample_rate=SR)
    tail, _ = render_voice(voice, int(0.2 * SR), SR)
    pieces += [held, tail, gap]

mono = np.concatenate(pieces)
mono *= 0.9 / np.max(np.abs(mono))  # four-note chords stack past 1.0; normalize
stereo = np.stack([mono, mono], axis=1)
path = OUT / "chord_gallery.wav"
path.write_bytes(write_wav(stereo, SR))
print(f"wrote {path} ({stereo.shape[0] / SR:.1f} s, "
      f"peak {np.max(np.abs(stereo)):.3f})")
