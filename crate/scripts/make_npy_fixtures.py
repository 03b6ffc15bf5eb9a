#!/usr/bin/env python3
"""Regenerates the .npy interoperability fixtures with numpy."""
import os

import numpy as np

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "cli", "tests", "fixtures")
os.makedirs(OUT, exist_ok=True)

# float32 (H, W, C) with values (r * 100 + c * 10 + k) / 4
h, w, c = 3, 4, 13
r, col, k = np.meshgrid(np.arange(h), np.arange(w), np.arange(c), indexing="ij")
f32 = ((r * 100 + col * 10 + k) / 4).astype("<f4")
np.save(os.path.join(OUT, "ramp_f32.npy"), f32)

# float64 of the same values
np.save(os.path.join(OUT, "ramp_f64.npy"), f32.astype("<f8"))

# uint16 single band (H, W), like a raw Sentinel-2 band
np.save(os.path.join(OUT, "band_u16.npy"), (np.arange(12, dtype="<u2") * 1000).reshape(3, 4))

# Fortran-ordered arrays are not accepted
np.save(os.path.join(OUT, "fortran_f32.npy"), np.asfortranarray(f32))
print("ok", np.__version__)
