"""From raw signals to the two streams the generator works on.

Audio becomes a 100-bin log-mel spectrogram at 93.75 frames per second.
Faces become 61 numbers per frame: 51 expression weights, 4 eye weights and
a 6-value head pose, recovered from 2-D landmarks by least squares.

    python3 demos/feature_pipeline.py
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flowtalk import features as ft

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

# -- audio: a two-second rising chirp over a faint noise floor
sr = 24000
t = np.arange(2 * sr) / sr
wave = 0.4 * np.sin(2 * np.pi * (200 * t + 900 * t**2)) + 0.003 * np.random.default_rng(0).standard_normal(t.size)
mel = ft.compute_mel(wave)
print(f"{t.size} samples -> mel {mel.data.shape} (bins x frames) at {mel.frame_rate} fps")

# the loudest bin should climb with the chirp frequency
peak = ft.mel_center_frequencies(ft.MelConfig())[mel.data.argmax(0)]
print("peak band at 0.25 s / 1.75 s: %.0f Hz / %.0f Hz" % (peak[23], peak[164]))

# -- face: render landmarks from known codes, then fit them back
basis = ft.synthetic_basis(68, seed=0)
rng = np.random.default_rng(1)
n = 30
phase = np.linspace(0, 2 * np.pi, n)
pose = np.column_stack([0.1 * np.sin(phase), 0.2 * np.sin(2 * phase), 0.05 * np.cos(phase),
                        0.02 * np.sin(phase), 0.01 * np.cos(phase), np.zeros(n)])
truth = ft.VisualCodes(0.05 * rng.standard_normal((n, 51)), 0.05 * rng.standard_normal((n, 4)), pose, 30.0)
landmarks = ft.render_landmarks(basis, truth)
fit = ft.fit_visual_codes(landmarks, basis, ft.FitOptions(max_iter=50))
print(f"fit {n} frames: worst residual {fit.residual.max():.2e}, "
      f"max pose error {np.abs(fit.pose - truth.pose).max():.2e} rad")

# the generator sees the 30 fps codes resampled onto the mel clock
codes = ft.resample_codes(fit, mel.n_frames, mel.frame_rate)
print(f"codes resampled to {codes.n_frames} frames to sit beside the mel frames")

fig, ax = plt.subplots(1, 2, figsize=(10, 3.5))
ax[0].imshow(mel.data, origin="lower", aspect="auto", cmap="magma",
             extent=(0, mel.n_frames / mel.frame_rate, 0, mel.data.shape[0]))
ax[0].set_xlabel("seconds")
ax[0].set_ylabel("mel bin")
ax[0].set_title("log-mel of a chirp")
ax[1].scatter(landmarks[0, :, 0], landmarks[0, :, 1], s=8, label="observed")
ax[1].scatter(*ft.render_landmarks(basis, fit)[0].T, s=30, facecolors="none", edgecolors="C1", label="refit")
ax[1].set_aspect("equal")
ax[1].legend(fontsize=8)
ax[1].set_title("landmarks, frame 0")
fig.tight_layout()
fig.savefig(out / "features.png", dpi=100)
print("wrote", out / "features.png")
