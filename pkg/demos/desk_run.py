"""A whole desk-scale run through the command line: data, training, sampling, scoring.

The corpus is synthetic. Each clip's text drives both the audio (a mel bump
pattern per character) and the face (an expression pulse per character),
and each speaker style has its own head-motion rhythm. The model learns
to infill masked frames of both streams at once.

This uses a short schedule so it finishes in a few minutes on one core.
Pass a step count to train longer:

    python3 demos/desk_run.py          # 300 steps
    python3 demos/desk_run.py 3000     # the full desk schedule
"""
import csv
import json
import sys
import time
from pathlib import Path

from flowtalk.cli import main

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 300
root = Path(__file__).resolve().parent
conf = str(root.parent / "configs" / "desk.conf")
run = root / "output" / "desk_run"
common = ["--config", conf, "--out", str(run)]
every = max(steps // 4, 1)


def step(*argv):
    t0 = time.perf_counter()
    if main(list(argv)) != 0:
        sys.exit(f"{argv[0]} failed")
    print(f"  {argv[0]} done in {time.perf_counter() - t0:.0f}s")


print("1. synthesize the corpus")
step("prepare", *common)
manifest = json.loads((run / "dataset.manifest.json").read_text())
print(f"  {len(manifest['clips'])} clips, config hash {manifest['config_hash'][:12]}")

print(f"2. train for {steps} steps")
step("train", *common, f"optim.steps={steps}", f"optim.ckpt_every={every}")
with open(run / "reports" / "metrics.csv") as f:
    log = list(csv.DictReader(f))
print(f"  loss {float(log[0]['total']):.3f} at step {log[0]['step']} -> "
      f"{float(log[-1]['total']):.3f} at step {log[-1]['step']}")

print("3. continue a reference clip with new text")
step("sample", *common, f"optim.steps={steps}")
meta = json.loads((run / "reports" / "sample" / "meta.json").read_text())
print(f"  '{meta['reference_text']}' + '{meta['text']}': {meta['generated_frames']} frames, "
      f"plots {meta.get('plots')}")

print("4. score infilled held-out clips")
step("eval", *common, f"optim.steps={steps}")
with open(run / "reports" / "eval.csv") as f:
    summary = [r for r in csv.DictReader(f) if r["clip"] == "summary"][0]
for k in ("recon_l1", "e_fd", "p_fd", "sync_corr", "decode_acc"):
    print(f"  {k:10s} {float(summary[k]):.4f}")
print("outputs under", run)
