"""A few-minute pass through the whole pipeline on a small synthetic corpus.

Pretrains a narrow encoder for a handful of epochs, then scores it with
kNN, a linear probe and fine-tuning next to a random encoder and a
from-scratch baseline. The numbers are far from converged; the point is to
see every command and the files it leaves behind:

    python demos/tiny_pipeline.py [--out demos/out/tiny]
"""
import argparse
import json
from pathlib import Path

from soundclr.cli import main as soundclr

CONFIG = {
    "corpus": {"data_dir": "data",
               "synth": {"n_classes": 4, "clips_per_split": {"clean_train": 40, "noisy_train": 160, "test": 40}}},
    "encoder": {"channels": [8, 16, 32]},
    "pretrain": {"epochs": 8, "batch_size": 32, "lr_drops": [6], "head_hidden": 64, "head_out": 32,
                 "checkpoint_every": 4},
    "eval": {"knn_k": 10, "supervised": {"epochs": 8, "lr_drops": [4, 6], "batch_size": 32}},
}


def run(*argv) -> None:
    code = soundclr(list(argv))
    if code:
        raise SystemExit(f"soundclr {argv[0]} exited with {code}")


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    cfg = dict(CONFIG, corpus=dict(CONFIG["corpus"], data_dir=str(out / "data")))
    path = out / "config.json"
    path.write_text(json.dumps(cfg, indent=1))
    c = ["--config", str(path), "--quiet"]
    ckpt = str(out / "pretrain" / "last.ckpt")

    run("pretrain", "--out", str(out / "pretrain"), *c)
    run("eval-knn", "--checkpoint", ckpt, "--out", str(out / "eval"), *c)
    run("probe", "--checkpoint", ckpt, "--out", str(out / "eval"), *c)
    run("probe", "--random-init", "--out", str(out / "eval_random"), *c)
    run("finetune", "--checkpoint", ckpt, "--task", "clean_train", "--out", str(out / "eval"), *c)
    run("supervised", "--task", "clean_train", "--out", str(out / "eval"), *c)
    run("report", str(out / "pretrain"), str(out / "eval"), str(out / "eval_random"), "--out", str(out / "report"),
        *c)
    for table in ("pretrain_summary.md", "eval_summary.md"):
        print((out / "report" / table).read_text())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).parent / "out" / "tiny")
    main(ap.parse_args().out)
