"""Walk through how one training pair is built, and save a picture of it.

A synthetic clip is turned into a log-mel spectrogram. Two 1 s patches are
cut from it, each is mixed with a patch from a different clip, and each
then goes through the default augmentation policy. The figure shows every
stage:

    python demos/views_and_augmentations.py [--out demos/out]
"""
import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from soundclr.augment import apply_policy, default_policy  # noqa: E402
from soundclr.corpus import FAMILIES, render_family  # noqa: E402
from soundclr.frontend import AudioClip, extract_patches, logmel, to_linear  # noqa: E402
from soundclr.views import MixbackConfig, SamplerConfig, make_views  # noqa: E402

SR = 22050


def main(out: Path) -> None:
    rng = np.random.default_rng(0)
    fg = logmel(AudioClip(0.3 * render_family(FAMILIES[1], 3 * SR, SR, rng), SR, "chirp"))
    bg = logmel(AudioClip(0.3 * render_family(FAMILIES[3], 3 * SR, SR, rng), SR, "noise"))
    background = lambda r: to_linear(extract_patches(bg, "train_random", r)[0])  # noqa: E731

    trace = []
    pair = make_views(fg, SamplerConfig(), MixbackConfig(alpha=0.3), background,
                      np.random.default_rng(1), (np.random.default_rng(2), np.random.default_rng(3)))
    aug = [apply_policy(v, default_policy(), np.random.default_rng(10 + i), trace)
           for i, v in enumerate((pair.view_a, pair.view_b))]
    print("patch starts:", pair.provenance["starts"])
    print("mix-back lambdas:", [round(x, 3) for x in pair.provenance["lambdas"]])
    for step in trace:
        print("  ", step)

    panels = [("full clip", fg.values), ("view a after mix-back", pair.view_a.values),
              ("view b after mix-back", pair.view_b.values), ("view a augmented", aug[0].values),
              ("view b augmented", aug[1].values)]
    fig, axes = plt.subplots(1, len(panels), figsize=(3 * len(panels), 3))
    for ax, (title, v) in zip(axes, panels):
        ax.imshow(v, origin="lower", aspect="auto", cmap="magma")
        ax.set_title(title, fontsize=9)
        ax.set_xticks([])
        ax.set_yticks([])
    fig.tight_layout()
    out.mkdir(parents=True, exist_ok=True)
    fig.savefig(out / "views.png", dpi=100)
    print("wrote", out / "views.png")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).parent / "out")
    main(ap.parse_args().out)
