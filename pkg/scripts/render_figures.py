"""Render the power-figure CSV bundle to PNG.

The core package emits plot data only; this script is the one place that
touches matplotlib. Typical use:

    spikelr power-figures --c 0.5 --seed 1 --out figures
    python scripts/render_figures.py figures
"""
import argparse
import csv
from pathlib import Path


def load(path: Path):
    with path.open() as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    header, body = rows[0], rows[1:]
    cols = {name: [float(r[i]) for r in body]
            for i, name in enumerate(header)}
    return cols


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("indir", type=Path,
                    help="directory written by the power-figures verb")
    ap.add_argument("--dpi", type=int, default=150)
    args = ap.parse_args()

    try:
        import matplotlib
    except ImportError:
        raise SystemExit("matplotlib is needed for rendering: pip install "
                         "matplotlib")
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    panels = (
        ("lr_wap_envelope.csv",
         (("lr_lambda", "LR sup test"), ("wap_lambda", "WAP test"),
          ("envelope_lambda", "envelope")),
         (("lr_mu", "LR sup test"), ("wap_mu", "WAP test"),
          ("envelope_mu", "envelope")),
         ("known scale", "unknown scale")),
        ("john_vs_mu_envelope.csv",
         (("beta_john", "locally best invariant"),
          ("envelope_mu", "envelope, unknown scale")),
         None, ("", "")),
        ("classical_vs_lambda_envelope.csv",
         (("beta_lw", "trace-based"), ("beta_clr", "corrected LRT"),
          ("envelope_lambda", "envelope, known scale")),
         None, ("", "")),
    )
    for name, left, right, titles in panels:
        path = args.indir / name
        if not path.exists():
            print(f"skipping {name}: not found")
            continue
        cols = load(path)
        ncols = 2 if right else 1
        fig, axes = plt.subplots(1, ncols, figsize=(5.0 * ncols, 3.6),
                                 squeeze=False)
        for ax, series, title in zip(axes[0], (left, right), titles):
            for key, label in series:
                style = "--" if key.startswith("envelope") else "-"
                ax.plot(cols["theta"], cols[key], style, label=label)
            ax.set_xlabel(r"$\theta_1$")
            ax.set_ylabel("asymptotic power")
            ax.set_ylim(0.0, 1.02)
            if title:
                ax.set_title(title)
            ax.legend(loc="lower right", fontsize=8)
        fig.tight_layout()
        out = path.with_suffix(".png")
        fig.savefig(out, dpi=args.dpi)
        plt.close(fig)
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
