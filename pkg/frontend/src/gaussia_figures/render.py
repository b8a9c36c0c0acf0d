"""Render the correlation-sweep CSVs into figure images.

Consumes only the CSV files the analysis CLI writes; no other coupling.
Each figure id maps the CSV columns onto labelled curves against the
acceleration parameter r.  Raster PNG by default, vector output via --vector.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


class RenderError(RuntimeError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    """Layout of one figure: which columns become which curves."""

    figure_id: str
    title: str
    series: tuple[tuple[str, str], ...]  # (column, legend label)
    xlabel: str = "acceleration parameter r"
    ylabel: str = "correlations (nats)"
    styles: tuple[str, ...] = field(default=())


FIGURES = {
    "fig2a": FigureSpec(
        figure_id="fig2a",
        title="One accelerated observer",
        series=(
            ("I2", "$\\mathcal{I}_2$"),
            ("J2_A_given_R", "$\\mathcal{J}_2(A|R)$"),
            ("J2_R_given_A", "$\\mathcal{J}_2(R|A)$"),
            ("D2_A_given_R", "$\\mathcal{D}_2(A|R)$"),
            ("D2_R_given_A", "$\\mathcal{D}_2(R|A)$"),
            ("E2", "$\\mathcal{E}_2$"),
        ),
    ),
    "fig2b": FigureSpec(
        figure_id="fig2b",
        title="Both observers accelerated (w = 2r)",
        series=(
            ("I2", "$\\mathcal{I}_2$"),
            ("J2_A_given_R", "$\\mathcal{J}_2(A|R)$"),
            ("J2_R_given_A", "$\\mathcal{J}_2(R|A)$"),
            ("D2_A_given_R", "$\\mathcal{D}_2(A|R)$"),
            ("D2_R_given_A", "$\\mathcal{D}_2(R|A)$"),
            ("E2", "$\\mathcal{E}_2$"),
        ),
    ),
    "fig3": FigureSpec(
        figure_id="fig3",
        title="Tripartite decomposition around R",
        series=(
            ("E2_R_ARbar", "$\\mathcal{E}_2(R{:}A\\bar R)$"),
            ("E2_R_A", "$\\mathcal{E}_2(R{:}A)$"),
            ("E2_R_Rbar", "$\\mathcal{E}_2(R{:}\\bar R)$"),
            ("D2_R_A", "$\\mathcal{D}_2(R|A)$"),
            ("D2_R_Rbar", "$\\mathcal{D}_2(R|\\bar R)$"),
            ("Q2_trip", "$\\mathcal{Q}_2$"),
        ),
    ),
}


def load_csv(path: str) -> dict[str, list[float]]:
    """Parse a sweep CSV into column lists; raises RenderError on bad input."""
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise RenderError(f"{path}: empty CSV")
            cols: dict[str, list[float]] = {name: [] for name in reader.fieldnames}
            for row in reader:
                for name in cols:
                    cols[name].append(float(row[name]))
    except OSError as exc:
        raise RenderError(f"cannot read {path}: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise RenderError(f"{path}: malformed CSV: {exc}") from exc
    if not next(iter(cols.values()), []):
        raise RenderError(f"{path}: no data rows")
    return cols


def render(spec: FigureSpec, csv_path: str, out_path: str) -> None:
    cols = load_csv(csv_path)
    if "r" not in cols:
        raise RenderError(f"{csv_path}: missing column 'r'")
    missing = [c for c, _ in spec.series if c not in cols]
    if missing:
        raise RenderError(f"{csv_path}: missing columns {', '.join(missing)}")

    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    for column, label in spec.series:
        ax.plot(cols["r"], cols[column], label=label, linewidth=1.6)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.set_title(spec.title)
    ax.set_xlim(min(cols["r"]), max(cols["r"]))
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize=9, ncol=2)
    fig.tight_layout()
    try:
        fig.savefig(out_path, dpi=150)
    except OSError as exc:
        raise RenderError(f"cannot write {out_path}: {exc}") from exc
    finally:
        plt.close(fig)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="gaussia-figures",
        description="Render gaussia sweep CSVs into figure images")
    ap.add_argument("--figure", required=True, choices=sorted(FIGURES))
    ap.add_argument("--in", dest="csv_in", required=True, help="input CSV path")
    ap.add_argument("--out", required=True, help="output image path")
    ap.add_argument("--vector", action="store_true",
                    help="write vector output (use a .svg/.pdf out path)")
    args = ap.parse_args(argv)

    out = args.out
    if args.vector and out.lower().endswith(".png"):
        ap.error("--vector needs a vector out path (.svg or .pdf)")
    try:
        render(FIGURES[args.figure], args.csv_in, out)
    except RenderError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
