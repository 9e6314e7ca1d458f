"""Report rendering: the cross-check CSV plus matplotlib figures saved to files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")  # file output only; never requires a display

import matplotlib.pyplot as plt

from .embedding import congestion_per_edge, lex_embedding
from .formulas import WirelengthRecord, cross_check, records_to_csv
from .hosts import HOST_KINDS, build_host, normalize_kind
from .qcube import build_qcube

_KIND_COLORS = {
    "cylinder": "tab:blue",
    "caterpillar2": "tab:orange",
    "firecracker3": "tab:green",
    "banana2": "tab:red",
}


def write_report(
    out_dir: str | Path,
    n_min: int = 2,
    n_max: int = 4,
    kinds: Iterable[str] | None = None,
    congestion_n: int = 3,
) -> tuple[Path, list[Path], list[WirelengthRecord]]:
    """Run the three-engine cross-check over a dimension range and render it.

    Writes ``cross_check.csv`` plus two PNG figures into ``out_dir`` and
    returns their paths together with the records.
    """
    selected = [normalize_kind(k) for k in kinds] if kinds is not None else list(HOST_KINDS)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    records: list[WirelengthRecord] = []
    for n in range(n_min, n_max + 1):
        records.extend(cross_check(n, selected))

    csv_path = out / "cross_check.csv"
    csv_path.write_text(records_to_csv(records), encoding="utf-8")

    figures = [
        _wirelength_figure(out, records, selected),
        _congestion_figure(out, selected, congestion_n),
    ]
    return csv_path, figures, records


def _wirelength_figure(out: Path, records: Sequence[WirelengthRecord], kinds: Sequence[str]) -> Path:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for kind in kinds:
        rows = [r for r in records if r.kind == kind]
        ns = [r.n for r in rows]
        ax.plot(
            ns,
            [r.formula_value for r in rows],
            marker="o",
            color=_KIND_COLORS.get(kind),
            label=f"{kind} (formula)",
        )
        ax.scatter(
            ns,
            [r.distance_value for r in rows],
            marker="x",
            s=60,
            color=_KIND_COLORS.get(kind),
            zorder=3,
        )
    ax.set_yscale("log")
    ax.set_xlabel("cube dimension n")
    ax.set_ylabel("exact wirelength")
    ax.set_title("Wirelength by host: formula lines, distance-engine crosses")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    ax.xaxis.set_major_locator(plt.MaxNLocator(integer=True))
    fig.tight_layout()
    path = out / "wirelength_by_n.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _congestion_figure(out: Path, kinds: Sequence[str], n: int) -> Path:
    guest = build_qcube(n)
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), squeeze=False)
    slots = [axes[i][j] for i in range(2) for j in range(2)]
    for ax in slots[len(kinds):]:
        ax.axis("off")
    for ax, kind in zip(slots, kinds):
        emb = lex_embedding(guest, build_host(kind, n))
        report = congestion_per_edge(emb)
        loads = sorted(report.per_edge.values(), reverse=True)
        ax.bar(range(len(loads)), loads, width=1.0, color=_KIND_COLORS.get(kind))
        ax.set_title(f"{kind}, n={n} (total {report.wirelength})", fontsize=9)
        ax.set_xlabel("host edges, busiest first", fontsize=8)
        ax.set_ylabel("congestion", fontsize=8)
        ax.tick_params(labelsize=7)
    fig.suptitle("Per-edge congestion of the canonical embedding")
    fig.tight_layout()
    path = out / f"congestion_profiles_n{n}.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
