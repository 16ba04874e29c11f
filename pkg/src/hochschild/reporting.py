"""Report rendering: machine-readable record blocks and figure files.

Reports are line oriented; `--emit records` appends a tab-separated
block with one record per check, and `--figures DIR` renders the same
data as PNG files (a dimension bar chart and a verdict grid) next to
the text output.
"""

import os


def records_block(records):
    """Tab-separated block, one line per check record."""
    out = ["== records ==", "check\tpair\tidx\tverdict\tdetail"]
    for r in records:
        pair = "(" + ",".join(str(p) for p in r.pair) + ")"
        idx = "(" + ",".join(str(i) for i in getattr(r, "idx", ())) + ")"
        verdict = "PASS" if r.ok else "FAIL"
        out.append(f"{r.check if hasattr(r, 'check') else 'oracle-bracket'}"
                   f"\t{pair}\t{idx}\t{verdict}\t{r.detail}")
    return "\n".join(out)


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def write_dimension_figure(dims, outdir, title, name="hh_dimensions.png"):
    """Bar chart of cohomology dimensions per degree; returns the path."""
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(range(len(dims)), dims, color="#4878a8")
    ax.set_xlabel("cohomological degree")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.set_xticks(range(len(dims)))
    path = os.path.join(outdir, name)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_verdict_figure(records, outdir, title, name="verdict_grid.png"):
    """Grid of pair verdicts (green pass, red fail); returns the path."""
    plt = _pyplot()
    os.makedirs(outdir, exist_ok=True)
    keys = sorted({(r.pair, getattr(r, "idx", ())) for r in records})
    checks = sorted({getattr(r, "check", "check") for r in records})
    grid = [[0.5] * len(keys) for _ in checks]
    lookup = {}
    for r in records:
        lookup[(getattr(r, "check", "check"), (r.pair, getattr(r, "idx", ())))] = r.ok
    for ci, check in enumerate(checks):
        for ki, key in enumerate(keys):
            ok = lookup.get((check, key))
            if ok is not None:
                grid[ci][ki] = 1.0 if ok else 0.0
    fig, ax = plt.subplots(figsize=(max(4, 0.3 * len(keys)), 1 + 0.5 * len(checks)))
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_yticks(range(len(checks)))
    ax.set_yticklabels(checks)
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(["(" + ",".join(str(p) for p in pair) + ")"
                        for pair, _ in keys], rotation=90, fontsize=6)
    ax.set_title(title)
    path = os.path.join(outdir, name)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
