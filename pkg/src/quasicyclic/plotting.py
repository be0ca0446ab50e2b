"""Figures and CSV tables written next to CLI reports."""

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.8),
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


def _save(fig, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def distance_histogram(counts, path, title=""):
    """Bar chart of the pairwise distance distribution of a code."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ds = sorted(counts)
        ax.bar([str(d) for d in ds], [counts[d] for d in ds], color="#4477aa")
        ax.set_xlabel("subspace distance")
        ax.set_ylabel("pairs")
        ax.set_yscale("log")
        if title:
            ax.set_title(title)
        return _save(fig, path)


def orbit_raster(vectors, path, title=""):
    """Characteristic vectors of orbit members, one row each."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.imshow(vectors, aspect="auto", interpolation="nearest", cmap="Greys")
        ax.set_xlabel("exponent j of gamma^j")
        ax.set_ylabel("shift index")
        if title:
            ax.set_title(title)
        return _save(fig, path)


def orbit_length_scatter(rows, path):
    """Enumerated quasi-orbit length against the gcd closed form, marking lengths with no subfield fit."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ok = [(r.closed_form, r.length) for r in rows if r.consistent]
        bad = [(r.closed_form, r.length) for r in rows if not r.consistent]
        if ok:
            ax.scatter(*zip(*ok), s=14, color="#4477aa", label="fits (1/m)(q^n-1)/(q^t'-1)")
        if bad:
            ax.scatter(*zip(*bad), s=30, marker="x", color="#cc3311", label="no t' | n fits")
        top = max([r.length for r in rows] + [1])
        ax.plot([1, top], [1, top], lw=0.8, color="grey")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("closed form length")
        ax.set_ylabel("enumerated length")
        ax.legend(frameon=False, fontsize=8)
        return _save(fig, path)


def trinomial_plot(rows, path):
    """(k, N) pairs found by the trinomial search, one marker per s."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for s in sorted({r.s for r in rows}):
            pts = [(r.k, r.N) for r in rows if r.s == s]
            ax.scatter(*zip(*pts), s=18, label=f"s={s}")
        ax.set_xlabel("k")
        ax.set_ylabel("N")
        ax.set_yscale("log", base=2)
        ax.legend(frameon=False, fontsize=8, ncol=2)
        return _save(fig, path)
