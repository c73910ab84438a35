"""Render suite results as PNG status charts.

matplotlib is imported lazily so the library core works without it and
headless runs never touch a display backend.
"""

__all__ = ["render_suite_figure", "render_overview_figure"]

_GREEN = "#2e7d32"
_RED = "#c62828"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_suite_figure(result, path):
    """One PNG for one suite: pass/fail bar plus the first few failures."""
    plt = _pyplot()
    passed = result.instances_checked - len(result.failures)
    fig, ax = plt.subplots(figsize=(7, 2.4 + 0.3 * min(len(result.failures), 8)))
    ax.barh([0], [passed], color=_GREEN, label="passed")
    if result.failures:
        ax.barh([0], [len(result.failures)], left=[passed], color=_RED, label="failed")
    ax.set_yticks([])
    ax.set_xlim(0, max(result.instances_checked, 1))
    ax.set_title(
        f"{result.suite_id}: {passed}/{result.instances_checked} instances passed"
        f" in {result.runtime:.1f}s"
    )
    ax.legend(loc="lower right", fontsize=8)
    for i, (description, _, observed) in enumerate(result.failures[:8]):
        ax.annotate(
            f"FAIL {description} (observed: {observed})"[:110],
            xy=(0.01, -0.18 - 0.12 * i),
            xycoords="axes fraction",
            fontsize=7,
            color=_RED,
            annotation_clip=False,
        )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_overview_figure(results, path):
    """All suites on one chart, instance counts on a log axis."""
    plt = _pyplot()
    ids = [r.suite_id for r in results]
    counts = [max(r.instances_checked, 1) for r in results]
    colors = [_GREEN if r.passed else _RED for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(results) + 1.5))
    positions = range(len(results))
    ax.barh(positions, counts, color=colors)
    ax.set_yticks(positions)
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("instances checked")
    for pos, r in zip(positions, results):
        note = f"{r.runtime:.1f}s" if r.passed else f"{len(r.failures)} failed"
        ax.annotate(
            note,
            xy=(max(r.instances_checked, 1), pos),
            xytext=(4, 0),
            textcoords="offset points",
            va="center",
            fontsize=7,
        )
    total_failures = sum(len(r.failures) for r in results)
    verdict = "all suites passed" if total_failures == 0 else f"{total_failures} failures"
    ax.set_title(f"{len(results)} suites, {verdict}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
