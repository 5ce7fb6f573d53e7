"""Command-line interface.

Subcommands:

* ``emp compute``   — load a dataset directory, compute summary features,
  write ``<out>.csv`` + ``<out>.json``.
* ``emp stability`` — compare summary-matrix distances against per-slice
  matching distances on consecutive graph pairs; write a JSONL report.
* ``emp diagram``   — dump the per-slice persistence diagrams of one graph
  as ``dim birth death essential`` lines.

Exit codes: 0 success, 2 configuration error, 3 data error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .datasets import load_tudataset
from .errors import ConfigError, DataError
from .export import ExportConfig, compute_features, export_features, _pooled_grid
from .metrics import stability_check, write_stability_report
from .persistence import format_diagrams
from .summaries import slice_diagrams
from .vectorize import METHODS


def _add_common(p: argparse.ArgumentParser, *, filters: bool = True):
    p.add_argument("--data", required=True, help="dataset directory")
    p.add_argument("--name", default=None, help="dataset name (default: directory basename)")
    if filters:
        p.add_argument("--f", default="degree", help="first filter kind (e.g. degree, katz, weight)")
        p.add_argument("--g", default="degree", help="second filter kind")
        p.add_argument(
            "--second-direction",
            choices=["sublevel", "edge-weight", "power"],
            default=None,
            help="how the final filtering direction runs (default: inferred from the filter scope)",
        )
        p.add_argument("--grid", default="50x50", help="threshold counts, MxN (or MxNxK with --h)")
        p.add_argument("--thresholds", choices=["quantile", "uniform"], default="quantile")
        p.add_argument("--order", choices=["fg", "gf"], default="fg")
        p.add_argument("--weight-attribute", type=int, default=None,
                       help="edge-attribute column to use as edge weights")


def _parse_grid(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.lower().split("x"))
    except ValueError as exc:
        raise ConfigError(f"bad grid spec {text!r} (expected MxN)") from exc
    if len(parts) not in (2, 3):
        raise ConfigError(f"bad grid spec {text!r} (expected MxN or MxNxK)")
    return parts


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(d) for d in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad dims spec {text!r}") from exc
    return dims


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="emp", description="Multiparameter persistence fingerprints of graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="export summary features for a dataset")
    _add_common(c)
    c.add_argument("--h", default=None, help="optional third filter kind (three-direction summaries)")
    c.add_argument("--method", choices=list(METHODS), default="betti")
    c.add_argument("--dims", default="0,1", help="homology dimensions: 0, 1, or 0,1")
    c.add_argument("--threshold-scope", choices=["dataset", "graph"], default="dataset")
    c.add_argument("--landscape-order", type=int, default=1)
    c.add_argument("--silhouette-power", type=float, default=1.0)
    c.add_argument("--image-resolution", default="50x50", help="persistence-image cells, KxL")
    c.add_argument("--image-bandwidth", type=float, default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--out", required=True, help="output path prefix")

    s = sub.add_parser("stability", help="summary distance vs induced matching distance on graph pairs")
    _add_common(s)
    s.add_argument("--pairs", type=int, default=10, help="number of consecutive graph pairs to compare")
    s.add_argument("--method", choices=list(METHODS), default="landscape")
    s.add_argument("--p", default="inf", help="matching-distance order (a number, or inf)")
    s.add_argument("--dim", type=int, choices=[0, 1], default=0)
    s.add_argument("--landscape-order", type=int, default=1)
    s.add_argument("--out", required=True, help="JSONL report path")

    d = sub.add_parser("diagram", help="dump per-slice persistence diagrams for one graph")
    _add_common(d)
    d.add_argument("--graph", type=int, required=True, help="graph index within the dataset")
    return ap


def _method_params(args) -> dict:
    if args.method == "landscape":
        return {"order": args.landscape_order}
    if args.method == "silhouette":
        return {"power": getattr(args, "silhouette_power", 1.0)}
    if args.method == "image":
        res = _parse_grid(getattr(args, "image_resolution", "50x50"))
        if len(res) != 2:
            raise ConfigError("image resolution must be KxL")
        params = {"resolution": res}
        bw = getattr(args, "image_bandwidth", None)
        if bw is not None:
            params["bandwidth"] = bw
        return params
    return {}


def _cmd_compute(args) -> int:
    dataset = load_tudataset(args.data, args.name, weight_attribute=args.weight_attribute)
    config = ExportConfig(
        f=args.f,
        g=args.g,
        h=args.h,
        second_direction=args.second_direction,
        method=args.method,
        homology_dims=_parse_dims(args.dims),
        grid_shape=_parse_grid(args.grid),
        strategy=args.thresholds,
        order=args.order,
        threshold_scope=args.threshold_scope,
        method_params=_method_params(args),
        n_jobs=args.jobs,
    )
    csv_path, json_path = export_features(dataset, config, args.out)
    print(csv_path)
    print(json_path)
    return 0


def _cmd_stability(args) -> int:
    dataset = load_tudataset(args.data, args.name, weight_attribute=args.weight_attribute)
    if len(dataset) < 2 * args.pairs:
        raise DataError(f"dataset has {len(dataset)} graphs; need {2 * args.pairs} for {args.pairs} pairs")
    config = ExportConfig(
        f=args.f,
        g=args.g,
        second_direction=args.second_direction,
        method=args.method,
        homology_dims=(args.dim,),
        grid_shape=_parse_grid(args.grid),
        strategy=args.thresholds,
        order=args.order,
        method_params=_method_params(args),
    )
    grid, shift, _ = _pooled_grid(dataset, config)
    first, second = config.ordered_specs()
    pairs = [(dataset.graphs[2 * i], dataset.graphs[2 * i + 1]) for i in range(args.pairs)]
    p = math.inf if str(args.p).lower() in ("inf", "infinity") else float(args.p)
    reports = stability_check(
        pairs,
        first,
        second,
        grid,
        method=config.method,
        homology_dim=args.dim,
        p=p,
        second_direction=config.second_direction,
        method_params=config.method_params,
        length_shift=shift,
    )
    write_stability_report(reports, args.out)
    ratios = [r.ratio for r in reports if r.ratio is not None]
    violations = sum(1 for r in reports if r.emp > r.induced + 1e-9)
    print(f"pairs={len(reports)} max_ratio={max(ratios) if ratios else 0:.6g} violations={violations}")
    return 0


def _cmd_diagram(args) -> int:
    dataset = load_tudataset(args.data, args.name, weight_attribute=args.weight_attribute)
    if not 0 <= args.graph < len(dataset):
        raise DataError(f"graph index {args.graph} out of range (0..{len(dataset) - 1})")
    config = ExportConfig(
        f=args.f,
        g=args.g,
        second_direction=args.second_direction,
        grid_shape=_parse_grid(args.grid),
        strategy=args.thresholds,
        order=args.order,
    )
    grid, shift, _ = _pooled_grid(dataset, config)
    first, second = config.ordered_specs()
    graph = dataset.graphs[args.graph]
    per_dim = {
        dim: slice_diagrams(
            graph, first, second, grid, dim,
            second_direction=config.second_direction, length_shift=shift,
        )
        for dim in (0, 1)
    }
    for i, alpha in enumerate(grid.alphas):
        print(f"# slice {i} alpha={alpha:.17g}")
        text = format_diagrams({dim: per_dim[dim][i] for dim in (0, 1)})
        if text:
            print(text)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"compute": _cmd_compute, "stability": _cmd_stability, "diagram": _cmd_diagram}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
