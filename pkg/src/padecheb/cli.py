"""Command-line front end.

Subcommands:

* ``registry``     -- list the built-in test functions.
* ``approx``       -- build one approximant, sample it, write values/error
                      CSVs and a JSON summary.
* ``convergence``  -- sweep the cell count N and emit a piecewise-Chebyshev
                      vs piecewise-Pade L1/order table.

Configuration is accepted as flags or as a JSON file (``--config``); flags
override file entries.  ``PADECHEB_THREADS`` caps per-cell parallelism.
Exit codes: 0 success, 2 config error, 3 build failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from .analysis import error_norms, error_norms_2d
from .cheb2d import (
    Partition2D,
    Rect,
    build_pi2dc,
    cheb_coeffs_2d,
    eval_cheb_series_2d,
    eval_pi2d,
)
from .chebyshev import Interval, cheb_coeffs_1d, eval_cheb_series
from .exceptions import InvalidArgumentError, PadechebError
from .functions import get_function, registry
from .pade1d import PadeOrder1D, build_pade_1d, eval_rational_1d
from .pade2d import PadeOrder2D, build_pade_2d, eval_rational_2d, build_pi2dpc
from .piecewise1d import build_picheb, build_pipc, uniform_partition

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_BUILD = 3
EXIT_IO = 4

METHODS = ("cheb", "pade", "picheb", "pipade")

CONFIG_KEYS = (
    "function", "method", "domain", "N", "np", "nq", "d", "n",
    "window", "grid", "out", "tol",
)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_ints(text, count):
    if isinstance(text, (list, tuple)):
        vals = [int(v) for v in text]
    elif isinstance(text, int):
        vals = [text]
    else:
        vals = [int(v) for v in str(text).split(",")]
    if count == 1 and len(vals) == 1:
        return vals[0]
    if len(vals) == 1:
        vals = vals * count
    if len(vals) != count:
        raise InvalidArgumentError(f"expected {count} integer(s), got {text!r}")
    return tuple(vals)


def _parse_floats(text, count):
    if isinstance(text, (list, tuple)):
        vals = [float(v) for v in text]
    else:
        vals = [float(v) for v in str(text).split(",")]
    if len(vals) != count:
        raise InvalidArgumentError(f"expected {count} value(s), got {text!r}")
    return tuple(vals)


def _merge_config(args, keys):
    cfg = {}
    if getattr(args, "config", None):
        try:
            cfg = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise OSError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidArgumentError(f"malformed config JSON: {exc}") from exc
    merged = {}
    for key in keys:
        flag = getattr(args, key, None)
        merged[key] = flag if flag is not None else cfg.get(key)
    return merged


def _default_grid_1d(window: Interval, min_cell: float) -> int:
    return max(2048, 10 * int(np.ceil(window.width / min_cell)))


def _default_grid_2d(window: Rect, min_cx: float, min_cy: float):
    return (
        max(256, 10 * int(np.ceil(window.x_interval.width / min_cx))),
        max(256, 10 * int(np.ceil(window.y_interval.width / min_cy))),
    )


def _series_evaluator(series):
    return lambda xs: (eval_cheb_series(series, xs), np.zeros(len(xs), dtype=bool))


def _series2d_evaluator(series):
    return lambda xs, ys: (
        eval_cheb_series_2d(series, xs, ys),
        np.zeros(len(xs), dtype=bool),
    )


def _build_1d(spec, cfg):
    domain = (
        Interval(*_parse_floats(cfg["domain"], 2)) if cfg["domain"] else spec.domain
    )
    method = cfg["method"]
    n = _parse_ints(cfg["n"], 1) if cfg["n"] is not None else 200
    tol = float(cfg["tol"]) if cfg["tol"] is not None else None
    nodes = None
    if method in ("cheb", "picheb"):
        if cfg["d"] is not None:
            d = _parse_ints(cfg["d"], 1)
        elif cfg["np"] is not None and cfg["nq"] is not None:
            d = _parse_ints(cfg["np"], 1) + 2 * _parse_ints(cfg["nq"], 1)
        else:
            raise InvalidArgumentError(f"method {method} needs --d (or --np/--nq)")
    else:
        if cfg["np"] is None or cfg["nq"] is None:
            raise InvalidArgumentError(f"method {method} needs --np and --nq")
        order = PadeOrder1D(_parse_ints(cfg["np"], 1), _parse_ints(cfg["nq"], 1))

    if method == "cheb":
        series = cheb_coeffs_1d(spec.fn, domain, d, n)
        evaluator = _series_evaluator(series)
    elif method == "pade":
        rational = build_pade_1d(spec.fn, domain, order, n, tol)
        evaluator = lambda xs: eval_rational_1d(rational, xs)  # noqa: E731
    else:
        N = _parse_ints(cfg["N"], 1) if cfg["N"] is not None else 1
        partition = uniform_partition(domain, N)
        nodes = partition.nodes
        if method == "picheb":
            approx = build_picheb(spec.fn, partition, d, n)
        else:
            approx = build_pipc(spec.fn, partition, order, n, tol)
        if approx.failures:
            raise _BuildFailure(approx.failures)
        from .piecewise1d import eval_pipc

        evaluator = lambda xs: eval_pipc(approx, xs)  # noqa: E731
    return domain, evaluator, nodes


def _build_2d(spec, cfg):
    if cfg["domain"]:
        x0, x1, y0, y1 = _parse_floats(cfg["domain"], 4)
        domain = Rect(Interval(x0, x1), Interval(y0, y1))
    else:
        domain = spec.domain
    method = cfg["method"]
    n = _parse_ints(cfg["n"], 2) if cfg["n"] is not None else (100, 100)
    if isinstance(n, int):
        n = (n, n)
    tol = float(cfg["tol"]) if cfg["tol"] is not None else None
    nodes = (None, None)
    if method in ("cheb", "picheb"):
        if cfg["d"] is not None:
            d = _parse_ints(cfg["d"], 2)
        elif cfg["np"] is not None and cfg["nq"] is not None:
            np_ = _parse_ints(cfg["np"], 2)
            nq_ = _parse_ints(cfg["nq"], 2)
            d = (np_[0] + 2 * nq_[0] + 1, np_[1] + 2 * nq_[1] + 1)
        else:
            raise InvalidArgumentError(f"method {method} needs --d (or --np/--nq)")
        if isinstance(d, int):
            d = (d, d)
    else:
        if cfg["np"] is None or cfg["nq"] is None:
            raise InvalidArgumentError(f"method {method} needs --np and --nq")
        np_ = _parse_ints(cfg["np"], 2)
        nq_ = _parse_ints(cfg["nq"], 2)
        if isinstance(np_, int):
            np_ = (np_, np_)
        if isinstance(nq_, int):
            nq_ = (nq_, nq_)
        order = PadeOrder2D(np_, nq_)

    if method == "cheb":
        series = cheb_coeffs_2d(spec.fn, domain, d, n)
        evaluator = _series2d_evaluator(series)
    elif method == "pade":
        rational = build_pade_2d(spec.fn, domain, order, n, tol)
        evaluator = lambda xs, ys: eval_rational_2d(rational, xs, ys)  # noqa: E731
    else:
        N = _parse_ints(cfg["N"], 2) if cfg["N"] is not None else (1, 1)
        if isinstance(N, int):
            N = (N, N)
        partition = Partition2D(
            uniform_partition(domain.x_interval, N[0]),
            uniform_partition(domain.y_interval, N[1]),
        )
        nodes = (partition.px.nodes, partition.py.nodes)
        if method == "picheb":
            approx = build_pi2dc(spec.fn, partition, d, n)
        else:
            approx = build_pi2dpc(spec.fn, partition, order, n, tol)
        if approx.failures:
            raise _BuildFailure(approx.failures)
        evaluator = lambda xs, ys: eval_pi2d(approx, xs, ys)  # noqa: E731
    return domain, evaluator, nodes


class _BuildFailure(PadechebError):
    def __init__(self, failures):
        cells = ", ".join(str(idx) for idx, _ in failures)
        super().__init__(f"build failed in cell(s): {cells}")
        self.failures = failures


def cmd_registry(args) -> int:
    for spec in registry():
        print(f"{spec.name}\t{spec.arity}d\t{spec.description}")
    return EXIT_OK


def cmd_approx(args) -> int:
    cfg = _merge_config(args, CONFIG_KEYS)
    if not cfg["function"] or not cfg["method"]:
        raise InvalidArgumentError("--function and --method are required")
    if cfg["method"] not in METHODS:
        raise InvalidArgumentError(f"unknown method {cfg['method']!r}")
    if not cfg["out"]:
        raise InvalidArgumentError("--out directory is required")
    spec = get_function(cfg["function"])
    started = time.perf_counter()
    from .analysis import midpoint_grid

    if spec.arity == 1:
        domain, evaluator, nodes = _build_1d(spec, cfg)
        window = (
            Interval(*_parse_floats(cfg["window"], 2)) if cfg["window"] else domain
        )
        if cfg["grid"] is not None:
            m = _parse_ints(cfg["grid"], 1)
        else:
            min_cell = (
                float(np.diff(nodes).min()) if nodes is not None else domain.width
            )
            m = _default_grid_1d(window, min_cell)
        xs = midpoint_grid(window, m, avoid=nodes)
        vals, flags = evaluator(xs)
        exact = np.asarray(spec.fn(xs), dtype=float)
        err = np.abs(exact - vals)
        report = error_norms(spec.fn, evaluator, window, m, avoid=nodes)
        rows = zip(xs, exact, vals, err, flags)
        header = "x,f,approx,abs_err,pole_flag"
        err_header = "x,abs_err"
        err_rows = zip(xs, err)
    else:
        domain, evaluator, (nx_nodes, ny_nodes) = _build_2d(spec, cfg)
        if cfg["window"]:
            x0, x1, y0, y1 = _parse_floats(cfg["window"], 4)
            window = Rect(Interval(x0, x1), Interval(y0, y1))
        else:
            window = domain
        if cfg["grid"] is not None:
            m = _parse_ints(cfg["grid"], 2)
            if isinstance(m, int):
                m = (m, m)
        else:
            min_cx = (
                float(np.diff(nx_nodes).min()) if nx_nodes is not None
                else window.x_interval.width
            )
            min_cy = (
                float(np.diff(ny_nodes).min()) if ny_nodes is not None
                else window.y_interval.width
            )
            m = _default_grid_2d(window, min_cx, min_cy)
        xs = midpoint_grid(window.x_interval, m[0], avoid=nx_nodes)
        ys = midpoint_grid(window.y_interval, m[1], avoid=ny_nodes)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        vals, flags = evaluator(X.ravel(), Y.ravel())
        exact = np.asarray(spec.fn(X, Y), dtype=float).ravel()
        err = np.abs(exact - vals)
        report = error_norms_2d(
            spec.fn, evaluator, window, m, avoid_x=nx_nodes, avoid_y=ny_nodes
        )
        rows = zip(X.ravel(), Y.ravel(), exact, vals, err, flags)
        header = "x,y,f,approx,abs_err,pole_flag"
        err_header = "x,y,abs_err"
        err_rows = zip(X.ravel(), Y.ravel(), err)

    wall = time.perf_counter() - started
    out_dir = Path(cfg["out"])
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "values.csv", "w") as fh:
            fh.write(header + "\n")
            for row in rows:
                *floats, flag = row
                fh.write(",".join(_fmt(v) for v in floats) + f",{int(flag)}\n")
        with open(out_dir / "error.csv", "w") as fh:
            fh.write(err_header + "\n")
            for row in err_rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
        summary = {
            "config": {k: cfg[k] for k in CONFIG_KEYS},
            "l1": report.l1,
            "linf": report.linf,
            "pole_count": report.pole_count,
            "wall_time_s": wall,
        }
        (out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"l1={report.l1:.6e} linf={report.linf:.6e} poles={report.pole_count}")
    return EXIT_OK


def cmd_convergence(args) -> int:
    keys = CONFIG_KEYS + ("N_list",)
    cfg = _merge_config(args, keys)
    if not cfg["function"]:
        raise InvalidArgumentError("--function is required")
    if not cfg["N_list"]:
        raise InvalidArgumentError("--N-list is required")
    if not cfg["out"]:
        raise InvalidArgumentError("--out file is required")
    spec = get_function(cfg["function"])
    if spec.arity != 1:
        raise InvalidArgumentError("convergence sweep supports 1-D functions")
    if cfg["np"] is None or cfg["nq"] is None:
        raise InvalidArgumentError("--np and --nq are required")
    N_list = [int(v) for v in str(cfg["N_list"]).split(",")]
    if any(b <= a for a, b in zip(N_list, N_list[1:])):
        raise InvalidArgumentError("N values must be strictly increasing")
    order = PadeOrder1D(_parse_ints(cfg["np"], 1), _parse_ints(cfg["nq"], 1))
    d = (
        _parse_ints(cfg["d"], 1) if cfg["d"] is not None
        else order.np + 2 * order.nq
    )
    n = _parse_ints(cfg["n"], 1) if cfg["n"] is not None else 200
    tol = float(cfg["tol"]) if cfg["tol"] is not None else None
    domain = (
        Interval(*_parse_floats(cfg["domain"], 2)) if cfg["domain"] else spec.domain
    )
    window = (
        Interval(*_parse_floats(cfg["window"], 2)) if cfg["window"] else domain
    )
    from .piecewise1d import eval_pipc

    results = []
    for N in N_list:
        partition = uniform_partition(domain, N)
        min_cell = float(np.diff(partition.nodes).min())
        m = (
            _parse_ints(cfg["grid"], 1) if cfg["grid"] is not None
            else _default_grid_1d(window, min_cell)
        )
        cheb = build_picheb(spec.fn, partition, d, n)
        pade = build_pipc(spec.fn, partition, order, n, tol)
        failures = cheb.failures + pade.failures
        if failures:
            raise _BuildFailure(failures)
        rep_c = error_norms(
            spec.fn, lambda xs: eval_pipc(cheb, xs), window, m,
            avoid=partition.nodes,
        )
        rep_p = error_norms(
            spec.fn, lambda xs: eval_pipc(pade, xs), window, m,
            avoid=partition.nodes,
        )
        results.append((N, rep_c.l1, rep_p.l1))

    def order_col(errs):
        cols = [""]
        for (n1, e1), (n2, e2) in zip(
            zip(N_list, errs), zip(N_list[1:], errs[1:])
        ):
            if e1 > 0 and e2 > 0:
                cols.append(_fmt(np.log(e1 / e2) / np.log(n2 / n1)))
            else:
                cols.append("")
        return cols

    l1_c = [r[1] for r in results]
    l1_p = [r[2] for r in results]
    ord_c = order_col(l1_c)
    ord_p = order_col(l1_p)
    try:
        out_path = Path(cfg["out"])
        if out_path.parent != Path(""):
            out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w") as fh:
            fh.write("N,l1_cheb,order_cheb,l1_pade,order_pade\n")
            for i, N in enumerate(N_list):
                fh.write(
                    f"{N},{_fmt(l1_c[i])},{ord_c[i]},{_fmt(l1_p[i])},{ord_p[i]}\n"
                )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for i, N in enumerate(N_list):
        print(f"N={N} l1_cheb={l1_c[i]:.6e} l1_pade={l1_p[i]:.6e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padecheb",
        description="Chebyshev and Pade-Chebyshev approximation experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("registry", help="list built-in test functions")

    for name, helptext in (
        ("approx", "build one approximant and emit CSV/JSON artifacts"),
        ("convergence", "sweep N and emit a convergence table CSV"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", help="JSON config file (flags override)")
        p.add_argument("--function")
        p.add_argument("--method", help="|".join(METHODS))
        p.add_argument("--domain", help="a,b (1d) or x0,x1,y0,y1 (2d)")
        p.add_argument("--N", help="cell count (1d) or Nx,Ny (2d)")
        p.add_argument("--np", dest="np", help="numerator degree(s)")
        p.add_argument("--nq", dest="nq", help="denominator degree(s)")
        p.add_argument("--d", help="series truncation degree(s)")
        p.add_argument("--n", help="quadrature size(s)")
        p.add_argument("--window", help="error window: a,b or x0,x1,y0,y1")
        p.add_argument("--grid", help="sample count(s) for norms/CSV")
        p.add_argument("--out", help="output directory (approx) or CSV (convergence)")
        p.add_argument("--tol", help="kernel rank tolerance override")
        if name == "convergence":
            p.add_argument("--N-list", dest="N_list", help="comma-separated N sweep")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "registry":
            return cmd_registry(args)
        if args.command == "approx":
            return cmd_approx(args)
        return cmd_convergence(args)
    except _BuildFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        for idx, cell_exc in exc.failures:
            print(f"  cell {idx}: {cell_exc}", file=sys.stderr)
        return EXIT_BUILD
    except (InvalidArgumentError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PadechebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
