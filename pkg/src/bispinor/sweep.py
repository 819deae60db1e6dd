"""Parameter sweeps over field configurations, written out as CSV.

A sweep file is line oriented::

    # comment
    case = tensor
    m = 1
    kappa = 1
    B = 1
    series = P 1,4,10,100
    sweep = sin_theta 0 1 101

Every grid point goes through the full pipeline (Hamiltonian, ansatz state,
correlation report). When the geometry names one of the closed-form cases the
matching oracle is evaluated alongside.

Run as ``bispinor-sweep --config fig2.cfg`` or ``python3 -m bispinor.sweep``.
"""
import argparse
import csv
import io
import itertools
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import scenarios as sc
from .ansatz import build_state
from .correlations import full_report
from .errors import (BispinorError, ConfigError, ConstraintViolated,
                     InvalidRange, NegativeSpectrum, NoConvergence, NonFinite,
                     ParseError, UnknownKey)
from .potentials import PotentialConfig

SCALAR_KEYS = ("m", "phi_S", "mu", "q", "kappa", "chi", "A0", "theta")
VECTOR_KEYS = ("A", "P", "W", "B", "E")
# quantities with dimensions of energy; multiplied by ``scale``
DIMENSIONAL = {"m", "phi_S", "mu", "q", "A0", "A", "P", "W", "B", "E"}
SWEEP_PARAMS = ("theta", "sin_theta", "cos_theta", "P", "W", "q", "B", "mu")
SERIES_PARAMS = SWEEP_PARAMS + ("m", "kappa", "chi", "s", "n")
MAX_COUNT = 10 ** 7

CASES = ("pseudoscalar", "tensor", "pseudotensor", "pseudovector", "combined", "general")
GEOMETRIES = (
    "pseudoscalar", "tensor_B_in_plane", "pseudotensor_B_in_plane",
    "pseudovector_W_in_plane", "combined_W_perp", "combined_W_perp_anti",
    "combined_B_perp", "combined_B_perp_anti", "general",
)
DEFAULT_GEOMETRY = {
    "pseudoscalar": "pseudoscalar",
    "tensor": "tensor_B_in_plane",
    "pseudotensor": "pseudotensor_B_in_plane",
    "pseudovector": "pseudovector_W_in_plane",
    "combined": "general",
    "general": "general",
}
OBSERVABLES = ("c1", "c2", "lambda", "purity", "concurrence", "eof",
               "discord_geo_1", "discord_geo_2", "entropy_sub2", "validity")
ORACLE_COLUMNS = ("oracle_c1", "oracle_c2", "oracle_lambda", "oracle_measure",
                  "oracle_validity")
CHECK_ATOL = 1e-8

# hard numerical failures; anything else is a per-row outcome
_FATAL = (NoConvergence, NonFinite, NegativeSpectrum)


@dataclass
class SweepSpec:
    base: dict = field(default_factory=dict)
    sweep_param: str = None
    range: tuple = None
    case: str = "general"
    geometry: str = "general"
    s: int = 1
    n: int = 2
    scale: float = 1.0
    outputs: tuple = OBSERVABLES
    series: list = field(default_factory=list)

    @property
    def has_oracle(self):
        return self.geometry != "general" or self.case == "combined"

    def grid(self):
        start, stop, count = self.range
        return np.linspace(start, stop, count)


# -- parsing -----------------------------------------------------------------

def _number(text, lineno):
    try:
        x = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}", lineno) from None
    if not math.isfinite(x):
        raise ParseError(f"value must be finite: {text!r}", lineno)
    return x


def _index(text, lineno):
    try:
        k = int(text)
    except ValueError:
        raise ParseError(f"index must be 1 or 2, got {text!r}", lineno) from None
    if k not in (1, 2):
        raise InvalidRange(f"index must be 1 or 2, got {k}", lineno)
    return k


def _value(text, lineno):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        return _number(parts[0], lineno)
    if len(parts) != 3:
        raise ParseError(f"vectors need three components, got {len(parts)}", lineno)
    return np.array([_number(p, lineno) for p in parts])


def _parse_sweep(text, lineno):
    parts = text.split()
    if len(parts) != 4:
        raise ParseError("sweep needs '<param> <start> <stop> <count>'", lineno)
    name = parts[0]
    if name not in SWEEP_PARAMS:
        raise UnknownKey(f"cannot sweep {name!r}; choose from {', '.join(SWEEP_PARAMS)}", lineno)
    start, stop = _number(parts[1], lineno), _number(parts[2], lineno)
    try:
        count = int(parts[3])
    except ValueError:
        raise ParseError(f"count must be an integer, got {parts[3]!r}", lineno) from None
    if not 2 <= count <= MAX_COUNT:
        raise InvalidRange(f"count must lie in [2, {MAX_COUNT}]", lineno)
    if not stop > start:
        raise InvalidRange(f"stop ({stop}) must exceed start ({start})", lineno)
    return name, (start, stop, count)


def _parse_series(text, lineno):
    name, _, rest = text.strip().partition(" ")
    if name not in SERIES_PARAMS:
        raise UnknownKey(f"cannot vary {name!r} in a series", lineno)
    values = [v.strip() for v in rest.split(",") if v.strip()]
    if not values:
        raise ParseError("series needs at least one value", lineno)
    if name in ("s", "n"):
        return name, [_index(v, lineno) for v in values]
    return name, [_number(v, lineno) for v in values]


def parse_config(text):
    """Parse sweep-file text into a :class:`SweepSpec`.

    Raises
    ------
    ParseError, UnknownKey, InvalidRange
        All carry the offending line number.
    """
    if not isinstance(text, str):
        text = text.read()
    spec = SweepSpec()
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if not eq or not key:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        if not val:
            raise ParseError(f"missing value for {key!r}", lineno)
        if key in seen and key != "series":
            raise ParseError(f"{key!r} already set on line {seen[key]}", lineno)
        seen[key] = lineno
        if key in SCALAR_KEYS:
            spec.base[key] = _number(val, lineno)
        elif key in VECTOR_KEYS:
            if key == "B" and val == "vanishing":
                spec.base[key] = "vanishing"
            else:
                spec.base[key] = _value(val, lineno)
        elif key in ("s", "n"):
            setattr(spec, key, _index(val, lineno))
        elif key == "case":
            if val not in CASES:
                raise InvalidRange(f"unknown case {val!r}", lineno)
            spec.case = val
        elif key == "geometry":
            if val not in GEOMETRIES:
                raise InvalidRange(f"unknown geometry {val!r}", lineno)
            spec.geometry = val
        elif key == "sweep":
            spec.sweep_param, spec.range = _parse_sweep(val, lineno)
        elif key == "series":
            spec.series.append(_parse_series(val, lineno))
        elif key == "scale":
            spec.scale = _number(val, lineno)
            if spec.scale <= 0:
                raise InvalidRange("scale must be positive", lineno)
        elif key == "outputs":
            cols = tuple(c.strip() for c in val.split(",") if c.strip())
            bad = [c for c in cols if c not in OBSERVABLES]
            if bad:
                raise UnknownKey(f"unknown output column(s): {', '.join(bad)}", lineno)
            spec.outputs = cols
        else:
            raise UnknownKey(f"unknown key {key!r}", lineno)
    if "geometry" not in seen:
        spec.geometry = DEFAULT_GEOMETRY[spec.case]
    _validate(spec, seen)
    return spec


def _validate(spec, seen):
    geometric = spec.geometry != "general"
    for key in ("P", "W", "B"):
        v = spec.base.get(key)
        if isinstance(v, np.ndarray) and geometric:
            raise ConfigError(f"geometry {spec.geometry} takes the magnitude of {key}, not a vector",
                              seen[key])
        if isinstance(v, float) and not geometric:
            raise ConfigError(f"{key} must be a vector 'x,y,z' without a named geometry",
                              seen[key])
        if isinstance(v, float) and v < 0:
            raise InvalidRange(f"{key} must be non-negative", seen[key])
    if isinstance(spec.base.get("B"), str) and spec.geometry not in (
            "tensor_B_in_plane", "pseudotensor_B_in_plane"):
        raise ConfigError("B = vanishing only applies to the tensor geometries", seen["B"])
    if spec.geometry.startswith("combined") and (spec.base.get("m", 0.0) or spec.base.get("q", 0.0)):
        raise ConfigError("combined geometries are massless with q = 0")
    varied = [name for name, _ in spec.series]
    if spec.sweep_param:
        varied.append(spec.sweep_param)
    angles = [p for p in varied if p in ("theta", "sin_theta", "cos_theta")]
    if angles and not geometric:
        raise ConfigError("angle sweeps need a named geometry")
    if len(angles) + ("theta" in seen) > 1:
        raise ConfigError("the angle is set more than once")
    if len(set(varied)) != len(varied):
        raise ConfigError("a parameter is varied more than once")
    if not geometric:
        for name in varied:
            if name in ("P", "W", "B") and not np.any(spec.base.get(name, 0.0)):
                raise ConfigError(f"sweeping {name} scales its vector, which must be nonzero")
    if spec.range is None:
        raise ConfigError("missing 'sweep = <param> <start> <stop> <count>'")


# -- evaluation --------------------------------------------------------------

def _grid_points(spec):
    names = [name for name, _ in spec.series]
    for combo in itertools.product(*(vals for _, vals in spec.series)):
        for x in spec.grid():
            yield dict(zip(names, combo)), float(x)


def _resolve(spec, series, x):
    """Parameter dict for one grid point, in physical units."""
    p = {"m": 0.0, "phi_S": 0.0, "mu": 0.0, "q": 0.0, "kappa": 0.0, "chi": 0.0,
         "A0": 0.0, "theta": 0.0, "s": spec.s, "n": spec.n}
    geometric = spec.geometry != "general"
    for key in VECTOR_KEYS:
        p[key] = 0.0 if geometric and key in ("P", "W", "B") else np.zeros(3)
    p.update({k: (v.copy() if isinstance(v, np.ndarray) else v) for k, v in spec.base.items()})
    for key in DIMENSIONAL:
        if not isinstance(p[key], str):
            p[key] = p[key] * spec.scale
    varied = dict(series)
    varied[spec.sweep_param] = x
    for name, val in varied.items():
        if name in ("s", "n"):
            p[name] = val
            continue
        if name == "sin_theta":
            name, val = "theta", math.asin(max(-1.0, min(1.0, val)))
        elif name == "cos_theta":
            name, val = "theta", math.acos(max(-1.0, min(1.0, val)))
        elif name in DIMENSIONAL:
            val = val * spec.scale
        if not geometric and name in ("P", "W", "B"):
            v = p[name]
            p[name] = v / np.linalg.norm(v) * val
        else:
            p[name] = val
    if isinstance(p["B"], str):
        coupling = p["kappa"] if spec.geometry == "tensor_B_in_plane" else p["chi"]
        p["B"] = math.hypot(p["P"], p["m"]) / coupling
    return p


def build_config(spec, p):
    """Concrete :class:`PotentialConfig` for the frame named by the geometry."""
    g = spec.geometry
    if g == "general":
        return PotentialConfig(m=p["m"], phi_S=p["phi_S"], mu=p["mu"], A0=p["A0"],
                               Avec=p["A"], q=p["q"], Wvec=p["W"], kappa=p["kappa"],
                               chi=p["chi"], Bvec=p["B"], Evec=p["E"], pvec=p["P"])
    if g == "pseudoscalar":
        cfg = sc.pseudoscalar_config(p["m"], p["mu"], p["P"])
    elif g in ("tensor_B_in_plane", "pseudotensor_B_in_plane"):
        pt = g.startswith("pseudo")
        cfg = sc.tensor_config(p["m"], p["mu"], p["chi"] if pt else p["kappa"],
                               p["B"], p["P"], p["theta"], pseudotensor=pt)
    elif g == "pseudovector_W_in_plane":
        cfg = sc.pseudovector_config(p["m"], p["mu"], p["q"], p["W"], p["P"], p["theta"])
    elif g.startswith("combined_W_perp"):
        cfg = sc.combined_w_perp_config(p["mu"], p["W"], p["P"], p["B"], p["theta"],
                                        g.endswith("anti"), p["kappa"])
    else:
        cfg = sc.combined_b_perp_config(p["mu"], p["W"], p["P"], p["B"], p["theta"],
                                        g.endswith("anti"), p["kappa"])
    # the remaining couplings are not part of the frame but are still honoured
    return cfg.replace(phi_S=p["phi_S"], A0=p["A0"])


def oracle(spec, p, cfg):
    """Closed-form result for the grid point, or ``None`` without one."""
    g, s, n = spec.geometry, p["s"], p["n"]
    if g == "pseudoscalar":
        return sc.case_pseudoscalar(p["m"] + p["phi_S"], p["mu"], p["P"], n)
    if g in ("tensor_B_in_plane", "pseudotensor_B_in_plane"):
        pt = g.startswith("pseudo")
        return sc.case_tensor_pseudoscalar(p["m"] + p["phi_S"], p["mu"],
                                           p["chi"] if pt else p["kappa"], p["B"],
                                           p["P"], p["theta"], s, n, pseudotensor=pt)
    if g == "pseudovector_W_in_plane":
        return sc.case_pseudovector(p["m"] + p["phi_S"], p["mu"], p["q"], p["W"], p["P"],
                                    p["theta"], s, n, strict=False)
    if g.startswith("combined_W_perp"):
        return sc.case_combined_w_perp(p["mu"], p["W"], p["P"], p["B"], p["theta"], s, n,
                                       g.endswith("anti"), p["kappa"])
    if g.startswith("combined_B_perp"):
        return sc.case_combined_b_perp(p["mu"], p["W"], p["P"], p["B"], p["theta"], s, n,
                                       g.endswith("anti"), p["kappa"])
    if spec.case == "combined":
        if cfg.chi or np.any(cfg.Evec):
            raise ConstraintViolated("the combined case has chi = 0 and E = 0")
        return sc.case_combined(cfg.m_eff, cfg.mu, cfg.q, cfg.Wvec, cfg.Bvec, cfg.P,
                                s, n, kappa=cfg.kappa, strict=False)
    return None


def _numeric(cfg, s, n):
    st = build_state(cfg, s, n)
    rep = full_report(st.rho)
    return {
        "c1": st.c1, "c2": st.c2, "lambda": st.lam, "purity": rep.purity,
        "concurrence": rep.concurrence, "eof": rep.eof,
        "discord_geo_1": rep.discord_geo_1, "discord_geo_2": rep.discord_geo_2,
        "entropy_sub2": rep.entropy_sub2, "validity": st.purity_class.value,
    }


def evaluate_point(spec, series, x, with_oracle=False):
    """One result row as a dict; errors are recorded, not raised."""
    row = {"index": None, **series, spec.sweep_param: x}
    p = _resolve(spec, series, x)
    cfg = None
    try:
        cfg = build_config(spec, p)
        row.update(_numeric(cfg, p["s"], p["n"]))
        row["status"] = "ok"
    except _FATAL as exc:
        row["status"] = type(exc).__name__
        row["fatal"] = True
    except (BispinorError, ValueError) as exc:
        row["status"] = type(exc).__name__
    if with_oracle:
        row.update(_oracle_columns(spec, p, cfg))
    return row


def _oracle_columns(spec, p, cfg):
    out = {}
    try:
        res = oracle(spec, p, cfg if cfg is not None else build_config(spec, p))
    except (BispinorError, ValueError) as exc:
        out["oracle_validity"] = type(exc).__name__
        return out
    out["oracle_c1"], out["oracle_c2"], out["oracle_lambda"] = res.c1, res.c2, res.lam
    out["oracle_measure"] = res.measure
    out["oracle_validity"] = res.validity.value
    if spec.geometry == "pseudoscalar":
        out["oracle_discord_printed"] = res.extra["discord_printed"]
    return out


def header(spec, with_oracle=False):
    cols = ["index"] + [name for name, _ in spec.series] + [spec.sweep_param]
    cols += list(spec.outputs)
    if with_oracle and spec.has_oracle:
        cols += list(ORACLE_COLUMNS)
        if spec.geometry == "pseudoscalar":
            cols.append("oracle_discord_printed")
    cols.append("status")
    return cols


def run_sweep(spec, threads=1, with_oracle=False):
    """Evaluate every grid point; rows come back in grid order."""
    points = list(_grid_points(spec))
    with_oracle = with_oracle and spec.has_oracle

    def work(item):
        series, x = item
        return evaluate_point(spec, series, x, with_oracle)

    if threads == 0:
        threads = os.cpu_count() or 1
    if threads <= 1:
        rows = [work(pt) for pt in points]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(work, points))
    for i, row in enumerate(rows):
        row["index"] = i
    return rows


def check_rows(spec, rows, atol=CHECK_ATOL):
    """Grid indices where the pipeline and the closed form disagree.

    ``c1``, ``c2`` and ``lambda`` are compared relative to ``max(1, |oracle|)``;
    the measure (concurrence, or parity-side discord for the pseudoscalar
    frame) is compared absolutely.
    """
    measure = "discord_geo_1" if spec.geometry == "pseudoscalar" else "concurrence"
    bad = []
    for row in rows:
        ov = row.get("oracle_validity")
        if ov is None or ov == sc.Validity.CONSTRAINT_VIOLATED.value:
            continue
        num_ok, or_ok = row["status"] == "ok", ov == sc.Validity.EXACT.value
        if num_ok != or_ok:
            bad.append(row["index"])
            continue
        if not num_ok:
            continue
        pairs = [("c1", "oracle_c1", True), ("c2", "oracle_c2", True),
                 ("lambda", "oracle_lambda", True), (measure, "oracle_measure", False)]
        for a, b, rel in pairs:
            ref = row[b]
            tol = atol * max(1.0, abs(ref)) if rel else atol
            if not abs(row[a] - ref) <= tol:
                bad.append(row["index"])
                break
    return bad


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, str)):
        return str(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".17g")


def emit_csv(rows, sink, columns):
    """Write rows as CSV with a header line, LF line endings and ``%.17g`` floats."""
    if not columns:
        raise ValueError("header must not be empty")
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.get(c)) for c in columns])


def figspec_names():
    root = resources.files("bispinor") / "figspecs"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def figspec_text(name):
    """Text of a bundled figure spec such as ``"fig2"``."""
    return (resources.files("bispinor") / "figspecs" / f"{name}.cfg").read_text(encoding="utf-8")


def render(spec, threads=1, with_oracle=False):
    """Run a sweep and return ``(csv_text, rows)``."""
    rows = run_sweep(spec, threads=threads, with_oracle=with_oracle)
    buf = io.StringIO()
    emit_csv(rows, buf, header(spec, with_oracle))
    return buf.getvalue(), rows


def _parser():
    ap = argparse.ArgumentParser(
        prog="bispinor-sweep",
        description="Sweep a Dirac bi-spinor field configuration and write CSV.")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="sweep file, or '-' for stdin")
    src.add_argument("--figure", help="bundled figure spec: " + ", ".join(figspec_names()))
    ap.add_argument("--output", default="stdout", help="output path (default: stdout)")
    ap.add_argument("--threads", type=int, default=1, help="worker threads, 0 = one per CPU")
    ap.add_argument("--oracle", action="store_true", help="append closed-form columns")
    ap.add_argument("--check", action="store_true",
                    help=f"exit 3 if pipeline and closed form differ by more than {CHECK_ATOL:g}")
    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    if args.threads < 0:
        print("error: --threads must be >= 0", file=sys.stderr)
        return 1
    try:
        if args.figure:
            text = figspec_text(args.figure)
        elif args.config == "-":
            text = sys.stdin.read()
        else:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        spec = parse_config(text)
    except (OSError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    want_oracle = args.oracle or args.check
    rows = run_sweep(spec, threads=args.threads, with_oracle=want_oracle)
    cols = header(spec, with_oracle=args.oracle)
    try:
        if args.output in ("stdout", "-"):
            emit_csv(rows, sys.stdout, cols)
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                emit_csv(rows, fh, cols)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if any(r.get("fatal") for r in rows):
        print("error: numerical failure at one or more grid points", file=sys.stderr)
        return 2
    if args.check:
        bad = check_rows(spec, rows)
        if bad:
            print(f"check failed at {len(bad)} grid point(s), first index {bad[0]}",
                  file=sys.stderr)
            return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
