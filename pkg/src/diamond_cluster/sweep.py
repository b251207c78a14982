"""Time sweeps of entanglement measures and reproduction of the figure set.

A sweep evaluates requested measures on a uniform time grid through the
evolve -> reduce -> measure pipeline. Emitted CSVs carry the scaled time
(exchange difference times t for concurrence-like measures, side coupling
times t for the side-driven entropies) so files compare directly against
the published curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import svg
from .linalg import partial_trace
from .measures import (
    Bipartition,
    eof_from_concurrence,
    reduce_state,
    spin_flip_spectrum,
    vn_entropy,
)
from .model import ClusterParams, evolve_analytic, initial_plus_x


class ConfigInvalidError(ValueError):
    """Sweep configuration failed validation; message names the field."""


# measure name -> (kept sites, time-axis scaling: exchange difference or side coupling)
MEASURE_INFO = {
    "c_ab": ("ab", "exchange"),
    "eof_ab": ("ab", "exchange"),
    "eof_12": ("12", "exchange"),
    "e_ab_12": ("ab", "side"),
    "e_a": ("a", "exchange"),
    "e_1": ("1", "side"),
}

MEASURE_NAMES = tuple(MEASURE_INFO)

_BIPARTITIONS = {kept: Bipartition.keep(kept) for kept, _ in MEASURE_INFO.values()}


@dataclass(frozen=True)
class SweepConfig:
    params: ClusterParams = field(default_factory=ClusterParams)
    t_max: float = 2.0 * math.pi
    steps: int = 1001
    measures: tuple = ("c_ab",)
    log_base: float = 2.0
    output_path: str = "out"
    ratio: float | None = None  # echo: j0 was derived as ratio * (jz - j)

    def validate(self) -> "SweepConfig":
        if not self.t_max > 0.0:
            raise ConfigInvalidError(f"t_max: must be positive, got {self.t_max}")
        if self.steps < 2:
            raise ConfigInvalidError(f"steps: must be at least 2, got {self.steps}")
        if not self.measures:
            raise ConfigInvalidError("measures: at least one measure required")
        unknown = [m for m in self.measures if m not in MEASURE_INFO]
        if unknown:
            raise ConfigInvalidError(
                f"measures: unknown {unknown}; choose from {sorted(MEASURE_INFO)}"
            )
        if not self.log_base > 1.0:
            raise ConfigInvalidError(f"log_base: must exceed 1, got {self.log_base}")
        return self


_PARAM_KEYS = ("j", "jz", "j0", "h", "hp")
_CONFIG_KEYS = ("ratio", "t_max", "steps", "measures", "log_base", "output_path")


def config_from_dict(data: dict) -> SweepConfig:
    """Build a validated SweepConfig from a flat dict (JSON config layout)."""
    unknown = set(data) - set(_PARAM_KEYS) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigInvalidError(f"unknown config fields: {sorted(unknown)}")
    ratio = data.get("ratio")
    if ratio is not None and "j0" in data:
        raise ConfigInvalidError("ratio: mutually exclusive with an explicit j0")
    kwargs = {k: float(data[k]) for k in _PARAM_KEYS if k in data}
    if ratio is not None:
        kwargs["j0"] = float(ratio) * (kwargs.get("jz", 0.0) - kwargs.get("j", 0.0))
    try:
        params = ClusterParams(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigInvalidError(f"params: {exc}") from exc

    cfg_kwargs = {}
    if "t_max" in data:
        cfg_kwargs["t_max"] = float(data["t_max"])
    if "steps" in data:
        cfg_kwargs["steps"] = int(data["steps"])
    if "measures" in data:
        measures = data["measures"]
        if isinstance(measures, str):
            measures = [m for m in measures.split(",") if m]
        cfg_kwargs["measures"] = tuple(measures)
    if "log_base" in data:
        cfg_kwargs["log_base"] = float(data["log_base"])
    if "output_path" in data:
        cfg_kwargs["output_path"] = str(data["output_path"])
    return SweepConfig(
        params=params, ratio=None if ratio is None else float(ratio), **cfg_kwargs
    ).validate()


@dataclass(frozen=True)
class MeasureSeries:
    measure: str
    times: tuple
    values: tuple
    meta: dict

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ValueError("times and values must have equal length")

    @property
    def scaled_times(self) -> tuple:
        scale = self.meta["t_scale"]
        return tuple(t * scale for t in self.times)


def _time_scale(kind: str, p: ClusterParams) -> float:
    raw = p.jz - p.j if kind == "exchange" else p.j0
    return raw if raw != 0.0 else 1.0


def evaluate_measures(p: ClusterParams, times: np.ndarray, measures, log_base: float) -> dict:
    """Pipeline values of the requested measures at every time in ``times``.

    Evolves once, then shares reduced matrices and spin-flip spectra across
    measures; all linear algebra runs on stacked arrays.
    """
    psi = evolve_analytic(initial_plus_x(), p, np.asarray(times, dtype=float))
    rhos: dict = {}
    conc: dict = {}

    def rho_of(kept):
        if kept not in rhos:
            # single-spin states come cheaper from an already-reduced pair
            if kept == "a" and "ab" in rhos:
                rhos[kept] = partial_trace(rhos["ab"], [2, 2], [1])
            elif kept == "1" and "12" in rhos:
                rhos[kept] = partial_trace(rhos["12"], [2, 2], [1])
            else:
                rhos[kept] = reduce_state(psi, _BIPARTITIONS[kept])
        return rhos[kept]

    def conc_of(kept):
        if kept not in conc:
            w = spin_flip_spectrum(rho_of(kept))
            conc[kept] = np.maximum(0.0, w[..., 0] - w[..., 1] - w[..., 2] - w[..., 3])
        return conc[kept]

    out = {}
    for m in measures:
        kept, _ = MEASURE_INFO[m]
        if m == "c_ab":
            out[m] = conc_of("ab")
        elif m in ("eof_ab", "eof_12"):
            out[m] = eof_from_concurrence(conc_of(kept))
        else:
            out[m] = vn_entropy(rho_of(kept), log_base)
    return out


def run_sweep(cfg: SweepConfig) -> list[MeasureSeries]:
    """Evaluate every configured measure on the uniform grid [0, t_max]."""
    cfg.validate()
    times = np.linspace(0.0, cfg.t_max, cfg.steps)
    columns = evaluate_measures(cfg.params, times, cfg.measures, cfg.log_base)

    p = cfg.params
    series = []
    for m in cfg.measures:
        meta = {
            "measure": m,
            "j": p.j,
            "jz": p.jz,
            "j0": p.j0,
            "h": p.h,
            "hp": p.hp,
            "ratio": cfg.ratio,
            "t_max": cfg.t_max,
            "steps": cfg.steps,
            "log_base": cfg.log_base,
            "t_scale": _time_scale(MEASURE_INFO[m][1], p),
        }
        series.append(
            MeasureSeries(measure=m, times=tuple(float(t) for t in times),
                          values=tuple(float(v) for v in columns[m]), meta=meta)
        )
    return series


def write_series_csv(series: MeasureSeries, path) -> Path:
    """CSV with header ``t_scaled,<measure>``, 17 significant digits, LF endings."""
    path = Path(path)
    lines = [f"t_scaled,{series.measure}"]
    for t, v in zip(series.scaled_times, series.values):
        lines.append(f"{t:.17g},{v:.17g}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path


def read_series_csv(path) -> tuple[str, list[float], list[float]]:
    """Parse a CSV produced by :func:`write_series_csv`."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    name = header[1]
    ts, vs = [], []
    for line in lines[1:]:
        t_str, v_str = line.split(",")
        ts.append(float(t_str))
        vs.append(float(v_str))
    return name, ts, vs


# Figure registry: published parameter choices. The exchange difference is
# the frequency unit (j = 0, jz = 1, fields zero); each grid spans two full
# periods and its step divides every zero/extremum time of interest.
_AXIS_EXCHANGE = "(Jz - J) t"
_AXIS_SIDE = "J0 t"


@dataclass(frozen=True)
class FigureSpec:
    fig_id: str
    measure: str
    ratio: float
    t_end: float  # in scaled time; equals raw t (scale factor is 1)
    points: int
    log_base: float = 2.0
    with_reference: bool = False  # add the decoupled (j0 = 0) concurrence

    @property
    def params(self) -> ClusterParams:
        if self.measure == "e_ab_12":
            return ClusterParams(j=0.0, jz=1.0, j0=1.0)
        return ClusterParams(j=0.0, jz=1.0, j0=self.ratio)


FIGURES = {
    "2a": FigureSpec("2a", "c_ab", 0.3, 40 * math.pi, 2401),
    "2b": FigureSpec("2b", "c_ab", 10.0, 4 * math.pi, 2001),
    "3a": FigureSpec("3a", "c_ab", 0.01, 400 * math.pi, 10001),
    "3b": FigureSpec("3b", "c_ab", 0.1, 40 * math.pi, 4001),
    "3c": FigureSpec("3c", "c_ab", 0.9, 40 * math.pi, 3601),
    "3d": FigureSpec("3d", "c_ab", 0.99, 400 * math.pi, 9901),
    "4a": FigureSpec("4a", "c_ab", 1.0, 4 * math.pi, 2001, with_reference=True),
    "4b": FigureSpec("4b", "c_ab", 2.0, 4 * math.pi, 2001, with_reference=True),
    "4c": FigureSpec("4c", "c_ab", 5.0, 4 * math.pi, 2001, with_reference=True),
    "4d": FigureSpec("4d", "c_ab", 20.0, 4 * math.pi, 2001, with_reference=True),
    "5": FigureSpec("5", "e_ab_12", 1.0, 4 * math.pi, 10001, log_base=3.0),
}


def figure_series(spec: FigureSpec) -> MeasureSeries:
    cfg = SweepConfig(
        params=spec.params,
        t_max=spec.t_end,  # scale factor is 1 with these params
        steps=spec.points,
        measures=(spec.measure,),
        log_base=spec.log_base,
        ratio=spec.ratio,
    )
    return run_sweep(cfg)[0]


def reproduce_figure(fig_id: str, out_dir) -> list[Path]:
    """Emit the CSV and SVG for one figure; returns the written paths."""
    if fig_id not in FIGURES:
        raise ConfigInvalidError(f"fig_id: unknown {fig_id!r}; choose from {sorted(FIGURES)}")
    spec = FIGURES[fig_id]
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    main = figure_series(spec)
    written = [write_series_csv(main, out_dir / f"fig{fig_id}.csv")]

    x_label = _AXIS_SIDE if spec.measure == "e_ab_12" else _AXIS_EXCHANGE
    chart = [(spec.measure, list(main.scaled_times), list(main.values))]
    dashed = ()
    if spec.with_reference:
        ref_spec = FigureSpec(fig_id, "c_ab", 0.0, spec.t_end, spec.points)
        ref = figure_series(ref_spec)
        written.append(write_series_csv(ref, out_dir / f"fig{fig_id}_ref.csv"))
        chart.append(("c_ab (j0 = 0)", list(ref.scaled_times), list(ref.values)))
        dashed = ("c_ab (j0 = 0)",)

    title = f"figure {fig_id}: {spec.measure}, j0 = {spec.ratio:g} (jz - j)"
    if spec.measure == "e_ab_12":
        title = f"figure {fig_id}: {spec.measure}, log base {spec.log_base:g}"
    written.append(
        svg.write_line_chart(out_dir / f"fig{fig_id}.svg", chart, title, x_label, spec.measure,
                             dashed=dashed)
    )
    return written
