"""Timing the decision pipeline (and optionally the drawing stages) per instance."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .embed import embed
from .generators import InstanceSpec, generate
from .geometry import is_plane_oor
from .orientation import solve_dp
from .recognize import NotInnerChordal, recognize


@dataclass
class BenchRecord:
    family: str
    size: int | None
    seed: int
    n: int
    times: dict[str, float] = field(default_factory=dict)
    verdict: bool = False
    drawing_ok: bool | None = None

    @property
    def decision_time(self) -> float:
        return self.times.get("recognize", 0.0) + self.times.get("dp", 0.0)

    def to_json(self) -> dict:
        return {"family": self.family, "size": self.size, "seed": self.seed, "n": self.n,
                "times": {k: round(v, 6) for k, v in self.times.items()},
                "decision_time": round(self.decision_time, 6),
                "verdict": self.verdict, "drawing_ok": self.drawing_ok}

    CSV_FIELDS = ("family", "size", "seed", "n", "recognize", "dp", "embed", "verify", "verdict")

    def csv_row(self) -> list:
        t = self.times
        return [self.family, self.size, self.seed, self.n] + [
            "" if s not in t else f"{t[s]:.6f}" for s in ("recognize", "dp", "embed", "verify")
        ] + [int(self.verdict)]


def bench_one(spec: InstanceSpec, max_draw_n: int = 0) -> BenchRecord:
    """Time recognition and the DP; draw and verify too when ``n <= max_draw_n``."""
    g = generate(spec).graph
    rec = BenchRecord(spec.family, spec.size, spec.seed, g.n)
    t0 = time.perf_counter()
    try:
        ic = recognize(g)
    except NotInnerChordal:
        rec.times["recognize"] = time.perf_counter() - t0
        return rec
    t1 = time.perf_counter()
    o = solve_dp(ic.tree)
    t2 = time.perf_counter()
    rec.times["recognize"] = t1 - t0
    rec.times["dp"] = t2 - t1
    rec.verdict = o is not None
    if o is not None and g.n <= max_draw_n:
        d = embed(ic, o)
        t3 = time.perf_counter()
        report = is_plane_oor(d)
        t4 = time.perf_counter()
        rec.times["embed"] = t3 - t2
        rec.times["verify"] = t4 - t3
        rec.drawing_ok = report.verdict and bool(report.local_verdict)
    return rec


def run_bench(specs, max_draw_n: int = 0, repeat: int = 1) -> list[BenchRecord]:
    """One record per spec; with ``repeat > 1`` each stage keeps its fastest time."""
    out = []
    for spec in specs:
        best = None
        for _ in range(max(1, repeat)):
            rec = bench_one(spec, max_draw_n)
            if best is None:
                best = rec
            else:
                for k, v in rec.times.items():
                    best.times[k] = min(best.times.get(k, v), v)
        out.append(best)
    return out
