"""Run the verification suites and summarize pass/fail/skip per check."""

import argparse
import json
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from drgkit.suites import SUITES


@dataclass
class Config:
    suites: list[str] = field(default_factory=lambda: sorted(SUITES))
    seed: int = 0
    workers: int = 1
    out: Path | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=sorted(SUITES), help=f"any of {sorted(SUITES)}")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path)
    cfg = Config(**vars(ap.parse_args()))
    unknown = set(cfg.suites) - set(SUITES)
    if unknown:
        ap.error(f"unknown suites {sorted(unknown)}")
    payload, ok = [], True
    for name in cfg.suites:
        t0 = time.perf_counter()
        fn = SUITES[name]
        rep = fn(seed=cfg.seed) if name == "catalog" else fn(seed=cfg.seed, workers=cfg.workers)
        dt = time.perf_counter() - t0
        ok &= rep.ok
        per_check = Counter((r.check, r.status) for r in rep.results)
        print(f"{name}: {rep.counts()} in {dt:.1f}s")
        for (check, status), n in sorted(per_check.items()):
            print(f"    {status:<4} x{n:<3} {check}")
        for r in rep.results:
            if r.passed is False:
                print(f"    FAIL {r.check} {r.graph}: {r.detail}")
        payload.append(rep.to_json())
    if cfg.out:
        cfg.out.write_text(json.dumps(payload, indent=2) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
