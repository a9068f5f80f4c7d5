#!/usr/bin/env python3
"""Run the full default verification battery and write one certificate per
sweep into ./certificates/ (or the directory given as the first argument).

This is the scripted equivalent of:

    youngquiver verify signs --max-size 10
    youngquiver verify resolution --xi <each partition of size <= 4> --depth 6
    youngquiver verify qdual --max-size 7
    youngquiver verify morita --n 5
    youngquiver verify idempotents --n 5
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from youngquiver.cli import verify_branching, verify_idempotent_system, verify_signs_sweep
from youngquiver.partitions import partitions_up_to
from youngquiver.qdual import verify_quadratic_duality
from youngquiver.resolution import verify_resolution


def main() -> int:
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "certificates")
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()

    certificates = [
        ("signs", verify_signs_sweep(10)),
        ("qdual", verify_quadratic_duality(7)),
        ("morita", verify_branching(5, 3)),
        ("idempotents", verify_idempotent_system(5)),
    ]
    for xi in partitions_up_to(4):
        name = f"resolution_{str(xi).replace(',', '-')}"
        certificates.append((name, verify_resolution(xi, 6)))

    failures = 0
    for name, certificate in certificates:
        path = out_dir / f"{name}.json"
        path.write_text(certificate.to_json() + "\n", encoding="utf-8")
        status = certificate.verdict.upper()
        if not certificate.passed:
            failures += 1
        print(f"{status:4}  {name:24}  {certificate.elapsed_ms:6d} ms  -> {path}")

    total = time.perf_counter() - started
    print(f"\n{len(certificates)} sweeps, {failures} failures, {total:.1f}s total")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
