"""Command-line front end.

Exit status: 0 success, 1 a computed value disagrees with its closed form,
2 invalid input.  ``--json`` prints a Report whose integers are decimal
strings, so factorial-sized values survive any JSON parser.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import chern, gauge_orders as go
from .chern import ParityMismatch, Space, binomial_power_sums, c_space
from .exact_linalg import (
    INFINITE,
    hnf_rows,
    lattice_contains,
    lattice_index,
    quotient_invariants,
    standard_lattice,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

_INT_RE = re.compile(r"-?\d+")


class UsageError(Exception):
    pass


def encode(value: Any) -> Any:
    """JSON-safe form: ints become decimal strings, infinity becomes "infinite"."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == INFINITE:
            return "infinite"
        raise TypeError(f"unexpected float {value!r}")
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode(value: Any) -> Any:
    if isinstance(value, str):
        if _INT_RE.fullmatch(value):
            return int(value)
        if value == "infinite":
            return INFINITE
        return value
    if isinstance(value, dict):
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    results: dict[str, Any]
    status: str = "info"
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "params": encode(self.params),
            "results": encode(self.results),
            "status": self.status,
            "notes": list(self.notes),
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> Report:
        d = json.loads(text)
        return cls(d["command"], decode(d["params"]), decode(d["results"]),
                   d["status"], list(d["notes"]))


def _fmt(v: Any) -> str:
    if v == INFINITE and not isinstance(v, bool):
        return "infinite"
    return str(v)


def _fmt_matrix(rows) -> list[str]:
    rows = [[_fmt(x) for x in r] for r in rows]
    if not rows:
        return ["  (empty)"]
    w = max(len(x) for r in rows for x in r)
    return ["  [ " + "  ".join(x.rjust(w) for x in r) + " ]" for r in rows]


def _need_n(n: int, minimum: int = 3) -> None:
    if n < minimum:
        raise UsageError(f"n must be at least {minimum} for this command, got {n}")


# ---------------------------------------------------------------------------
# commands


def cmd_order_bound(args) -> tuple[Report, list[str]]:
    n = args.n
    params = {"n": n}
    if n == 2:
        rec = go.known_order("SU(2)")
        report = Report("order-bound", params,
                        {"m": rec.m, "m_prime": rec.m_prime},
                        "info",
                        ["n = 2 is outside the computed range; values quoted from the known-order table",
                         f"source: {rec.source}"])
        return report, [f"SU(2): m = {rec.m}, m' = {rec.m_prime} (known values, not computed)"]
    _need_n(n, 2)
    res = go.restricted_boundary_order(n)
    results = {
        "order": res.computed,
        "closed_form": res.closed_form,
        "agrees": res.agrees,
        "parity": "odd" if n % 2 else "even",
    }
    notes = ["lower bound on order of ∂'₁"]
    lines = [
        f"n = {n}",
        f"order of the restricted boundary map: {res.computed}",
        f"closed form: {res.closed_form}  ({'agrees' if res.agrees else 'MISMATCH'})",
        f"=> the order m' over CP^2 is at least {res.computed}",
    ]
    bound = go.even_order_bound_over_s4(n)
    if bound is not None:
        results["bound_on_m"] = bound
        notes.append("n even: lower bound on order of ∂₁ over S^4")
        lines.append(f"=> the order m over S^4 is at least {bound}")
    if n == 3:
        rec = go.known_order("SU(3)")
        results["known_m_prime"] = rec.m_prime
        notes.append(f"known SU(3) value m' = {rec.m_prime}: bound attained")
        lines.append(f"known SU(3) value m' = {rec.m_prime}")
    report = Report("order-bound", params, results, "pass" if res.agrees else "fail", notes)
    return report, lines


def cmd_im_phi(args) -> tuple[Report, list[str]]:
    n = args.n
    _need_n(n)
    family = go._family(n, args.family)
    names = [str(g) for g in chern.generators(chern.RingContext(n, family))]
    rows = go.phi_rows(n, family)
    lat = go.im_phi_lattice(n, family)
    results: dict[str, Any] = {
        "family": family.value,
        "generators": dict(zip(names, [list(r) for r in rows])),
        "basis": [list(r) for r in lat.rows()],
        "index_in_Z3": lattice_index(lat, standard_lattice(3)),
    }
    lines = [f"n = {n}, family {family.value}", "Phi of generators (x, y, z):"]
    lines += [f"  {name:>4}: " + line.strip() for name, line in zip(names, _fmt_matrix(rows))]
    lines.append("canonical basis:")
    lines += _fmt_matrix(lat.rows())
    status = "info"
    if family is Space.SMASH_CPN:
        same = lat == go.reduced_phi_span(n)
        results["matches_three_generator_span"] = same
        lines.append(f"equals span of three reduced generators: {same}")
        status = "pass" if same else "fail"
    else:
        basis = go.im_a_basis(n)
        q = quotient_invariants(rows, basis)
        results["im_a_basis"] = [list(b) for b in basis]
        results["rows_in_im_a_basis"] = q.relations_in_basis.to_rows()
        results["quotient_invariant_factors"] = list(q.invariant_factors)
        results["quotient_free_rank"] = q.free_rank
        lines.append(f"Im(a) basis: {basis}")
        lines.append("rows in the Im(a) basis:")
        lines += _fmt_matrix(q.relations_in_basis.to_rows())
        lines.append("Im(a)/Im(Phi) = " + (" + ".join(f"Z/{d}" for d in q.invariant_factors) or "0"))
    return Report("im-phi", {"n": n, "family": args.family}, results, status), lines


def cmd_subgroup_order(args) -> tuple[Report, list[str]]:
    n, k = args.n, args.k
    _need_n(n)
    if k < 0:
        raise UsageError("k must be nonnegative")
    res = go.boundary_image_order(n, k)
    results = {"computed": res.computed, "closed_form": res.closed_form, "agrees": res.agrees}
    lines = [f"n = {n}, k = {k}",
             f"order of the boundary image: {_fmt(res.computed)}",
             f"closed form: {res.closed_form}  ({'agrees' if res.agrees else 'MISMATCH'})"]
    if not res.agrees:
        lines.append(f"mismatch at (n, k) = ({n}, {k})")
    status = "pass" if res.agrees else "fail"
    return Report("subgroup-order", {"n": n, "k": k}, results, status), lines


def cmd_classify(args) -> tuple[Report, list[str]]:
    n, k, l = args.n, args.k, args.l
    _need_n(n, 2)
    m = go.necessary_modulus(n)
    gk, gl = math.gcd(m, k), math.gcd(m, l)
    holds = go.necessary_equiv_condition(n, k, l)
    results: dict[str, Any] = {"modulus": m, "gcd_k": gk, "gcd_l": gl, "necessary_holds": holds}
    if holds:
        lines = [f"necessary condition holds: gcd({m},{k})={gk} = gcd({m},{l})={gl}"
                 " (homotopy equivalence not excluded)"]
    else:
        lines = [f"necessary condition FAILS: gcd({m},{k})={gk} ≠ gcd({m},{l})={gl}"
                 " → not homotopy equivalent"]
    notes = []
    if args.m_prime is not None:
        if args.m_prime < 1:
            raise UsageError("--m-prime must be positive")
        mp = args.m_prime
        suff = go.sufficient_equiv_condition(mp, k, l)
        results.update({"m_prime": mp, "gcd_m_prime_k": math.gcd(mp, k),
                        "gcd_m_prime_l": math.gcd(mp, l), "sufficient_holds": suff})
        verdict = ("equivalent when localized rationally or at any prime" if suff
                   else "sufficient condition not met (no conclusion)")
        lines.append(f"sufficient condition with m'={mp}: gcd={math.gcd(mp, k)} vs {math.gcd(mp, l)}"
                     f" → {verdict}")
        notes.append("sufficient check assumes the supplied m' is the exact order")
    params = {"n": n, "k": k, "l": l, "m_prime": args.m_prime}
    return Report("classify", params, results, "info", notes), lines


def cmd_table(args) -> tuple[Report, list[str]]:
    results: dict[str, Any] = {}
    lines: list[str] = []
    if args.known or not args.wn:
        recs = go.known_orders()
        results["known_orders"] = [
            {"group": r.group, "m": r.m, "m_prime": r.m_prime, "source": r.source,
             "consistent": r.consistent()} for r in recs]
        lines.append(f"{'group':<6} {'m':>5} {'m_prime':>8}  source")
        for r in recs:
            lines.append(f"{r.group:<6} {_fmt(r.m) if r.m is not None else '?':>5} "
                         f"{_fmt(r.m_prime) if r.m_prime is not None else '?':>8}  {r.source}")
    if args.wn:
        table = {p: {off: go.wn_homotopy(p, off).group for off in (0, 1, 2, 3)} for p in ("odd", "even")}
        results["wn_homotopy"] = {p: {("<=0" if o == 0 else f"+{o}"): g for o, g in row.items()}
                                  for p, row in table.items()}
        if lines:
            lines.append("")
        lines.append("pi_i(W_n)   i<=2n   2n+1   2n+2   2n+3")
        for p, row in table.items():
            lines.append(f"n {p:<8}  " + "".join(f"{row[o]:>7}" for o in (0, 1, 2, 3)))
    params = {"known": bool(args.known), "wn": bool(args.wn)}
    return Report("table", params, results, "info"), lines


# ---------------------------------------------------------------------------
# verification sweep


def verify_n(n: int, k_max: int | None) -> dict[str, Any]:
    """Every invariant check for one n; returns counts and mismatches."""
    checks: dict[str, bool] = {}
    mismatches: list[dict[str, Any]] = []

    checks["reduced_span"] = go.im_phi_lattice(n) == go.reduced_phi_span(n)

    r = go.restricted_boundary_order(n)
    checks["restricted_order"] = r.agrees
    if not r.agrees:
        mismatches.append({"check": "restricted_order", "n": n,
                           "computed": r.computed, "closed_form": r.closed_form})

    ok = True
    for i in range(1, n):
        a, b = binomial_power_sums(i, n)
        series_a = chern.exp_power_series(i, n - 2)[n - 2] * math.factorial(n - 2)
        series_b = chern.exp_power_series(i, n - 1)[n - 1] * math.factorial(n - 1)
        if a != series_a or b != series_b or (a - b) % 2:
            ok = False
    a2, b2 = binomial_power_sums(2, n)
    checks["power_sum_oracle"] = ok and a2 - b2 == -(2 ** (n - 2))

    ima = go.im_a_lattice(n)
    rel = go.im_phi_lattice(n, c_space(n))
    checks["im_phi_in_im_a"] = all(lattice_contains(ima, row) for row in rel.rows())

    top = 2 * n * (n * n - 1) if k_max is None else k_max
    cells_ok = True
    for k in range(0, top + 1):
        res = go.boundary_image_order(n, k, relations=rel)
        if not res.agrees:
            cells_ok = False
            mismatches.append({"check": "boundary_image", "n": n, "k": k,
                               "computed": res.computed, "closed_form": res.closed_form})
    checks["boundary_image"] = cells_ok

    if n % 4 == 3:
        q = quotient_invariants(go.phi_rows(n, c_space(n)), go.im_a_basis(n))
        f = math.factorial
        checks["invariant_factors"] = q.invariant_factors == (f(n) // 2, f(n) // 2, f(n + 1) // 2)

    return {"n": n, "checks": checks, "k_cells": top + 1, "mismatches": mismatches}


def _verify_star(args):
    return verify_n(*args)


def cmd_verify(args) -> tuple[Report, list[str]]:
    lo, hi = args.n_min, args.n_max
    _need_n(lo)
    if hi < lo:
        raise UsageError("--n-max must be at least --n-min")
    if args.k_max is not None and args.k_max < 0:
        raise UsageError("--k-max must be nonnegative")
    work = [(n, args.k_max) for n in range(lo, hi + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            cells = list(pool.map(_verify_star, work))
    else:
        cells = [_verify_star(w) for w in work]
    cells.sort(key=lambda c: c["n"])

    static_ok = all(r.consistent() for r in go.known_orders())
    su3 = go.known_order("SU(3)")
    static_ok = static_ok and go.restricted_boundary_order(3).computed == su3.m_prime

    mismatches = [m for c in cells for m in c["mismatches"]]
    all_ok = static_ok and all(all(c["checks"].values()) for c in cells)

    lines = []
    names = sorted({name for c in cells for name in c["checks"]})
    for name in names:
        relevant = [c for c in cells if name in c["checks"]]
        passed = sum(c["checks"][name] for c in relevant)
        tag = "PASS" if passed == len(relevant) else "FAIL"
        lines.append(f"[{tag}] {name}: {passed}/{len(relevant)} values of n")
    lines.append(f"[{'PASS' if static_ok else 'FAIL'}] static_data")
    for m in mismatches:
        lines.append("  mismatch: " + ", ".join(f"{k}={_fmt(v)}" for k, v in m.items()))
    results = {
        "per_n": [{"n": c["n"], "k_cells": c["k_cells"], "checks": c["checks"]} for c in cells],
        "static_data": static_ok,
        "mismatches": mismatches,
        "all_passed": all_ok,
    }
    params = {"n_min": lo, "n_max": hi, "k_max": args.k_max}
    return Report("verify", params, results, "pass" if all_ok else "fail"), lines


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sungauge",
        description="Exact orders and classification conditions for SU(n)-gauge groups over CP^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("order-bound", cmd_order_bound, "lower bound on the order of the boundary map")
    p.add_argument("--n", type=int, required=True)

    p = add("im-phi", cmd_im_phi, "the lattice Im(Phi)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=["cpn", "c", "c_odd", "c_even"], default="cpn")

    p = add("subgroup-order", cmd_subgroup_order, "order of the boundary image for charge k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("classify", cmd_classify, "necessary (and optionally sufficient) equivalence test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m-prime", type=int, default=None)

    p = add("table", cmd_table, "static tables")
    p.add_argument("--known", action="store_true", help="known orders m and m'")
    p.add_argument("--wn", action="store_true", help="homotopy groups of SU(inf)/SU(n)")

    p = add("verify", cmd_verify, "run the invariant suite over a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=None,
                   help="largest k checked (default 2n(n^2-1) for each n)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        report, lines = args.func(args)
    except (UsageError, ParityMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(lines))
        for note in report.notes:
            print(f"note: {note}")
    return EXIT_MISMATCH if report.status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
