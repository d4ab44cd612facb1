"""Command-line front end.

Subcommands:

* ``verify``    one congruence instance (both sides, match flag, exit code);
* ``sweep``     the default or a configured grid of instances;
* ``lemmas``    the supporting-congruence suites (selectable by id);
* ``bernoulli`` exact Bernoulli tables with optional reductions.

Exit codes: 0 all checks match, 1 usage or precondition error, 2 at least one
congruence mismatch.  Output goes to stdout, diagnostics to stderr.  The
``CONGRUENCE_LAB_THREADS`` environment variable overrides the configured
worker count for sweeps.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator

from .bernoulli import bernoulli_exact, bernoulli_mod_p, check_von_staudt_clausen
from .harmonic import WeightTriple, shared_weight_primes, verify_main_theorem
from .lemmas import (
    LemmaInstance,
    arith_prog_inverse_sum,
    check_U_congruences,
    double_sum_mod_cp,
    double_sum_same_residue,
    floor_weighted_sum,
    hk_pair_sum,
    inverse_power_sum,
)
from .modring import Modulus, NotPAdicIntegerError, is_prime, p_valuation
from .poly import (
    check_induction_step,
    check_reflection,
    check_shift_lemma,
    extract_triple_coefficient,
)
from .harmonic import triple_sum_bruteforce

# The default verification grid.
DEFAULT_PRIMES = (3, 5, 7, 11, 13)
DEFAULT_EXPONENTS = (1, 2)
DEFAULT_COFACTORS = (1, 2, 4, 7, 14, 15)
DEFAULT_WEIGHTS = (
    (1, 1, 1, 1),
    (1, 1, 2, 2),
    (1, 2, 3, 6),
    (2, 3, 4, 12),
    (1, 2, 3, 12),
    (2, 2, 2, 2),
)
DEFAULT_MAX_AN = 3000

# Induction-step default grid: (p, r) bases with cofactor 1.
INDUCTION_BASES = ((3, 1), (5, 1), (3, 2), (7, 1))
INDUCTION_PRIMES = (2, 3, 5, 7)
INDUCTION_EXPONENTS = (1, 2)
INDUCTION_WEIGHTS = ((1, 1, 1, 1), (1, 2, 3, 6))

SWEEP_COLUMNS = ("p", "r", "n", "a", "A", "lhs", "rhs", "modulus", "match", "elapsed_ms")
LEMMA_COLUMNS = ("lemma", "params", "computed", "expected", "modulus", "match")

LEMMA_IDS = (
    "arith-prog",
    "mod-c",
    "U",
    "hk",
    "mod-cp",
    "floor",
    "inv-power",
    "reflection",
    "shift",
    "induction",
    "key",
)


@dataclass
class SweepConfig:
    """Grid description for the sweep command."""

    primes: list[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    exponents: list[int] = field(default_factory=lambda: list(DEFAULT_EXPONENTS))
    cofactors: list[int] = field(default_factory=lambda: list(DEFAULT_COFACTORS))
    weights: list[tuple[int, int, int, int]] = field(
        default_factory=lambda: [tuple(w) for w in DEFAULT_WEIGHTS]
    )
    max_an: int = DEFAULT_MAX_AN
    qs: list[int] = field(default_factory=list)
    ss: list[int] = field(default_factory=list)
    fmt: str = "human"
    jobs: int = 1

    @classmethod
    def from_file(cls, path: str | Path) -> "SweepConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {
            "primes", "exponents", "cofactors", "weights",
            "max_an", "qs", "ss", "format", "jobs",
        }
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls()
        for key in ("primes", "exponents", "cofactors", "qs", "ss"):
            if key in raw:
                setattr(cfg, key, [int(x) for x in raw[key]])
        if "weights" in raw:
            cfg.weights = [_as_weight(w) for w in raw["weights"]]
        if "max_an" in raw:
            cfg.max_an = int(raw["max_an"])
        if "format" in raw:
            cfg.fmt = str(raw["format"])
        if "jobs" in raw:
            cfg.jobs = int(raw["jobs"])
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.fmt not in ("human", "json", "csv"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        for p in self.primes:
            if p < 3 or not is_prime(p):
                raise ValueError(f"sweep primes must be odd primes, got {p}")
        for t in self.weights:
            WeightTriple(*t)  # validates positivity and the common multiple


def _as_weight(entry) -> tuple[int, int, int, int]:
    if isinstance(entry, dict):
        a = entry["a"]
        return (int(a[0]), int(a[1]), int(a[2]), int(entry["A"]))
    a1, a2, a3, A = entry
    return (int(a1), int(a2), int(a3), int(A))


def expand_grid(cfg: SweepConfig) -> list[tuple]:
    """Grid points in deterministic order, preconditions applied.

    Cofactors sharing a factor with p, weights divisible by p, and instances
    beyond the A*n bound are skipped rather than rejected.
    """
    points: list[tuple] = []
    for p in cfg.primes:
        for r in cfg.exponents:
            for cof in cfg.cofactors:
                if cof < 1 or gcd(cof, p) != 1:
                    continue
                n = p**r * cof
                for a1, a2, a3, A in cfg.weights:
                    if any(a % p == 0 for a in (a1, a2, a3)):
                        continue
                    if A * n > cfg.max_an:
                        continue
                    points.append(("main", p, r, cof, a1, a2, a3, A))
    if cfg.qs and cfg.ss:
        for p in cfg.primes:
            for r in cfg.exponents:
                for cof in cfg.cofactors:
                    if cof < 1 or gcd(cof, p) != 1:
                        continue
                    n = p**r * cof
                    for a1, a2, a3, A in cfg.weights:
                        if any(a % p == 0 for a in (a1, a2, a3)):
                            continue
                        for q in cfg.qs:
                            if q == p or not is_prime(q) or n % q == 0:
                                continue
                            for s in cfg.ss:
                                if A * q**s * n > cfg.max_an:
                                    continue
                                points.append(
                                    ("induction", p, r, cof, a1, a2, a3, A, q, s)
                                )
    return points


def _sweep_point(point: tuple) -> dict:
    kind = point[0]
    if kind == "main":
        _, p, r, cof, a1, a2, a3, A = point
        report = verify_main_theorem(WeightTriple(a1, a2, a3, A), p**r * cof, p)
        return _report_row(report, n=p**r * cof)
    _, p, r, cof, a1, a2, a3, A, q, s = point
    n = p**r * cof
    report = check_induction_step(WeightTriple(a1, a2, a3, A), n, p, r, q, s)
    # the row's n names the level actually summed on the left-hand side
    return _report_row(report, n=q**s * n)


def _report_row(report, n: int) -> dict:
    params = report.params
    return {
        "p": params["p"],
        "r": params["r"],
        "n": n,
        "a": list(params["a"]),
        "A": params["A"],
        "lhs": str(report.lhs.value),
        "rhs": str(report.rhs.value),
        "modulus": str(report.lhs.modulus),
        "match": report.match,
        "elapsed_ms": report.elapsed * 1000.0,
    }


def _effective_jobs(configured: int) -> int:
    env = os.environ.get("CONGRUENCE_LAB_THREADS")
    if env:
        return max(1, int(env))
    return max(1, configured)


def run_sweep(cfg: SweepConfig) -> list[dict]:
    """All grid rows, in grid order regardless of the worker count."""
    points = expand_grid(cfg)
    jobs = _effective_jobs(cfg.jobs)
    if jobs > 1 and len(points) > 1:
        chunk = max(1, len(points) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_point, points, chunksize=chunk))
    return [_sweep_point(pt) for pt in points]


# ---------------------------------------------------------------------------
# lemma-suite grids


def _lemma_row(inst: LemmaInstance) -> dict:
    return {
        "lemma": inst.lemma,
        "params": inst.params,
        "computed": str(inst.computed),
        "expected": str(inst.expected),
        "modulus": str(inst.modulus),
        "match": inst.match,
    }


def iter_arith_prog(ps=(3, 5, 7), rs=(1, 2), us=(1, 2, 3), ms=(1, 2, 3, 4, 5, 6)) -> Iterator[LemmaInstance]:
    for p in ps:
        for r in rs:
            for u in us:
                for m in ms:
                    if m % p == 0:
                        continue
                    for ell in range(m):
                        res = arith_prog_inverse_sum(u, m, ell, p, r)
                        yield LemmaInstance(
                            "arith-prog",
                            {"u": u, "m": m, "ell": ell, "p": p, "r": r},
                            res.value,
                            0,
                            res.modulus,
                            res.value == 0,
                        )


def iter_mod_c(ps=(3, 5), rs=(1, 2), abs_=(1, 2, 3, 4), cs=(1, 2, 3, 5), uvs=(1, 2)) -> Iterator[LemmaInstance]:
    for p in ps:
        for r in rs:
            for c in cs:
                if c % p == 0:
                    continue
                for a in abs_:
                    if gcd(a, c) != 1:
                        continue
                    for b in abs_:
                        if gcd(b, c) != 1:
                            continue
                        for u in uvs:
                            for v in uvs:
                                res = double_sum_same_residue(a, b, c, u, v, p, r)
                                yield LemmaInstance(
                                    "mod-c",
                                    {"a": a, "b": b, "c": c, "u": u, "v": v, "p": p, "r": r},
                                    res.value,
                                    0,
                                    res.modulus,
                                    res.value == 0,
                                )


def iter_U(ps=(3, 5, 7), rs=(1, 2, 3), uvs=(1, 2, 3)) -> Iterator[LemmaInstance]:
    """Parts (a) and (b) once per (s, u); parts (c) and (d) over the full
    (s, t, u, v) product where r >= 2 permits them."""
    for p in ps:
        coprime = [s for s in range(1, p * p) if s % p]
        for r in rs:
            for s in coprime:
                for u in uvs:
                    yield from check_U_congruences(s, s, u, u, p, r)[:2]
                    if r >= 2:
                        for t in coprime:
                            for v in uvs:
                                yield from check_U_congruences(s, t, u, v, p, r)[2:]


def iter_hk(ps=(3, 5, 7), as_=(1, 2, 3, 4, 5), cs=(1, 2, 5)) -> Iterator[LemmaInstance]:
    for p in ps:
        for c in cs:
            if c % p == 0:
                continue
            for a in as_:
                if gcd(a, c * p) != 1:
                    continue
                yield hk_pair_sum(a, c, p)


def iter_mod_cp(ps=(3, 5, 7), rs=(1, 2), abs_=(1, 2, 3, 4, 5), cs=(1, 2, 5), uvs=(1, 2)) -> Iterator[LemmaInstance]:
    for p in ps:
        for r in rs:
            for c in cs:
                if c % p == 0:
                    continue
                for a in abs_:
                    if a % p == 0 or gcd(a, c) != 1:
                        continue
                    for b in abs_:
                        if b % p == 0 or gcd(b, c) != 1:
                            continue
                        for u in uvs:
                            for v in uvs:
                                yield double_sum_mod_cp(a, b, c, u, v, p, r)


def iter_floor(ps=(3, 5, 7), as_=(1, 2, 3, 4, 5), cs=(1, 2, 5)) -> Iterator[LemmaInstance]:
    for p in ps:
        for c in cs:
            if c % p == 0:
                continue
            for a in as_:
                if gcd(a, c * p) != 1:
                    continue
                yield floor_weighted_sum(a, c, p)


def iter_inv_power(ps=(3, 5, 7)) -> Iterator[LemmaInstance]:
    for p in ps:
        if p == 3:
            for m in range(1, 10):
                yield inverse_power_sum(2, m, 3)
        else:
            for m in range(1, 7):
                if m % p:
                    yield inverse_power_sum(2, m, p)
        for m in range(1, 7):
            yield inverse_power_sum(3, m, p)
        if p == 3:
            for m in range(1, 7):
                yield inverse_power_sum(4, m, 3)


def iter_reflection(weights=DEFAULT_WEIGHTS, Ns=(3, 5, 9, 15)) -> Iterator[LemmaInstance]:
    for a1, a2, a3, A in weights:
        w = WeightTriple(a1, a2, a3, A)
        for N in Ns:
            ok = check_reflection(w, N)
            yield LemmaInstance(
                "reflection",
                {"a": [a1, a2, a3], "A": A, "N": N},
                int(ok),
                1,
                N,
                ok,
            )


def iter_shift(Ls=(1, 2, 3, 4), Ms=(1, 2, 3, 4), Ns=(3, 5, 9, 15)) -> Iterator[LemmaInstance]:
    for L in Ls:
        for M in Ms:
            for N in Ns:
                ok = check_shift_lemma(L, M, N)
                yield LemmaInstance(
                    "shift", {"L": L, "M": M, "N": N}, int(ok), 1, N, ok
                )


def iter_induction(
    bases=INDUCTION_BASES,
    qs=INDUCTION_PRIMES,
    ss=INDUCTION_EXPONENTS,
    weights=INDUCTION_WEIGHTS,
    max_an=DEFAULT_MAX_AN,
) -> Iterator[LemmaInstance]:
    for p, r in bases:
        n = p**r
        for a1, a2, a3, A in weights:
            if any(a % p == 0 for a in (a1, a2, a3)):
                continue
            w = WeightTriple(a1, a2, a3, A)
            for q in qs:
                if q == p or n % q == 0:
                    continue
                for s in ss:
                    if A * q**s * n > max_an:
                        continue
                    rep = check_induction_step(w, n, p, r, q, s)
                    yield LemmaInstance(
                        "induction",
                        rep.params,
                        rep.lhs.value,
                        rep.rhs.value,
                        rep.lhs.modulus,
                        rep.match,
                    )


def iter_key_equivalence(cfg: SweepConfig | None = None, max_an: int = 600) -> Iterator[LemmaInstance]:
    """Coefficient-extraction route vs brute force on the default grid."""
    cfg = cfg or SweepConfig()
    for point in expand_grid(cfg):
        if point[0] != "main":
            continue
        _, p, r, cof, a1, a2, a3, A = point
        n = p**r * cof
        if A * n > max_an:
            continue
        w = WeightTriple(a1, a2, a3, A)
        modulus = Modulus(p, r)
        coeff = extract_triple_coefficient(w, n, modulus)
        brute = triple_sum_bruteforce(w, n, modulus)
        yield LemmaInstance(
            "key",
            {"p": p, "r": r, "n": n, "a": [a1, a2, a3], "A": A},
            coeff.value,
            brute.value,
            modulus.m,
            coeff == brute,
        )


_LEMMA_RUNNERS = {
    "arith-prog": lambda sel: iter_arith_prog(ps=sel.ps or (3, 5, 7), rs=sel.rs or (1, 2)),
    "mod-c": lambda sel: iter_mod_c(ps=sel.ps or (3, 5), rs=sel.rs or (1, 2)),
    "U": lambda sel: iter_U(ps=sel.ps or (3, 5, 7), rs=sel.rs or (1, 2, 3)),
    "hk": lambda sel: iter_hk(ps=sel.ps or (3, 5, 7)),
    "mod-cp": lambda sel: iter_mod_cp(ps=sel.ps or (3, 5, 7), rs=sel.rs or (1, 2)),
    "floor": lambda sel: iter_floor(ps=sel.ps or (3, 5, 7)),
    "inv-power": lambda sel: iter_inv_power(ps=sel.ps or (3, 5, 7)),
    "reflection": lambda sel: iter_reflection(Ns=sel.Ns or (3, 5, 9, 15)),
    "shift": lambda sel: iter_shift(Ns=sel.Ns or (3, 5, 9, 15)),
    "induction": lambda sel: iter_induction(),
    "key": lambda sel: iter_key_equivalence(),
}


@dataclass
class _LemmaSelection:
    ps: tuple[int, ...] | None = None
    rs: tuple[int, ...] | None = None
    Ns: tuple[int, ...] | None = None


# ---------------------------------------------------------------------------
# output


def _human_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.2f}"
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def emit_rows(rows: Iterable[dict], columns: tuple[str, ...], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(list(rows), stream, indent=2, default=str)
        stream.write("\n")
    elif fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
    else:
        for row in rows:
            stream.write(
                "  ".join(f"{c}={_human_cell(row[c])}" for c in columns) + "\n"
            )


def _csv_cell(value) -> str:
    if isinstance(value, list):
        return ",".join(str(x) for x in value)
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


# ---------------------------------------------------------------------------
# subcommands


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _parse_weight_list(text: str) -> list[tuple[int, int, int, int]]:
    """Weight sets like ``1,1,1:1;1,2,3:6`` (a1,a2,a3:A pairs split on ';')."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        triple, _, A = chunk.partition(":")
        a = _parse_int_list(triple)
        if len(a) != 3 or not A:
            raise ValueError(f"bad weight entry {chunk!r}, expected a1,a2,a3:A")
        out.append((a[0], a[1], a[2], int(A)))
    return out


def cmd_verify(args) -> int:
    w = WeightTriple(*_weights_from_args(args))
    p = args.p
    if args.n is not None:
        n = args.n
        if n < 1 or n % p != 0:
            raise ValueError(f"p={p} must divide n={n}")
        r = p_valuation(n, p)
        if args.r is not None and args.r != r:
            raise ValueError(f"--r {args.r} disagrees with p-valuation {r} of n={n}")
    else:
        if args.r is None or args.cofactor is None:
            raise ValueError("provide either --n or both --r and --cofactor")
        if args.cofactor < 1 or gcd(args.cofactor, p) != 1:
            raise ValueError(f"cofactor must be positive and coprime to p={p}")
        n = p**args.r * args.cofactor
    report = verify_main_theorem(w, n, p)
    row = _report_row(report, n=n)
    emit_rows([row], SWEEP_COLUMNS, args.format, sys.stdout)
    if not report.match:
        _warn_if_out_of_scope(row)
    return 0 if report.match else 2


def _weights_from_args(args) -> tuple[int, int, int, int]:
    a = _parse_int_list(args.weights)
    if len(a) != 3:
        raise ValueError(f"--weights expects three integers, got {args.weights!r}")
    return (a[0], a[1], a[2], args.A)


def cmd_sweep(args) -> int:
    if args.config:
        cfg = SweepConfig.from_file(args.config)
    else:
        cfg = SweepConfig()
    if args.p:
        cfg.primes = _parse_int_list(args.p)
    if args.r:
        cfg.exponents = _parse_int_list(args.r)
    if args.cofactors:
        cfg.cofactors = _parse_int_list(args.cofactors)
    if args.weights:
        cfg.weights = _parse_weight_list(args.weights)
    if args.max_an is not None:
        cfg.max_an = args.max_an
    if args.qs:
        cfg.qs = _parse_int_list(args.qs)
    if args.ss:
        cfg.ss = _parse_int_list(args.ss)
    if args.format:
        cfg.fmt = args.format
    if args.jobs is not None:
        cfg.jobs = args.jobs
    cfg.validate()
    rows = run_sweep(cfg)
    emit_rows(rows, SWEEP_COLUMNS, cfg.fmt, sys.stdout)
    mismatches = 0
    for row in rows:
        if not row["match"]:
            mismatches += 1
            _warn_if_out_of_scope(row)
    print(f"sweep: {len(rows)} rows, {mismatches} mismatches", file=sys.stderr)
    return 2 if mismatches else 0


def _warn_if_out_of_scope(row: dict) -> None:
    """Prominent stderr note for mismatches outside the verified scope."""
    a = row["a"]
    w = WeightTriple(a[0], a[1], a[2], row["A"])
    shared = shared_weight_primes(w, row["n"], row["p"])
    if shared:
        print(
            f"MISMATCH out of scope: n={row['n']} shares prime(s) {shared} with "
            f"weights {tuple(a)}; the closed form does not cover this instance "
            f"(lhs={row['lhs']}, rhs={row['rhs']} mod {row['modulus']})",
            file=sys.stderr,
        )
    else:
        print(
            f"MISMATCH inside the verified scope: n={row['n']}, weights {tuple(a)}, "
            f"A={row['A']} (lhs={row['lhs']}, rhs={row['rhs']} mod {row['modulus']}); "
            "this would indicate an implementation bug",
            file=sys.stderr,
        )


def cmd_lemmas(args) -> int:
    ids = [x.strip() for x in args.id.split(",")] if args.id != "all" else list(LEMMA_IDS)
    for lemma_id in ids:
        if lemma_id not in LEMMA_IDS:
            raise ValueError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")
    sel = _LemmaSelection(
        ps=tuple(_parse_int_list(args.p)) if args.p else None,
        rs=tuple(_parse_int_list(args.r)) if args.r else None,
        Ns=tuple(_parse_int_list(args.N)) if args.N else None,
    )
    total = 0
    mismatches = 0

    def rows() -> Iterator[dict]:
        nonlocal total, mismatches
        for lemma_id in ids:
            for inst in _LEMMA_RUNNERS[lemma_id](sel):
                total += 1
                if not inst.match:
                    mismatches += 1
                yield _lemma_row(inst)

    emit_rows(rows(), LEMMA_COLUMNS, args.format, sys.stdout)
    print(f"lemmas: {total} instances, {mismatches} mismatches", file=sys.stderr)
    return 2 if mismatches else 0


def cmd_bernoulli(args) -> int:
    if args.max_index < 0:
        raise ValueError("--max-index must be >= 0")
    table = bernoulli_exact(args.max_index)
    for m, value in enumerate(table):
        line = f"B_{m} = {value}"
        if args.mod_p:
            try:
                line += f"  mod {args.mod_p}: {bernoulli_mod_p(m, args.mod_p).value}"
            except NotPAdicIntegerError:
                line += f"  mod {args.mod_p}: -"
        if args.check_vsc and m >= 2 and m % 2 == 0:
            line += f"  vsc: {'ok' if check_von_staudt_clausen(m // 2) else 'FAIL'}"
        print(line)
    return 0


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1 (2 means mismatch)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="congruence-lab",
        description="Exact verification of harmonic triple-sum congruences mod p^r.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pv = sub.add_parser("verify", help="verify one instance")
    pv.add_argument("--p", type=int, required=True, help="odd prime p")
    pv.add_argument("--r", type=int, help="exponent r (with --cofactor)")
    pv.add_argument("--cofactor", type=int, help="n = p^r * cofactor")
    pv.add_argument("--n", type=int, help="give n directly instead of --r/--cofactor")
    pv.add_argument("--weights", required=True, help="a1,a2,a3")
    pv.add_argument("--A", type=int, required=True, help="common multiple of the weights")
    pv.add_argument("--format", choices=("human", "json", "csv"), default="human")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("sweep", help="verify a grid of instances")
    ps.add_argument("--config", help="JSON config file")
    ps.add_argument("--p", help="comma list of primes")
    ps.add_argument("--r", help="comma list of exponents")
    ps.add_argument("--cofactors", help="comma list of cofactors")
    ps.add_argument("--weights", help="weight sets, e.g. 1,1,1:1;1,2,3:6")
    ps.add_argument("--max-an", type=int, help="skip instances with A*n beyond this")
    ps.add_argument("--qs", help="comma list of lift primes q (adds induction rows)")
    ps.add_argument("--ss", help="comma list of lift exponents s")
    ps.add_argument("--format", choices=("human", "json", "csv"))
    ps.add_argument("--jobs", type=int, help="worker processes (env CONGRUENCE_LAB_THREADS overrides)")
    ps.set_defaults(func=cmd_sweep)

    pl = sub.add_parser("lemmas", help="run the supporting-congruence suites")
    pl.add_argument("--id", default="all", help=f"comma list from: {', '.join(LEMMA_IDS)}")
    pl.add_argument("--p", help="restrict to these primes (comma list)")
    pl.add_argument("--r", help="restrict to these exponents (comma list)")
    pl.add_argument("--N", help="restrict reflection/shift to these N (comma list)")
    pl.add_argument("--format", choices=("human", "json", "csv"), default="human")
    pl.set_defaults(func=cmd_lemmas)

    pb = sub.add_parser("bernoulli", help="print exact Bernoulli numbers")
    pb.add_argument("--max-index", type=int, required=True)
    pb.add_argument("--mod-p", type=int, help="also reduce each entry mod this odd prime")
    pb.add_argument("--check-vsc", action="store_true", help="append the integrality check")
    pb.set_defaults(func=cmd_bernoulli)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
