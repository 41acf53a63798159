"""Command-line front end.

Subcommands: ``basis`` prints a canonical basis expansion, ``verify`` runs a
named verification suite, ``tables`` diffs recomputed expansions against the
embedded published tables, ``dump-discform`` emits the discriminant-form data.
Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 precision error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction

from . import discforms, magnetic, tables, vvforms
from .series import LatticeError, PrecisionError

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


@dataclass
class Config:
    terms: int
    cache_dir: str
    output_format: str

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError("terms must be at least 1")


def _qorder_for_terms(kind: str, index: int, terms: int) -> Fraction:
    """Truncation order covering the first ``terms`` printable coefficients."""
    residues = (1, 3, 7) if kind == "F" else (1, 5, 7)
    count = 0
    m = 0
    while count < terms:
        m += 1
        if m % 8 in residues:
            count += 1
    return Fraction(m + 1, 8)


def _cache_path(cfg: Config, kind: str, index: int) -> str:
    return os.path.join(cfg.cache_dir, f"{kind}{index}.json")


def _load_cached(cfg: Config, kind: str, index: int, qorder: Fraction):
    path = _cache_path(cfg, kind, index)
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            entry = vvforms.BasisEntry.from_json(json.load(fh))
    except (ValueError, KeyError):
        return None  # unknown version or corrupt: rebuild
    if entry.form.trunc < qorder:
        return None
    return entry


def _store_cached(cfg: Config, entry: vvforms.BasisEntry) -> None:
    os.makedirs(cfg.cache_dir, exist_ok=True)
    path = _cache_path(cfg, entry.kind, entry.index)
    fd, tmp = tempfile.mkstemp(dir=cfg.cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump(entry.to_json(), fh)
    os.replace(tmp, path)


def build_entry(cfg: Config, kind: str, index: int, terms: int) -> vvforms.BasisEntry:
    qorder = _qorder_for_terms(kind, index, terms)
    cached = _load_cached(cfg, kind, index, qorder)
    if cached is not None:
        return cached
    builder = vvforms.basis_G if kind == "G" else vvforms.basis_F
    entry = builder(index, qorder)
    _store_cached(cfg, entry)
    return entry


def _format_entry(entry: vvforms.BasisEntry, terms: int, fmt: str) -> str:
    name = f"{entry.kind}_{entry.index}"
    coeffs = [(-entry.index, Fraction(1))]
    count = 0
    m = 0
    while count < terms:
        m += 1
        if Fraction(m, 8) >= entry.form.trunc:
            break
        c = entry.coeff(m)
        if m % 8 in ((1, 3, 7) if entry.kind == "F" else (1, 5, 7)):
            coeffs.append((m, c))
            count += 1
    if fmt == "json":
        return json.dumps(
            {"name": name, "coefficients": [[m, str(c)] for m, c in coeffs]}, indent=None
        )
    if fmt == "csv":
        lines = ["m,coefficient"] + [f"{m},{c}" for m, c in coeffs]
        return "\n".join(lines)
    parts = []
    for m, c in coeffs:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign} {body}q^({m}/8)")
    joined = " ".join(parts).lstrip("+ ")
    last_m = coeffs[-1][0] if coeffs else 0
    return f"{name} = {joined} + O(q^({last_m + 1}/8))"


def cmd_basis(cfg: Config, kind: str, index: int) -> int:
    entry = build_entry(cfg, kind, index, cfg.terms)
    print(_format_entry(entry, cfg.terms, cfg.output_format))
    return EXIT_PASS


def cmd_tables(cfg: Config) -> int:
    mismatches = []
    qorder = Fraction(16, 8)
    for d, row in tables.G_TABLE.items():
        entry = vvforms.basis_G(d, qorder)
        for m, expected in row.items():
            got = entry.coeff(m)
            if got != expected:
                mismatches.append(("G", d, m, expected, got))
    for D, row in tables.F_TABLE.items():
        entry = vvforms.basis_F(D, qorder)
        for m, expected in row.items():
            got = entry.coeff(m)
            if got != expected:
                mismatches.append(("F", D, m, expected, got))
    total = sum(len(r) for r in tables.G_TABLE.values()) + sum(
        len(r) for r in tables.F_TABLE.values()
    )
    if mismatches:
        for kind, idx, m, expected, got in mismatches:
            print(f"MISMATCH {kind}_{idx} at q^({m}/8): table {expected}, computed {got}")
        print(f"{len(mismatches)} mismatches out of {total} table entries")
        return EXIT_FAIL
    print(f"all {total} published table entries reproduced exactly")
    return EXIT_PASS


def _verify_conjecture1(nmax: int) -> dict:
    phi = magnetic.phi_series(nmax + 2)
    return magnetic.verify_divisibility(phi, nmax, "phi")


def _verify_scalar64(nmax: int) -> dict:
    series = magnetic.scalar_magnetic_series(nmax + 2)
    return magnetic.verify_divisibility(series, nmax, "64*Delta/E4^2")


def _verify_family(nmax: int) -> dict:
    t0 = time.perf_counter()
    ds = (1, 3, 7, 11, 15, 19, 23)
    failures = []
    for d, lift in magnetic.family_lifts(ds, nmax).items():
        rep = magnetic.verify_divisibility(lift, nmax)
        failures.extend([d, n] for n in rep["failures"])
    return {
        "target": f"family divisibility d in {list(ds)}",
        "nmax": nmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def _verify_hecke(nmax: int) -> dict:
    t0 = time.perf_counter()
    failures = []
    for d in (1, 3, 7, 9):
        for p in (3, 5):
            if not vvforms.hecke_identity_check(d, p, max(nmax, 20)):
                failures.append([d, p])
    return {
        "target": "Hecke identities (d, p) in {1,3,7,9} x {3,5}",
        "nmax": max(nmax, 20),
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def _verify_duality(nmax: int) -> dict:
    t0 = time.perf_counter()
    d_max = min(nmax if nmax > 1 else 95, 95)
    big_d_max = min(nmax + 2 if nmax > 1 else 97, 97)
    failures = []
    g_entries = {
        d: vvforms.basis_G(d, Fraction(big_d_max + 2, 8))
        for d in range(1, d_max + 1)
        if d % 8 in (1, 3, 7)
    }
    for big_d in range(1, big_d_max + 1):
        if big_d % 8 not in (1, 5, 7):
            continue
        f_entry = vvforms.basis_F(big_d, Fraction(d_max + 2, 8))
        for d, g_entry in g_entries.items():
            if f_entry.coeff(d) + g_entry.coeff(big_d) != 0:
                failures.append([big_d, d])
    return {
        "target": f"Zagier duality D <= {big_d_max}, d <= {d_max}",
        "nmax": nmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def _verify_p3(nmax: int) -> dict:
    t0 = time.perf_counter()
    pmax = max(nmax, 100)
    failures = []
    rep = magnetic.verify_phi_prime_cubes(pmax)
    failures.extend(["phi", p] for p in rep["failures"])
    for d in (1, 3, 7, 11, 15, 17, 19, 23):
        for p in (3, 5):
            sub = magnetic.verify_hecke_congruence(d, p, 50)
            failures.extend([d, p, n] for n in sub["failures"])
    return {
        "target": "prime-cube congruences",
        "nmax": pmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def _verify_representation(_: int) -> dict:
    t0 = time.perf_counter()
    from .cyclotomic import CycEight, I_UNIT, SQRT2

    failures = []

    def check(label, ok):
        if not ok:
            failures.append(label)

    check("orth group order 32", len(discforms.orth_group()) == 32)
    check("special orth group order 16", len(discforms.so_group()) == 16)
    check("isotropic count 12", len(discforms.isotropic_set()) == 12)
    _, a0, a1, a2 = discforms.chi_orbits()
    check("orbit sizes 8/4/8", (len(a0), len(a1), len(a2)) == (8, 4, 8))
    w = discforms.weil_matrices()
    i3 = discforms.CycMatrix.identity(3)
    s2 = w.varrho_S * w.varrho_S
    check("varrho(S)^2 = -i", s2 == i3.scale(-I_UNIT))
    check("braid relation", (w.varrho_S * w.varrho_T) ** 3 == s2)
    check("varrho(S)^8 = 1", s2**4 == i3)
    d_mat = discforms.CycMatrix(
        [
            [CycEight(1), CycEight(0), CycEight(0)],
            [CycEight(0), SQRT2, CycEight(0)],
            [CycEight(0), CycEight(0), CycEight(1)],
        ]
    )
    d_inv = discforms.CycMatrix(
        [
            [CycEight(1), CycEight(0), CycEight(0)],
            [CycEight(0), SQRT2 / 2, CycEight(0)],
            [CycEight(0), CycEight(0), CycEight(1)],
        ]
    )
    u = d_mat * w.varrho_S * d_inv
    check("rescaled unitarity", u * u.conj_transpose() == i3)
    rho_s2 = w.rho_S * w.rho_S
    check("64-dim braid", (w.rho_S * w.rho_T) ** 3 == rho_s2)
    check(
        "commutes with orthogonal group",
        all(discforms.commutes_with_weil(s) for s in discforms.orth_group()),
    )
    return {
        "target": "representation suite",
        "nmax": 0,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


VERIFY_TARGETS = {
    "conjecture1": (_verify_conjecture1, 499),
    "scalar64": (_verify_scalar64, 300),
    "family": (_verify_family, 199),
    "hecke": (_verify_hecke, 20),
    "duality": (_verify_duality, 95),
    "p3": (_verify_p3, 100),
    "representation": (_verify_representation, 0),
}


def cmd_verify(cfg: Config, target: str, nmax: int | None) -> int:
    runner, default_bound = VERIFY_TARGETS[target]
    report = runner(nmax if nmax is not None else default_bound)
    print(json.dumps(report))
    return EXIT_PASS if report["pass"] else EXIT_FAIL


def cmd_dump_discform(cfg: Config) -> int:
    print(json.dumps(discforms.dump(), indent=1))
    return EXIT_PASS


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="magforms", description=__doc__)
    parser.add_argument("--terms", type=int, default=16, help="justified coefficient count")
    parser.add_argument("--cache-dir", default=".magforms_cache")
    parser.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="print a canonical basis expansion")
    p_basis.add_argument("kind", choices=("G", "F"))
    p_basis.add_argument("index", type=int)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("target", choices=sorted(VERIFY_TARGETS))
    p_verify.add_argument("--nmax", type=int, default=None)

    sub.add_parser("tables", help="diff computed tables against the published ones")
    sub.add_parser("dump-discform", help="dump the discriminant form data as JSON")

    args = parser.parse_args(argv)

    try:
        cfg = Config(terms=args.terms, cache_dir=args.cache_dir, output_format=args.format)
        if args.command == "basis":
            residues = (1, 3, 7) if args.kind == "G" else (1, 5, 7)
            if args.index <= 0 or args.index % 8 not in residues:
                print(
                    f"error: {args.kind} index must be positive and = {residues} mod 8",
                    file=sys.stderr,
                )
                return EXIT_USAGE
            return cmd_basis(cfg, args.kind, args.index)
        if args.command == "verify":
            return cmd_verify(cfg, args.target, args.nmax)
        if args.command == "tables":
            return cmd_tables(cfg)
        if args.command == "dump-discform":
            return cmd_dump_discform(cfg)
    except (PrecisionError, LatticeError) as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
