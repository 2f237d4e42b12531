"""Command-line surface: triangles, single entries, verification sweeps,
gamma-basis expansions, and catalog cross-checks."""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import identities, oracle
from .catalog import CATALOG, triangle_rows
from .identities import VerifyReport
from .polyring import Poly, parse_poly
from .triangles import (FAMILIES, SigmaTauSpec, build_triangle, narayana_entry,
                        narayana_poly)


@click.group()
def main():
    """Exact verification of recursive-matrix minor and permanent identities."""


def _spec_from_options(family, sigma0, sigma, tau):
    if family:
        if family not in FAMILIES:
            raise click.UsageError(
                f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
        return FAMILIES[family]
    if sigma is None or tau is None:
        raise click.UsageError(
            "give --family, or both --sigma and --tau (plus optional --sigma0)")
    tau_p = parse_poly(tau)
    head = (parse_poly(sigma0),) if sigma0 is not None else ()
    return SigmaTauSpec(sigma_head=head, sigma_tail=parse_poly(sigma),
                        tau_tail=tau_p, allow_zero_tau=tau_p.is_zero())


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _render_triangle(name, tri, fmt):
    rows = [[str(p) for p in row] for row in tri.rows]
    if fmt == "json":
        return json.dumps({"family": name, "depth": tri.depth, "rows": rows},
                          indent=2) + "\n"
    return "".join(",".join(row) + "\n" for row in rows)


@main.command()
@click.option("--family", default=None, help="named family "
              "(shapiro, schroder, narayana, pascal, xy0, generic)")
@click.option("--sigma0", default=None, help="sigma_0 override (canonical poly text)")
@click.option("--sigma", default=None, help="eventual sigma value")
@click.option("--tau", default=None, help="eventual tau value")
@click.option("--depth", default=5, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", default=None, type=click.Path())
def triangle(family, sigma0, sigma, tau, depth, fmt, out):
    """Print a triangle through the given depth."""
    spec = _spec_from_options(family, sigma0, sigma, tau)
    tri = build_triangle(spec, depth)
    _emit(_render_triangle(family or "custom", tri, fmt), out)


@main.command()
@click.option("--family", default=None)
@click.option("--sigma0", default=None)
@click.option("--sigma", default=None)
@click.option("--tau", default=None)
@click.argument("n", type=int)
@click.argument("k", type=int)
def entry(family, sigma0, sigma, tau, n, k):
    """Print the single entry (N, K) of a triangle."""
    spec = _spec_from_options(family, sigma0, sigma, tau)
    if not (0 <= k <= n):
        raise click.UsageError(f"need 0 <= k <= n, got ({n}, {k})")
    tri = build_triangle(spec, n)
    click.echo(str(tri.entry(n, k)))


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
def gamma(m, n):
    """Gamma-basis coefficients of the alternating minor sum F(M, N)."""
    if not (m > n >= 0):
        raise click.UsageError("need m > n >= 0")
    coeffs = identities.gamma_expand(identities.compute_F(m, n))
    click.echo(json.dumps({"m": m, "n": n,
                           "coefficients": [str(c) for c in coeffs]}))


SUITES = ("thm1", "thm2", "f-recurrence", "f-closed", "catalan", "thm4",
          "ballot", "gamma", "special", "ore", "all")

# Acceptance-criteria grids; used whenever a bound is not given explicitly.
_DEFAULTS = {
    "thm1": {"nmax": 8, "mmax": 8, "rmax": 3, "lmax": 3},
    "thm2": {"nmax": 8, "mmax": 8, "rmax": 3},
    "f-recurrence": {"nmax": 10, "mmax": 10},
    "f-closed": {"mmax": 10},
    "catalan": {"mmax": 10},
    "thm4": {"nmax": 10, "mmax": 10},
    "ballot": {"nmax": 10},
    "gamma": {"mmax": 8},
    "special": {"nmax": 10, "mmax": 8},
    "ore": {},
}


def _bound(suite, flags, name):
    if flags.get(name) is not None:
        return flags[name]
    return _DEFAULTS[suite].get(name, 0)


def _suite_jobs(suite, flags):
    """List of (sort_key, thunk) pairs producing VerifyReports."""
    jobs = []

    if suite == "thm1":
        nmax, mmax = _bound(suite, flags, "nmax"), _bound(suite, flags, "mmax")
        rmax, lmax = _bound(suite, flags, "rmax"), _bound(suite, flags, "lmax")
        fam = identities.minor_family(mmax + rmax + 1)
        for n in range(nmax + 1):
            for m in range(mmax + 1):
                for r in range(rmax + 1):
                    for ell in range(min(m, lmax) + 1):
                        jobs.append(((n, m, r, ell),
                                     lambda n=n, m=m, r=r, ell=ell:
                                     identities.verify_weighted_minor(
                                         n, m, r, ell, fam)))
    elif suite == "thm2":
        nmax, mmax = _bound(suite, flags, "nmax"), _bound(suite, flags, "mmax")
        rmax = _bound(suite, flags, "rmax")
        fam = identities.permanent_family(2 * mmax + rmax)
        for n in range(nmax + 1):
            for m in range(n, mmax + 1):
                for r in range(-rmax, rmax + 1):
                    if r < 0 and n < -r:
                        continue
                    jobs.append(((n, m, r),
                                 lambda n=n, m=m, r=r:
                                 identities.verify_weighted_permanent(
                                     n, m, r, fam)))
    elif suite == "f-recurrence":
        nmax, mmax = _bound(suite, flags, "nmax"), _bound(suite, flags, "mmax")
        for m in range(1, mmax + 1):
            for n in range(nmax + 1):
                jobs.append(((m, n),
                             lambda m=m, n=n:
                             identities.verify_F_recurrence(m, n)))
    elif suite == "f-closed":
        mmax = _bound(suite, flags, "mmax")
        for n in range(mmax):
            for m in range(n + 1, mmax + 1):
                jobs.append(((m, n), lambda m=m, n=n: VerifyReport(
                    "F-closed-form", {"m": m, "n": n},
                    identities.compute_F(m, n),
                    identities.F_closed_form(m, n))))
    elif suite == "catalan":
        mmax = _bound(suite, flags, "mmax")
        for n in range(mmax):
            for m in range(n + 1, mmax + 1):
                jobs.append(((m, n),
                             lambda m=m, n=n:
                             identities.verify_catalan_corollary(m, n)))
    elif suite == "thm4":
        nmax, mmax = _bound(suite, flags, "nmax"), _bound(suite, flags, "mmax")
        for n in range(nmax + 1):
            for m in range(mmax + 1):
                jobs.append(((m, n),
                             lambda m=m, n=n: identities.verify_thm4(m, n)))
    elif suite == "ballot":
        nmax = _bound(suite, flags, "nmax")
        for n in range(nmax + 1):
            jobs.append(((n,), lambda n=n: identities.verify_ballot(n)))
    elif suite == "gamma":
        mmax = _bound(suite, flags, "mmax")

        def gamma_report(m, n):
            f = identities.compute_F(m, n)
            coeffs = identities.gamma_expand(f)
            d = f.degree_in("z")
            recon = sum((Poly.const(c) * (Poly.var("z") ** j)
                         * ((Poly.var("z") + 1) ** (d - 2 * j))
                         for j, c in enumerate(coeffs)), Poly())
            return VerifyReport("gamma-reconstruction", {"m": m, "n": n},
                                recon, f)

        for n in range(mmax):
            for m in range(n + 1, mmax + 1):
                jobs.append(((m, n), lambda m=m, n=n: gamma_report(m, n)))
    elif suite == "special":
        depth = _bound(suite, flags, "nmax")
        pair_max = _bound(suite, flags, "mmax")
        jobs.append(((0,), lambda: identities.verify_specializations(
            depth, pair_max)))
    elif suite == "ore":
        zero = Poly()

        def fact_report():
            lhs = oracle.OP_G * oracle.OP_L1
            return VerifyReport(
                "ore-factorization", {},
                Poly.const(1) if lhs == oracle.OP_L else Poly(),
                Poly.const(1))

        jobs.append(((0,), fact_report))
        narayana_sq = lambda i: narayana_poly(i).subst("z",
                                                       Poly.var("z") ** 2)
        for n0 in range(16):
            jobs.append(((1, n0), lambda n0=n0: VerifyReport(
                "L1-annihilates-N(z^2)", {"n": n0},
                oracle.OP_L1.apply(narayana_sq, n0), zero)))
        f_diag = lambda i: identities.compute_F(i + 1, i)
        for n0 in range(13):
            jobs.append(((2, n0), lambda n0=n0: VerifyReport(
                "L-annihilates-F(n+1,n)", {"n": n0},
                oracle.OP_L.apply(f_diag, n0), zero)))
        for n in range(9):
            for m in range(9):
                jobs.append(((3, m, n), lambda m=m, n=n: VerifyReport(
                    "residue-vs-minor-sum", {"m": m, "n": n},
                    oracle.residue_F(m, n), identities.compute_F(m, n))))
    else:
        raise click.UsageError(f"unknown suite {suite!r}")
    return jobs


def run_suite(suite: str, flags: dict, jobs: int = 1):
    """Execute one suite; returns the reports in deterministic order."""
    pending = _suite_jobs(suite, flags)
    pending.sort(key=lambda item: item[0])
    thunks = [t for _, t in pending]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: t(), thunks))
    else:
        results = [t() for t in thunks]
    reports = []
    for res in results:
        if isinstance(res, list):
            reports.extend(res)
        else:
            reports.append(res)
    return reports


@main.command()
@click.option("--suite", type=click.Choice(SUITES), default="all",
              show_default=True)
@click.option("--nmax", type=int, default=None)
@click.option("--mmax", type=int, default=None)
@click.option("--rmax", type=int, default=None)
@click.option("--lmax", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="json", show_default=True)
@click.option("--out", default=None, type=click.Path())
@click.option("--jobs", type=int, default=1, show_default=True)
def verify(suite, nmax, mmax, rmax, lmax, fmt, out, jobs):
    """Run a verification sweep; exit 0 iff every identity checks out."""
    flags = {"nmax": nmax, "mmax": mmax, "rmax": rmax, "lmax": lmax}
    suites = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    lines, passed, failed = [], 0, 0
    for s in suites:
        for rep in run_suite(s, flags, jobs):
            if rep.equal:
                passed += 1
            else:
                failed += 1
            if fmt == "json":
                lines.append(json.dumps(rep.to_record(), sort_keys=True))
            else:
                params = ";".join(f"{k}={v}"
                                  for k, v in sorted(rep.parameters.items()))
                lines.append(",".join([rep.identity_id, params,
                                       str(rep.equal), str(rep.lhs),
                                       str(rep.rhs)]))
    summary = f"checked={passed + failed} passed={passed} failed={failed}"
    _emit("".join(line + "\n" for line in lines), out)
    click.echo(summary)
    if failed:
        sys.exit(1)


@main.command()
@click.option("--depth", type=int, default=5, show_default=True)
def seqcheck(depth):
    """Cross-check triangle columns against the embedded catalog."""
    failures = []

    def check(label, produced, expected):
        produced, expected = list(produced), list(expected)
        if produced != expected:
            for i, (a, b) in enumerate(zip(produced, expected)):
                if a != b:
                    failures.append(f"{label}: index {i}: {a} != {b}")
                    break
            else:
                failures.append(f"{label}: length mismatch")
        else:
            click.echo(f"ok: {label}: {','.join(map(str, produced))}")

    shapiro = build_triangle(FAMILIES["shapiro"], depth)
    schroder = build_triangle(FAMILIES["schroder"], depth)
    catalan = CATALOG["A000108"].values
    check("shapiro column 0 vs Catalan(n+1)",
          [shapiro.entry(n, 0).constant_value() for n in range(depth + 1)],
          catalan[1:depth + 2])
    check("schroder column 0 vs little Schroder",
          [schroder.entry(n, 0).constant_value() for n in range(depth + 1)],
          CATALOG["A001003"].values[:depth + 1])

    shapiro_rows = triangle_rows("A039598")
    schroder_rows = triangle_rows("A110440")
    for n in range(min(depth, len(shapiro_rows) - 1) + 1):
        check(f"narayana row {n} at z=1 vs Shapiro triangle",
              [narayana_entry(n, k).subst("z", 1).constant_value()
               for k in range(n + 1)],
              shapiro_rows[n])
        check(f"narayana row {n} at z=2 vs Schroder triangle",
              [narayana_entry(n, k).subst("z", 2).constant_value()
               for k in range(n + 1)],
              schroder_rows[n])

    ballot_rows = triangle_rows("A033184")
    for n in range(min(depth, len(ballot_rows) - 1) + 1):
        lhs = identities.verify_ballot(n).lhs
        produced = []
        for k in range(n + 1):
            c = lhs.coeff_of("x", k).coeff_of("y", 2 * n - k)
            produced.append(c.constant_value())
        check(f"ballot row {n} vs minor-sum coefficients",
              produced, ballot_rows[n])

    if failures:
        for f in failures:
            click.echo("FAIL: " + f, err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
