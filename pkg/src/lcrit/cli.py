"""Command-line front end: single checks, parallel discriminant scans,
regression-table reproduction, and verdict reports.

Exit codes: 0 success, 1 internal error, 2 precondition violation,
3 mismatch against the frozen reference tables.
"""

import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from multiprocessing import Pool

import click

from . import criterion, reference
from .arith import is_fundamental_discriminant, is_square
from .criterion import (LEVELS, Vanishing, f_sum, level_data, table_condition,
                        vanishing_verdict)
from .errors import PreconditionError
from .newformdata import load_newform_data
from .oracle import OracleConfig, default_terms, estimate_l_value

EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3


@dataclass
class ScanRow:
    d: int
    f_x1: int
    f_x2: int
    count_x1: int
    count_x2: int
    verdict: str
    oracle_verdict: str = None
    oracle_value: float = None

    def csv(self, with_oracle: bool) -> str:
        base = f"{self.d},{self.f_x1},{self.f_x2},{self.count_x1},{self.count_x2},{self.verdict}"
        if with_oracle:
            base += f",{self.oracle_verdict},{self.oracle_value:.6g}"
        return base

    def json_obj(self, with_oracle: bool) -> dict:
        obj = {"D": self.d, "f_x1": self.f_x1, "f_x2": self.f_x2,
               "count_x1": self.count_x1, "count_x2": self.count_x2,
               "verdict": self.verdict}
        if with_oracle:
            obj["oracle_verdict"] = self.oracle_verdict
            obj["oracle_value"] = self.oracle_value
        return obj


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(body):
    try:
        body()
    except PreconditionError as exc:
        _fail(EXIT_PRECONDITION, str(exc))
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        sys.exit(0)
    except SystemExit:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        _fail(EXIT_INTERNAL, f"internal: {type(exc).__name__}: {exc}")


def _sources(data_dir):
    if data_dir is None and not os.environ.get("LCRIT_DATA_DIR"):
        return None  # packaged default
    return load_newform_data(data_dir)


def _valid_pair(d: int, d0: int) -> bool:
    return d % 4 in (0, 1) and not is_square(d * d0)


@click.group()
def main():
    """Decide vanishing of twisted central L-values by exact form counts."""


@main.command()
@click.option("--level", type=int, required=True)
@click.option("--disc", type=int, required=True, help="negative fundamental discriminant D")
@click.option("--json", "as_json", is_flag=True)
@click.option("--oracle", "with_oracle", is_flag=True,
              help="cross-check with the truncated L-series estimate")
@click.option("--oracle-terms", type=int, default=0)
@click.option("--dump-forms", is_flag=True)
@click.option("--data-dir", type=click.Path(), default=None)
def check(level, disc, as_json, with_oracle, oracle_terms, dump_forms, data_dir):
    """Verdict for one discriminant at one level."""
    def body():
        row = level_data(level)
        v = vanishing_verdict(level, disc)
        est = None
        if with_oracle:
            est = estimate_l_value(level, disc, OracleConfig(terms=oracle_terms),
                                   _sources(data_dir))
        if as_json:
            obj = {"level": level, "D": disc, "d0": row.d0,
                   "x1": str(row.x1), "x2": str(row.x2),
                   "f_x1": v.f_x1, "f_x2": v.f_x2,
                   "count_x1": v.x1_eval.count, "count_x2": v.x2_eval.count,
                   "verdict": v.outcome.value}
            if v.note:
                obj["note"] = v.note
            if dump_forms:
                obj["forms_x1"] = [list(q) for q in v.x1_eval.forms]
                obj["forms_x2"] = [list(q) for q in v.x2_eval.forms]
            if est is not None:
                obj["oracle"] = {"verdict": est.verdict.value, "value": est.value,
                                 "terms": est.terms_used, "tail_bound": est.tail_bound,
                                 "caveats": list(est.caveats)}
            click.echo(json.dumps(obj))
            return
        click.echo(f"level {level}  D = {disc}  D0 = {row.d0}  Delta = {disc * row.d0}")
        click.echo(f"F({row.x1}) = {v.f_x1}   ({v.x1_eval.count} forms)")
        click.echo(f"F({row.x2}) = {v.f_x2}   ({v.x2_eval.count} forms)")
        sign = "=" if v.outcome is Vanishing.L_VANISHES else "!="
        click.echo(f"verdict: L {sign} 0 ({v.outcome.value})")
        if v.note:
            click.echo(f"note: {v.note}")
        if dump_forms:
            click.echo(f"forms at {row.x1}: {[list(q) for q in v.x1_eval.forms]}")
            click.echo(f"forms at {row.x2}: {[list(q) for q in v.x2_eval.forms]}")
        if est is not None:
            click.echo(f"oracle: {est.verdict.value}  value = {est.value:.6g}  "
                       f"tail <= {est.tail_bound:.2e}  ({est.terms_used} terms)")
            for c in est.caveats:
                click.echo(f"oracle caveat: {c}")
    _guarded(body)


def _scan_eval(args):
    level, d0, x1, x2, d = args
    e1 = f_sum(level, d0, d, x1)
    e2 = f_sum(level, d0, d, x2)
    verdict = "vanishes" if e1.value == e2.value else "nonzero"
    return ScanRow(d, e1.value, e2.value, e1.count, e2.count, verdict)


@main.command()
@click.option("--level", type=int, required=True)
@click.option("--from", "from_d", type=int, required=True, help="start D (closer to zero)")
@click.option("--to", "to_d", type=int, required=True, help="end D (inclusive)")
@click.option("--good-only", is_flag=True,
              help="only fundamental D passing the level's registry condition")
@click.option("--parallel", type=int, default=0, help="worker count (default: all cores)")
@click.option("--json", "as_json", is_flag=True, help="NDJSON rows instead of CSV")
@click.option("--oracle", "with_oracle", is_flag=True)
@click.option("--oracle-terms", type=int, default=0)
@click.option("--out", type=click.Path(), default=None, help="write to file instead of stdout")
@click.option("--data-dir", type=click.Path(), default=None)
def scan(level, from_d, to_d, good_only, parallel, as_json, with_oracle,
         oracle_terms, out, data_dir):
    """Scan discriminants from --from down to --to, one row per valid D."""
    def body():
        row = level_data(level)
        if from_d >= 0 or to_d >= 0 or from_d < to_d:
            raise PreconditionError(
                f"need 0 > from >= to (scan descends), got from={from_d} to={to_d}")
        accepted = []
        for d in range(from_d, to_d - 1, -1):
            if not _valid_pair(d, row.d0):
                continue
            if good_only and not (is_fundamental_discriminant(d)
                                  and table_condition(level, d)):
                continue
            accepted.append(d)
        jobs = [(level, row.d0, row.x1, row.x2, d) for d in accepted]
        workers = parallel if parallel > 0 else (os.cpu_count() or 1)
        stream = open(out, "w") if out else sys.stdout
        try:
            if not as_json:
                header = "D,f_x1,f_x2,count_x1,count_x2,verdict"
                if with_oracle:
                    header += ",oracle_verdict,oracle_value"
                print(header, file=stream, flush=True)
            rows = None
            if workers > 1 and len(jobs) > 1:
                chunk = max(1, len(jobs) // (4 * workers))
                with Pool(workers) as pool:
                    rows = pool.imap(_scan_eval, jobs, chunksize=chunk)
                    _emit_scan(rows, stream, as_json, with_oracle, level,
                               oracle_terms, data_dir)
            else:
                rows = map(_scan_eval, jobs)
                _emit_scan(rows, stream, as_json, with_oracle, level,
                           oracle_terms, data_dir)
        finally:
            if out:
                stream.close()
    _guarded(body)


def _emit_scan(rows, stream, as_json, with_oracle, level, oracle_terms, data_dir):
    sources = _sources(data_dir) if with_oracle else None
    for r in rows:
        if with_oracle:
            est = estimate_l_value(level, r.d, OracleConfig(terms=oracle_terms), sources)
            r.oracle_verdict = est.verdict.value
            r.oracle_value = est.value
        line = json.dumps(r.json_obj(with_oracle)) if as_json else r.csv(with_oracle)
        print(line, file=stream, flush=True)


@main.command()
@click.argument("name", type=click.Choice(["maincor", "primes", "cubes", "discs"]))
@click.option("--max-abs-d", type=int, default=0, help="limit rows to |D| <= bound")
@click.option("--parallel", type=int, default=0, help="worker count (default: all cores)")
def table(name, max_abs_d, parallel):
    """Recompute a built-in reference table and compare against frozen values."""
    def body():
        if name == "discs":
            _table_discs(max_abs_d)
        else:
            _table_values(name, max_abs_d, parallel)
    _guarded(body)


def _table_values(name, max_abs_d, parallel):
    level = reference.TABLE_LEVEL[name]
    row = level_data(level)
    expected = reference.rows_for(name)
    if max_abs_d:
        expected = [e for e in expected if abs(e[0]) <= max_abs_d]
    click.echo(f"table {name} (level {level}, x1 = {row.x1}, x2 = {row.x2})")
    header = f"{'D':>12} {'F(x1)':>8} {'F(x2)':>8}  status"
    click.echo(header)
    jobs = [(level, row.d0, row.x1, row.x2, d) for d, _, _, _ in expected]
    workers = parallel if parallel > 0 else (os.cpu_count() or 1)
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            computed = list(pool.imap(_scan_eval, jobs, chunksize=1))
    else:
        computed = [_scan_eval(j) for j in jobs]
    mismatches = 0
    for (d, f1, f2, verdict), got in zip(expected, computed):
        ok = (got.f_x1, got.f_x2) == (f1, f2)
        status = "ok" if ok else f"MISMATCH (expected {f1}, {f2})"
        if not ok:
            mismatches += 1
        suffix = f"  [{verdict}]" if verdict else ""
        click.echo(f"{d:>12} {got.f_x1:>8} {got.f_x2:>8}  {status}{suffix}")
    if mismatches:
        _fail(EXIT_MISMATCH, f"table {name}: {mismatches} row(s) differ from frozen values")
    click.echo(f"all {len(computed)} rows match")


def _table_discs(max_abs_d):
    click.echo("level registry and non-invariance lists "
               "(* = listed good fundamental entry)")
    mismatches = 0
    for level in sorted(LEVELS):
        row = LEVELS[level]
        last = max(row.noninvariant_m)
        bound = min(last, max_abs_d) if max_abs_d else last
        recomputed = []
        for m in range(3, bound + 1):
            if not _valid_pair(-m, row.d0):
                continue
            e1 = f_sum(level, row.d0, -m, row.x1)
            e2 = f_sum(level, row.d0, -m, row.x2)
            if e1.value != e2.value:
                recomputed.append(m)
        listed = [m for m in row.noninvariant_m if m <= bound]
        listed_valid = [m for m in listed if _valid_pair(-m, row.d0)]
        skipped = [m for m in listed if m not in listed_valid]
        missing = [m for m in listed_valid if m not in recomputed]
        extra = [m for m in recomputed if m not in listed_valid]
        mark = lambda m: f"{m}*" if m in row.underlined_m else str(m)
        click.echo(f"level {level:>2}  D0 = {row.d0:>3}  x = ({row.x1}, {row.x2})  "
                   f"condition: {row.condition}")
        click.echo(f"  listed:     {' '.join(mark(m) for m in listed)}")
        click.echo(f"  recomputed: {' '.join(str(m) for m in recomputed)}")
        if skipped:
            click.echo(f"  skipped (square |D*D0| or non-discriminant): "
                       f"{' '.join(str(m) for m in skipped)}")
        if missing:
            mismatches += len(missing)
            click.echo(f"  MISMATCH: listed but computed invariant: "
                       f"{' '.join(str(m) for m in missing)}")
        if extra:
            click.echo(f"  note: unlisted non-invariant m: "
                       f"{' '.join(str(m) for m in extra)}")
    if mismatches:
        _fail(EXIT_MISMATCH, f"table discs: {mismatches} listed value(s) not reproduced")
    click.echo("all listed non-invariant values reproduced")


@main.command()
@click.argument("n", type=int)
def congruent(n):
    """Congruent-number verdict for n = 3 (mod 8)."""
    def body():
        v = criterion.congruent_verdict(n)
        b = v.basis
        click.echo(f"n = {n}: {v.outcome.value}")
        click.echo(f"basis: level 32, D = {b.d}, F(0) = {b.f_x1}, "
                   f"F(1/3) = {b.f_x2} -> L {'=' if b.outcome is Vanishing.L_VANISHES else '!='} 0")
    _guarded(body)


@main.command()
@click.argument("n", type=int)
def cubes(n):
    """Finiteness verdict for rational points on x^3 + n*y^2 = 432."""
    def body():
        v = criterion.cubes_verdict(n)
        b = v.basis
        click.echo(f"n = {n}: {v.outcome.value}")
        click.echo(f"basis: level 27, D = {b.d}, F(0) = {b.f_x1}, "
                   f"F(1/2) = {b.f_x2} -> L {'=' if b.outcome is Vanishing.L_VANISHES else '!='} 0")
        if b.note:
            click.echo(f"note: {b.note}")
    _guarded(body)


if __name__ == "__main__":
    main()
