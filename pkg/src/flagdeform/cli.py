"""
Command-line front end.

    flagdeform table    --type B4 --assoc 2,4 [--format json|csv] [-o FILE]
    flagdeform classify --type B4 --assoc 2,4
    flagdeform product  --type B4 --assoc 2,4 --notation window 1324 "1 -2 3 4" --product star0
    flagdeform verify   --type B3 divisibility

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
consistency failure.  Data goes to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .deform import COUNTING_CONVENTION, ProfileArrays, classify, star_ts_coefficient
from .rootsys import CartanType, RootSystemError, build
from .schubert import InternalConsistencyError, full_table, structure_constants_pair
from .verify import SUITES, run_suite
from .weyl import DEFAULT_BOUND, ParabolicData, WeylError, format_element, parse_element

log = logging.getLogger("flagdeform")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class JobConfig:
    cartan_type: CartanType
    assoc: frozenset[int]
    command: str
    notation: str = "word"
    output: str | None = None
    jobs: int = 1
    cache_dir: str | None = None
    convention: str = COUNTING_CONVENTION
    fmt: str = "json"
    bound: int = DEFAULT_BOUND

    @property
    def parabolic(self) -> ParabolicData:
        return ParabolicData.from_assoc(self.cartan_type.rank, self.assoc)


def _parse_index_list(text: str | None, what: str) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"cannot parse {what} list {text!r}") from None


def make_config(args) -> JobConfig:
    try:
        ct = CartanType.parse(args.type)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None
    if args.assoc is None:
        assoc = list(range(1, ct.rank + 1))
    else:
        assoc = _parse_index_list(args.assoc, "assoc")
    bad = [a for a in assoc if not 1 <= a <= ct.rank]
    if bad:
        raise UsageError(f"--assoc {bad} out of range 1..{ct.rank} for {ct}")
    if not assoc:
        raise UsageError("--assoc must name at least one simple root")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    return JobConfig(
        cartan_type=ct,
        assoc=frozenset(assoc),
        command=args.command,
        notation=args.notation,
        output=getattr(args, "output", None),
        jobs=args.jobs,
        cache_dir=args.cache_dir,
        convention=args.convention,
        fmt=args.format,
        bound=args.bound,
    )


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_table(cfg: JobConfig) -> int:
    rs = build(cfg.cartan_type)
    pd = cfg.parabolic
    table = full_table(rs, pd, jobs=cfg.jobs, cache_dir=cfg.cache_dir, bound=cfg.bound)
    prof = ProfileArrays(table.reps, pd)
    lookup = table.lookup

    def annotate(i, j, k):
        a, b = (i, j) if i <= j else (j, i)
        c = lookup[(a, b, k)]
        s0 = bool(prof.star0_mask([i], [j], [k])[0])
        bk = bool(prof.bk_mask([i], [j], [k])[0])
        return {"bk": c if bk else 0, "star0": c if s0 else 0}

    fh, close = _open_out(cfg.output)
    try:
        if cfg.fmt == "csv":
            table.to_csv(fh, cfg.notation, cfg.convention, annotate)
        else:
            table.to_jsonl(fh, cfg.notation, cfg.convention, annotate)
    finally:
        if close:
            fh.close()
    log.info("%d records written", table.count(cfg.convention))
    return EXIT_OK


def cmd_classify(cfg: JobConfig, limit_set=None) -> int:
    rs = build(cfg.cartan_type)
    table = full_table(rs, cfg.parabolic, jobs=cfg.jobs, cache_dir=cfg.cache_dir, bound=cfg.bound)
    rec = classify(table, convention=cfg.convention, limit_set=limit_set or None)
    fh, close = _open_out(cfg.output)
    try:
        fh.write(rec.dumps() + "\n")
    finally:
        if close:
            fh.close()
    return EXIT_OK


def _term_coeff(dc, product: str, limit_set) -> int:
    if product == "cup":
        return dc.c
    if product == "bk":
        return dc.bk
    if product == "star0":
        return dc.star0
    return dc.mixed(limit_set)


def cmd_product(cfg: JobConfig, u_text: str, v_text: str, product: str, limit_set, ledger: bool) -> int:
    rs = build(cfg.cartan_type)
    pd = cfg.parabolic
    try:
        u = parse_element(rs, u_text, cfg.notation)
        v = parse_element(rs, v_text, cfg.notation)
    except WeylError as exc:
        raise UsageError(str(exc)) from None
    if not set(limit_set) <= pd.assoc:
        raise UsageError(f"--mixed-set {sorted(limit_set)} must lie within --assoc {sorted(pd.assoc)}")
    for x, text in ((u, u_text), (v, v_text)):
        if any(x.has_right_descent(j) for j in pd.levi):
            raise UsageError(f"{text!r} is not a minimal coset representative for {pd}")
    terms = []
    for w, c in structure_constants_pair(u, v, pd).items():
        dc = star_ts_coefficient(u, v, w, pd)
        assert dc.c == c
        coeff = _term_coeff(dc, product, limit_set)
        if coeff:
            term = {"w": format_element(w, cfg.notation), "coeff": coeff}
            if ledger:
                term.update(dc.to_dict())
            terms.append(term)
    fh, close = _open_out(cfg.output)
    try:
        if cfg.fmt == "json":
            out = {
                "type": str(rs.cartan_type),
                "assoc": sorted(pd.assoc),
                "product": product,
                "u": format_element(u, cfg.notation),
                "v": format_element(v, cfg.notation),
                "terms": terms,
            }
            if product == "mixed":
                out["mixed_set"] = sorted(limit_set)
            fh.write(json.dumps(out) + "\n")
        else:
            text = " + ".join(
                (f"{t['coeff']}*" if t["coeff"] != 1 else "") + f"σ[{t['w']}]" for t in terms
            )
            fh.write((text or "0") + "\n")
            if ledger:
                for t in terms:
                    fh.write(f"  {t['w']}: s=1 degrees {t['s1_degree']}, s->0 degrees {t['s0_degree']}\n")
    finally:
        if close:
            fh.close()
    return EXIT_OK


def cmd_verify(cfg: JobConfig, suite: str, sample: int | None, seed: int) -> int:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rs = build(cfg.cartan_type)
    results = run_suite(suite, rs, cfg.parabolic, sample=sample, seed=seed, jobs=cfg.jobs, cache_dir=cfg.cache_dir)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Cartan type such as B4, C6, A3")
    common.add_argument("--assoc", help="associated simple roots, e.g. 2,4 (default: all, i.e. G/B)")
    common.add_argument("--notation", choices=("word", "window"), default="word")
    common.add_argument("--convention", choices=("ordered", "unordered"), default=COUNTING_CONVENTION)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--cache-dir")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="enumeration bound on |W|")
    common.add_argument("-o", "--output", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="flagdeform", description="Deformed Schubert calculus on G/P.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("table", parents=[common], help="all nonzero structure constants")
    p = sub.add_parser("classify", parents=[common], help="count cup / star_0 / Levi-movable constants")
    p.add_argument("--mixed-set", help="also count the mixed limit with s_alpha -> 0 for these roots")
    p = sub.add_parser("product", parents=[common], help="expand one product")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--product", choices=("cup", "bk", "star0", "mixed"), default="cup")
    p.add_argument("--mixed-set", help="roots whose s_alpha -> 0 (for --product mixed)")
    p.add_argument("--ledger", action="store_true", help="include the exponent ledger per alpha")
    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", help=" | ".join(SUITES))
    p.add_argument("--sample", type=int, help="check a random sample of this many constants")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    try:
        cfg = make_config(args)
        if cfg.command == "table":
            if cfg.fmt == "text":
                raise UsageError("table supports --format json or csv")
            return cmd_table(cfg)
        if cfg.command == "classify":
            return cmd_classify(cfg, _parse_index_list(args.mixed_set, "mixed-set"))
        if cfg.command == "product":
            limit = _parse_index_list(args.mixed_set, "mixed-set")
            return cmd_product(cfg, args.u, args.v, args.product, limit, args.ledger)
        return cmd_verify(cfg, args.suite, args.sample, args.seed)
    except (UsageError, WeylError, RootSystemError) as exc:
        print(f"flagdeform: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"flagdeform: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
