#!/usr/bin/env python3
"""
chordspec - Spectral chorded-cycle verifier
Checks that every graph on n vertices with spectral radius at least
sqrt(2n-4) contains a chorded cycle unless it is K_{2,n-2}, together with
the supporting lemmas, on exhaustively enumerated small graphs.
"""

import os
from dotenv import load_dotenv

load_dotenv()
import sys
import json
import argparse
import logging
from datetime import datetime
from pathlib import Path
from typing import Iterator, List

# Add project root to path
project_root = Path(__file__).parent
sys.path.append(str(project_root))

from graphs import (
    Graph, GraphError, Graph6Error, SizeBudgetError, all_graphs, complete_bipartite, friendship,
    friendship_pendant, k2a_bullet_f, k2a_star_f, read_graph6_lines, to_graph6, write_graph6_lines,
)
from chorded import find_chorded_cycle
from spectra import compare_radius_to_sqrt, spectrum
from utils.config_utils import jacobi_options, load_config
from utils.parallel_utils import all_graphs_parallel
from verifiers import (
    GammaVerifier, LemmaVerifier, PosaVerifier, PropertyVerifier, ReportExporter,
    ReportNotifier, TheoremVerifier, VerificationReport, write_json,
)

CLAIMS = ['theorem', 'posa', 'lemma3', 'lemma5', 'lemma6', 'families', 'gamma',
          'kelmans', 'detector', 'hygiene', 'all']
FAMILIES = ['k2a', 'friendship', 'friendship-pendant', 'bullet', 'star']

logger = logging.getLogger(__name__)


def setup_logging():
    """Setup logging configuration; stdout stays reserved for command output"""
    log_dir = Path(os.getenv('CHORDSPEC_LOG_DIR') or project_root / "logs")
    log_dir.mkdir(parents=True, exist_ok=True)

    today = datetime.now().strftime("%Y-%m-%d")
    log_file = log_dir / f"{today}.log"

    logging.basicConfig(
        level=getattr(logging, os.getenv('CHORDSPEC_LOG_LEVEL', 'INFO').upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler(sys.stderr)
        ]
    )
    return logging.getLogger(__name__)


def read_graphs(source: str) -> Iterator[Graph]:
    """graph6 lines from a file, or stdin for '-'"""
    if source == "-":
        yield from read_graph6_lines(sys.stdin)
        return
    with open(source, 'r') as f:
        yield from read_graph6_lines(f)


# -- commands ------------------------------------------------------------------

def cmd_gen(args, config) -> int:
    jobs = args.jobs or 1
    if jobs > 1:
        graphs = all_graphs_parallel(args.n, args.connected, jobs, config['enumeration']['split_depth'])
    else:
        graphs = all_graphs(args.n, args.connected, config['enumeration']['max_order'])
    count = write_graph6_lines(graphs, sys.stdout)
    logger.info(f"✅ Generated {count} classes of order {args.n}")
    return 0


def _threshold_flag(G: Graph, config) -> str:
    m = 2 * G.n - 4
    if m <= 0:
        return ""
    try:
        decision = compare_radius_to_sqrt(G, m, config['numeric']['decision_band'], config['exact']['max_order'],
                                          config['numeric']['power_max_iterations'])
    except SizeBudgetError:
        return f" (within {config['numeric']['decision_band']:g} of sqrt({m}), undecided)"
    if decision.sign == 0:
        return f" (= sqrt({m}), exact-threshold)"
    relation = ">" if decision.sign > 0 else "<"
    return f" ({relation} sqrt({m}){', exact' if decision.exact else ''})"


def cmd_rho(args, config) -> int:
    for G in read_graphs(args.file):
        print(f"{spectrum(G, **jacobi_options(config)).radius:.12f}{_threshold_flag(G, config)}")
    return 0


def cmd_spectrum(args, config) -> int:
    for G in read_graphs(args.file):
        print(" ".join(f"{x:.12f}" for x in spectrum(G, **jacobi_options(config)).values))
    return 0


def cmd_chorded(args, config) -> int:
    for G in read_graphs(args.file):
        witness = find_chorded_cycle(G)
        if witness is None:
            print("none")
        else:
            print(str(witness.validate(G)) if args.witness else "chorded")
    return 0


def build_family(kind: str, a=None, k=None, n=None) -> Graph:
    def need(value, name):
        if value is None:
            raise GraphError(f"family {kind} needs --{name}")
        return value

    if kind == 'k2a':
        return complete_bipartite(2, a if a is not None else need(n, 'n') - 2)
    if kind == 'friendship':
        return friendship(k if k is not None else (need(n, 'k or --n') - 1) // 2)
    if kind == 'friendship-pendant':
        return friendship_pendant(k if k is not None else (need(n, 'k or --n') - 2) // 2)
    if kind == 'bullet':
        return k2a_bullet_f(need(a, 'a'), need(k, 'k'))
    if kind == 'star':
        return k2a_star_f(need(a, 'a'), need(k, 'k'))
    raise GraphError(f"unknown family {kind!r}")


def cmd_family(args, config) -> int:
    print(to_graph6(build_family(args.kind, args.a, args.k, args.n)))
    return 0


def run_campaigns(args, config) -> List[VerificationReport]:
    campaigns = config['campaigns']
    jobs = args.jobs or campaigns['jobs']
    claims = CLAIMS[:-1] if args.claim == 'all' else [args.claim]
    reports = []

    for claim in claims:
        logger.info(f"🚀 Running {claim} campaign")
        if claim == 'theorem':
            verifier = TheoremVerifier(config)
            orders = [args.n] if args.n else campaigns['theorem']['n']
            reports += [verifier.verify(n, args.threshold_m, args.detector, jobs, args.exploratory, args.progress)
                        for n in orders]
        elif claim == 'posa':
            verifier = PosaVerifier(config)
            orders = [args.n] if args.n else campaigns['posa']['n']
            reports += [verifier.verify(n, jobs=jobs, progress=args.progress) for n in orders]
        elif claim == 'gamma':
            verifier = GammaVerifier(config)
            orders = [args.n] if args.n else campaigns['gamma']['n']
            reports += [verifier.verify(n, jobs=jobs, progress=args.progress) for n in orders]
        elif claim == 'lemma3':
            reports.append(LemmaVerifier(config).verify_lemma3(args.k_max or campaigns['lemma3']['k_max']))
        elif claim in ('lemma5', 'lemma6', 'families'):
            method = getattr(LemmaVerifier(config), f"verify_{claim}")
            reports.append(method(args.n_max or campaigns[claim]['n_max']))
        elif claim == 'kelmans':
            reports.append(PropertyVerifier(config).verify_kelmans(n_max=args.n_max))
        elif claim == 'detector':
            reports.append(PropertyVerifier(config).verify_detector(n_max=args.n_max))
        elif claim == 'hygiene':
            reports.append(PropertyVerifier(config).verify_hygiene(n_max=args.n_max))
    return reports


def cmd_verify(args, config) -> int:
    reports = run_campaigns(args, config)
    export_files = []

    if args.json and len(reports) == 1:
        write_json(reports[0], args.json)
    elif args.json:
        text = json.dumps([r.to_dict() for r in reports], indent=2, default=str) + "\n"
        if args.json == "-":
            print(text, end="")
        else:
            Path(args.json).write_text(text)
    elif len(reports) == 1:
        print(reports[0].to_json())

    if args.claim == 'all':
        export_files = ReportExporter(config).export_reports(reports)
    if len(reports) > 1 or args.claim == 'all':
        ReportNotifier(config).print_summary(reports, export_files)

    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordspec", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", default=None, help="alternative config.json")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="stream all isomorphism classes of order n as graph6")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--connected", action="store_true")
    gen.add_argument("--jobs", type=int, default=None)
    gen.set_defaults(handler=cmd_gen)

    for name, handler, text in (("rho", cmd_rho, "spectral radius with threshold flag"),
                                ("spectrum", cmd_spectrum, "all adjacency eigenvalues"),
                                ("chorded", cmd_chorded, "chorded-cycle witness or none")):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("file", nargs="?", default="-", help="graph6 file, '-' for stdin")
        cmd.set_defaults(handler=handler)
        if name == "chorded":
            cmd.add_argument("--witness", action="store_true")

    family = sub.add_parser("family", help="print a named family member as graph6")
    family.add_argument("kind", choices=FAMILIES)
    family.add_argument("--a", type=int, default=None)
    family.add_argument("--k", type=int, default=None)
    family.add_argument("--n", type=int, default=None)
    family.set_defaults(handler=cmd_family)

    verify = sub.add_parser("verify", help="run a verification campaign")
    verify.add_argument("claim", choices=CLAIMS)
    verify.add_argument("--n", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--json", default=None, help="write the report(s) here ('-' for stdout)")
    verify.add_argument("--detector", choices=["flow", "oracle"], default="flow")
    verify.add_argument("--threshold-m", type=int, default=None)
    verify.add_argument("--exploratory", action="store_true")
    verify.add_argument("--progress", action="store_true")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging()
    config = load_config(args.config)

    try:
        return args.handler(args, config)
    except Graph6Error as e:
        print(f"chordspec: malformed graph6: {e}", file=sys.stderr)
        return 2
    except GraphError as e:
        print(f"chordspec: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"❌ {args.command} failed: {str(e)}")
        logger.exception("Full error details:")
        return 2


if __name__ == "__main__":
    sys.exit(main())
