#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line interface for collapsar
"""
import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .collapse import certification_tree, certify_bicollapsible, check_n_collapsing, free_face_pairs
from .complex2 import branched_complex, complex_to_dot, presentation_complex
from .config import Config, ConfigManager, OutputFormat
from .dehn import (
    AbelianVerdict,
    abelianization,
    abelianization_test,
    choose_oracle,
    dehn_reduce,
    relator_orders,
)
from .diagram import (
    ShellMode,
    area_bound_check,
    check_dehn_property,
    check_generalized_dehn,
    check_ladder_or_tiny_shells,
    diagram_to_dot,
    diagram_to_json,
    enumerate_reduced_disks,
    find_spherical_near_immersion,
    uniform_degrees,
)
from .errors import CollapsarError, OracleError
from .geometry import (
    ball_to_dot,
    build_ball,
    carrier,
    check_cells_embed,
    check_face_intersections,
    divisive_trees,
    dual_cube_fragment,
    geodesic_crossing_profile,
    geodesics_from_root,
    halfspaces,
    walls,
)
from .reporter import Report, Reporter, RunTimer, bundle_reports, input_digest, save_report
from .verdict import VerdictStatus
from .words import (
    BranchedPresentation,
    branch,
    format_presentation,
    format_word,
    parse_presentation,
    parse_word,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

STATUS_EXIT = {
    VerdictStatus.CERTIFIED: EXIT_OK,
    VerdictStatus.REFUTED: EXIT_NEGATIVE,
    VerdictStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class CollapsarArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with code 3"""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exponents(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid exponent list '{text}'")


class CollapsarCLI:
    """Command line interface for collapsar"""

    def __init__(self):
        self.config: Optional[Config] = None
        self.reporter: Optional[Reporter] = None
        self.console = Console()

    # -- parser ------------------------------------------------------------

    def _add_common_options(self, parser: argparse.ArgumentParser, suppress: bool) -> None:
        """Global flags, accepted before or after the subcommand"""
        default = argparse.SUPPRESS if suppress else None
        flag_default = argparse.SUPPRESS if suppress else False
        parser.add_argument('-c', '--config', default=default, help='Configuration file path')
        parser.add_argument('--json', action='store_true', default=flag_default,
                            help='Emit the JSON report on stdout')
        parser.add_argument('-f', '--format', choices=['text', 'json', 'markdown'], default=default,
                            help='Output format (default: text)')
        parser.add_argument('--out', default=default, metavar='DIR',
                            help='Write report.json, summary.txt and artifacts into DIR')
        parser.add_argument('--no-colors', action='store_true', default=flag_default,
                            help='Disable colored output')
        parser.add_argument('-v', '--verbose', action='store_true', default=flag_default,
                            help='Debug logging')
        parser.add_argument('--max-area', type=int, default=default, help='Diagram area bound')
        parser.add_argument('--max-tree-edges', type=int, default=default,
                            help='Edges on no face per enumerated diagram')
        parser.add_argument('--radius', type=int, default=default, help='Ball radius')
        parser.add_argument('--unsafe', action='store_true', default=flag_default,
                            help="Run Dehn's algorithm on uncertified presentations (heuristic)")
        parser.add_argument('--seed', type=int, default=default, help='Seed for sampled checks')
        parser.add_argument('--budget', type=int, default=default,
                            help='Faces glued by the refutation search')
        parser.add_argument('--exponents', type=_exponents, default=default,
                            help='Comma-separated relator exponents, e.g. 2,3')
        parser.add_argument('--max-flips', type=int, default=default,
                            help='Flip distance of the dual cube fragment')
        parser.add_argument('--threads', type=int, default=default, help='Worker threads')

    def setup_parser(self) -> argparse.ArgumentParser:
        """Setup argument parser"""
        parser = CollapsarArgumentParser(
            prog='collapsar',
            description='Collapsibility, small cancellation and Dehn\'s algorithm for branched presentations',
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Exit codes: 0 certified/trivial, 1 refuted/nontrivial, 2 inconclusive, 3 usage or input error

Examples:
  %(prog)s certify torus.pres                 # small-cancellation certification chain
  %(prog)s solve torus2.pres "abABabAB"       # Dehn's algorithm with a trace
  %(prog)s walls torus2.pres --radius 6 --out run/
  %(prog)s report run/ --out bundle/
            """
        )
        self._add_common_options(parser, suppress=False)
        parser.add_argument('--create-config', metavar='FILE',
                            help='Create default configuration file and exit')
        parser.add_argument('--version', action='version', version=f'collapsar {__version__}')

        sub = parser.add_subparsers(dest='command', parser_class=CollapsarArgumentParser)

        def add(name: str, help_text: str, with_input: bool = True) -> argparse.ArgumentParser:
            command = sub.add_parser(name, help=help_text)
            self._add_common_options(command, suppress=True)
            if with_input:
                command.add_argument('presentation', help="'.pres' file or literal '<gens | relators>'")
            return command

        add('parse', 'Parse and normalize a presentation')
        add('certify', 'Certify bicollapsibility and 3-collapsing')
        add('branch', 'Raise relators to powers and report Dehn eligibility')
        solve = add('solve', 'Decide triviality of words')
        solve.add_argument('words', nargs='+', help='Words over the generators')
        solve.add_argument('--trace', action='store_true', help='Include rewrite traces')
        solve.add_argument('--random', action='store_true',
                           help='Pick rewrites at random (seeded) instead of leftmost-longest')
        add('order', 'Orders of the base relators in the branched group')
        add('diagrams', 'Enumerate reduced disk diagrams and audit their cell roles')
        add('sphere-search', 'Search for spherical near-immersions')
        add('ball', 'Build a ball of the cover')
        add('walls', 'Divisive trees, walls, halfspaces and carriers in a ball')
        add('cube', 'Dual cube complex fragment of a ball')
        report = add('report', 'Bundle saved runs', with_input=False)
        report.add_argument('runs', nargs='+', help='Run directories written with --out')
        return parser

    def parse_args(self, args: Optional[List[str]] = None) -> argparse.Namespace:
        """Parse command line arguments"""
        return self.setup_parser().parse_args(args)

    # -- configuration -----------------------------------------------------

    def load_config(self, args: argparse.Namespace) -> Config:
        """Defaults < config file < command-line flags"""
        config = ConfigManager.load_config(getattr(args, 'config', None))
        output_format = getattr(args, 'format', None)
        if getattr(args, 'json', False):
            output_format = OutputFormat.JSON.value
        overrides: Dict[str, Any] = {
            'output_format': output_format,
            'output_dir': getattr(args, 'out', None),
            'max_area': getattr(args, 'max_area', None),
            'max_tree_edges': getattr(args, 'max_tree_edges', None),
            'radius': getattr(args, 'radius', None),
            'seed': getattr(args, 'seed', None),
            'refutation_max_faces': getattr(args, 'budget', None),
            'max_flips': getattr(args, 'max_flips', None),
            'threads': getattr(args, 'threads', None),
        }
        if getattr(args, 'unsafe', False):
            overrides['unsafe'] = True
        if getattr(args, 'no_colors', False):
            overrides['enable_colors'] = False
        if getattr(args, 'verbose', False):
            overrides['log_level'] = 'DEBUG'
        return config.merged(overrides)

    def setup_logging(self, config: Config) -> None:
        handler = RichHandler(console=Console(stderr=True, no_color=not config.enable_colors),
                              show_path=False, show_time=False)
        logging.basicConfig(level=config.log_level.upper(), format="%(message)s",
                            handlers=[handler], force=True)

    # -- inputs ------------------------------------------------------------

    @staticmethod
    def read_presentation(source: str) -> str:
        if source.lstrip().startswith("<"):
            return source
        return Path(source).read_text(encoding='utf-8')

    def branched_input(self, text: str, args: argparse.Namespace) -> BranchedPresentation:
        """Base and exponents: --exponents over the parsed relators, else proper powers read off"""
        p = parse_presentation(text)
        exponents = getattr(args, 'exponents', None)
        if exponents:
            return branch(p, exponents)
        return BranchedPresentation.from_presentation(p)

    def certified(self, b: BranchedPresentation) -> BranchedPresentation:
        verdict = certify_bicollapsible(b.base, self.config.refutation_max_faces,
                                        self.config.refutation_max_candidates,
                                        self.config.sphere_max_area,
                                        self.config.collapse_state_limit)
        return b.with_certification(verdict)

    def new_report(self, command: str, text: str, args: argparse.Namespace) -> Report:
        flags = {k: v for k, v in sorted(vars(args).items())
                 if k not in ('config', 'out', 'verbose', 'no_colors', 'json', 'format')}
        return Report(command, input_digest(text, flags))

    # -- subcommands -------------------------------------------------------

    def cmd_parse(self, args: argparse.Namespace, text: str, report: Report) -> int:
        p = parse_presentation(text)
        report.data = {
            'normalized': format_presentation(p),
            'generators': p.rank,
            'relators': len(p.relators),
            'relator_lengths': p.relator_lengths(),
            'presentation': p.to_dict(),
        }
        return EXIT_OK

    def cmd_certify(self, args: argparse.Namespace, text: str, report: Report) -> int:
        p = parse_presentation(text)
        tree = certification_tree(p, self.config.refutation_max_faces,
                                  self.config.refutation_max_candidates)
        report.data = {'certification': tree, 'status': tree['status'],
                       'free_face_pairs': len(free_face_pairs(presentation_complex(p)))}
        for name, holds in tree['conditions'].items():
            if holds is not None:
                report.add_verdict(name, 'certified' if holds else 'refuted', ['small cancellation check'])
        report.add_verdict('3-collapsing', tree['3-collapsing']['status'],
                           tree['3-collapsing']['provenance'])
        report.add_verdict('bicollapsible', tree['status'], tree['chain'])
        witness = tree['bicollapsible'].get('witness')
        if witness is not None:
            report.artifacts['witness.json'] = _json(witness)
        return STATUS_EXIT[VerdictStatus(tree['status'])]

    def cmd_branch(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b = self.certified(self.branched_input(text, args))
        report.data = {
            'base': format_presentation(b.base),
            'derived': format_presentation(b.derived),
            'exponents': list(b.exponents),
            'dehn_eligible': b.dehn_eligible,
            'branched': b.to_dict(),
        }
        report.add_verdict('dehn-eligible', 'certified' if b.dehn_eligible else 'inconclusive',
                           b.certification.provenance if b.certification else [])
        report.artifacts['branched.dot'] = complex_to_dot(branched_complex(b), b.base.names)
        return EXIT_OK

    def cmd_solve(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b = self.certified(self.branched_input(text, args))
        p = b.derived
        words = [parse_word(w, p) for w in args.words]
        results = []
        codes = []
        use_dehn = b.dehn_eligible or self.config.unsafe
        oracle = None if use_dehn else choose_oracle(p, b, False, self.config.oracle_max_area,
                                                     self.config.oracle_max_length)
        rng = random.Random(self.config.seed) if getattr(args, 'random', False) else None
        for raw, w in zip(args.words, words):
            entry: Dict[str, Any] = {'word': raw}
            if use_dehn:
                reduced, trace = dehn_reduce(w, b, self.config.unsafe, rng)
                trivial: Optional[bool] = reduced.is_empty()
                entry['reduced'] = format_word(reduced, p.names)
                entry['heuristic'] = trace.heuristic
                if getattr(args, 'trace', False):
                    entry['trace'] = trace.to_dict()
                method = 'heuristic Dehn reduction' if trace.heuristic else "Dehn's algorithm"
            else:
                method = f"{oracle.name} oracle"
                if abelianization_test(w, p) == AbelianVerdict.NONTRIVIAL:
                    trivial, method = False, 'abelianization'
                else:
                    try:
                        trivial = oracle.is_trivial(w)
                    except OracleError as e:
                        logger.info("Undecided: %s", e)
                        trivial = None
            entry['trivial'] = trivial
            status = {True: 'trivial', False: 'nontrivial', None: 'inconclusive'}[trivial]
            report.add_verdict(f"{raw} = 1", status, [method])
            codes.append({True: EXIT_OK, False: EXIT_NEGATIVE, None: EXIT_INCONCLUSIVE}[trivial])
            results.append(entry)
        report.data = {'words': results, 'dehn_eligible': b.dehn_eligible}
        return _combine(codes)

    def cmd_order(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b = self.certified(self.branched_input(text, args))
        orders = relator_orders(b, self.config.unsafe)
        report.data = {'orders': [o.to_dict() for o in orders],
                       'abelianization': abelianization(b.derived).to_dict()}
        for o in orders:
            report.add_verdict(f"order of relator {o.relator}", 'certified' if o.ok else 'refuted',
                               ['relator orders equal exponents'], expected=o.expected, observed=o.observed)
        return EXIT_OK if all(o.ok for o in orders) else EXIT_NEGATIVE

    def cmd_diagrams(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b = self.certified(self.branched_input(text, args))
        p = b.derived
        diagrams = list(enumerate_reduced_disks(p, self.config.max_area,
                                                area_limit=self.config.max_area_limit,
                                                max_tree_edges=self.config.max_tree_edges,
                                                threads=self.config.threads))
        lengths = set(p.relator_lengths())
        uniform = len(lengths) == 1
        violations: Dict[str, List[int]] = {'dehn': [], 'strong': [], 'area': [], 'ladder': []}
        for index, d in enumerate(diagrams):
            if not check_dehn_property(d, ShellMode.DISK):
                violations['dehn'].append(index)
            if not check_generalized_dehn(d, strong=True):
                violations['strong'].append(index)
            if uniform and d.area and not area_bound_check(d, next(iter(lengths))):
                violations['area'].append(index)
            if not check_ladder_or_tiny_shells(d, uniform_degrees(d, b.exponents)):
                violations['ladder'].append(index)
        report.data = {
            'diagrams': len(diagrams),
            'max_area': self.config.max_area,
            'max_tree_edges': self.config.max_tree_edges,
            'dehn_eligible': b.dehn_eligible,
            'violations': violations,
        }
        predicted = b.dehn_eligible
        status = 'certified' if predicted else 'inconclusive'
        for claim, bad in violations.items():
            if claim == 'area' and not uniform:
                continue
            report.add_verdict(f"{claim} property", 'refuted' if bad else status,
                               ['bounded enumeration'], violations=len(bad))
            for index in bad[:3]:
                report.artifacts[f"{claim}-violation-{index}.dot"] = diagram_to_dot(diagrams[index], p.names)
                report.artifacts[f"{claim}-violation-{index}.json"] = diagram_to_json(diagrams[index])
        if not predicted:
            return EXIT_INCONCLUSIVE
        return EXIT_NEGATIVE if any(violations.values()) else EXIT_OK

    def cmd_sphere_search(self, args: argparse.Namespace, text: str, report: Report) -> int:
        p = parse_presentation(text)
        bound = getattr(args, 'max_area', None) or self.config.sphere_max_area
        sphere = find_spherical_near_immersion(p, bound)
        report.data = {'max_area': bound, 'found': sphere is not None}
        if sphere is None:
            report.add_verdict('diagrammatically reducible', 'inconclusive',
                               [f"no spherical near-immersion of area <= {bound}"])
            return EXIT_INCONCLUSIVE
        report.data['sphere'] = sphere.to_dict()
        report.artifacts['sphere.dot'] = diagram_to_dot(sphere, p.names)
        report.add_verdict('diagrammatically reducible', 'refuted',
                           ['spherical near-immersion found'], area=sphere.area)
        return EXIT_NEGATIVE

    def _ball(self, args: argparse.Namespace, text: str):
        b = self.certified(self.branched_input(text, args))
        return b, build_ball(b, self.config.radius, unsafe=self.config.unsafe)

    def cmd_ball(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b, ball = self._ball(args, text)
        faces = check_face_intersections(ball) if ball.safe_radius >= 0 else None
        embeds = check_cells_embed(ball)
        report.data = {**ball.summary(), 'ball': ball.to_dict(), 'cells_embed': embeds.to_dict()}
        report.artifacts['ball.dot'] = ball_to_dot(ball, names=b.base.names)
        report.add_verdict('2-cells embed', 'certified' if embeds.ok else 'refuted', ['safe faces'])
        codes = [EXIT_OK if embeds.ok else EXIT_NEGATIVE]
        if faces is not None:
            report.data['face_intersections'] = faces.to_dict()
            report.add_verdict('face intersections connected', 'certified' if faces.ok else 'refuted',
                               ['safe face pairs'])
            codes.append(EXIT_OK if faces.ok else EXIT_NEGATIVE)
            n_collapsing = check_n_collapsing(ball, self.config.n_collapsing, self.config.threads)
            report.data['n_collapsing'] = n_collapsing.to_dict()
            report.add_verdict(f"{self.config.n_collapsing}-collapsing", n_collapsing.status.value,
                               n_collapsing.provenance)
            codes.append(STATUS_EXIT[n_collapsing.status])
        return _combine(codes)

    def cmd_walls(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b, ball = self._ball(args, text)
        trees = divisive_trees(ball)
        found = walls(ball, trees.trees)
        sides = [halfspaces(ball, w, trees.trees[w.tree]) for w in found]
        convexity = [carrier(ball, w, self.config.convexity_samples, self.config.seed)[1] for w in found]
        profiles = [geodesic_crossing_profile(ball, path, found) for path in geodesics_from_root(ball)]
        complete = [i for i, w in enumerate(found) if not w.partial]
        two_sided = all(sides[i].two_sided for i in complete)
        convex = all(convexity[i].convex for i in complete)
        separated = all(p.satisfied for p in profiles)
        report.data = {
            **ball.summary(),
            'trees': trees.to_dict(),
            'walls': [dict(w.to_dict(), halfspaces=s.to_dict(), convexity=c.to_dict())
                      for w, s, c in zip(found, sides, convexity)],
            'geodesics': len(profiles),
            'unseparated_geodesics': sum(1 for p in profiles if not p.satisfied),
        }
        report.artifacts['walls.dot'] = ball_to_dot(ball, found, b.base.names)
        checks = [
            ('divisive trees are embedded trees', trees.all_trees and trees.all_embedded),
            ('complete walls are two-sided', two_sided),
            ('carriers are convex', convex),
            ('doubly crossed walls are separated', separated),
        ]
        for claim, holds in checks:
            report.add_verdict(claim, 'certified' if holds else 'refuted', [f"ball radius {ball.radius}"])
        return EXIT_OK if all(h for _, h in checks) else EXIT_NEGATIVE

    def cmd_cube(self, args: argparse.Namespace, text: str, report: Report) -> int:
        b, ball = self._ball(args, text)
        complete = [w for w in walls(ball) if not w.partial]
        fragment = dual_cube_fragment(ball, complete, self.config.max_flips)
        report.data = {**fragment.summary(), 'fragment': fragment.to_dict()}
        report.add_verdict('fragment simply connected',
                           'certified' if fragment.simply_connected else 'refuted', ['cycle basis rank'])
        report.add_verdict('flag condition', 'certified' if not fragment.flag_failures else 'refuted',
                           ['pairwise crossing triples'])
        ok = fragment.simply_connected and not fragment.flag_failures
        return EXIT_OK if ok else EXIT_NEGATIVE

    def cmd_report(self, args: argparse.Namespace) -> int:
        out = self.config.output_dir
        if not out:
            raise CollapsarError("report needs --out DIR")
        index = bundle_reports(args.runs, out)
        self.console.print(f"Bundled {len(index['runs'])} runs into {out}")
        return EXIT_OK

    # -- entry -------------------------------------------------------------

    def dispatch(self, args: argparse.Namespace) -> int:
        if args.command == 'report':
            return self.cmd_report(args)
        handlers: Dict[str, Callable[[argparse.Namespace, str, Report], int]] = {
            'parse': self.cmd_parse,
            'certify': self.cmd_certify,
            'branch': self.cmd_branch,
            'solve': self.cmd_solve,
            'order': self.cmd_order,
            'diagrams': self.cmd_diagrams,
            'sphere-search': self.cmd_sphere_search,
            'ball': self.cmd_ball,
            'walls': self.cmd_walls,
            'cube': self.cmd_cube,
        }
        text = self.read_presentation(args.presentation)
        report = self.new_report(args.command, text, args)
        with RunTimer(report):
            code = handlers[args.command](args, text, report)
        report.data['exit_code'] = code
        print(self.reporter.generate_report(report), end="")
        if self.config.output_dir:
            save_report(report, self.config.output_dir, self.config)
        return code

    def run(self, args: Optional[List[str]] = None) -> int:
        """Main entry point; returns the exit code"""
        try:
            parsed_args = self.parse_args(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_OK

        if parsed_args.create_config:
            ConfigManager.create_default_config(parsed_args.create_config)
            return EXIT_OK
        if not parsed_args.command:
            self.setup_parser().print_usage(sys.stderr)
            return EXIT_USAGE

        try:
            self.config = self.load_config(parsed_args)
            self.setup_logging(self.config)
            self.reporter = Reporter(self.config)
            return self.dispatch(parsed_args)
        except (CollapsarError, ValueError, OSError) as e:
            print(f"collapsar: error: {e}", file=sys.stderr)
            return EXIT_USAGE


def _combine(codes: List[int]) -> int:
    """Worst outcome wins: negative over inconclusive over success"""
    if EXIT_NEGATIVE in codes:
        return EXIT_NEGATIVE
    if EXIT_INCONCLUSIVE in codes:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def main() -> None:
    """Main function for CLI entry point"""
    cli = CollapsarCLI()
    sys.exit(cli.run())


if __name__ == '__main__':
    main()
