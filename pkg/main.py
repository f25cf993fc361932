#!/usr/bin/env python3
"""
Thinness Lab - thinness variants of graphs
Builds, verifies and computes vertex layouts over a JSON interface

Features:
- Graph family generators (crowns, grids, cographs, random graphs)
- Witness layouts for twelve thinness variants
- Layout verification with breaking-triple reports
- Exact search for small graphs, optionally in parallel
- Perfect-order coloring and mu-coloring reductions

Exit status: 0 on success, 1 on a negative verdict, 2 on usage or input errors.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

# Add src to path for development
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from src.core.logging_config import setup_logging

from src.core.config import ConfigManager
from src.core.engine import ThinnessEngine
from src.core.errors import ThinnessError
from src.constructors.base import FieldType

# === CONSTRUCTORS ===
from src.constructors.crown import CrownConstructor, check_condition1, check_condition2, classify_little_big, crown_value
from src.constructors.grid import (
    GridFp2Constructor,
    GridFpnConstructor,
    GridThinConstructor,
    fp_bounds,
    thin_bounds,
)
from src.constructors.cograph import CographConstructor, fp_cograph, thin_cograph, witness_fp, witness_thin
from src.constructors.matching import CocktailPartyConstructor, CrownComplementConstructor, MatchingConstructor

# === GRAPHS ===
from src.graphs import coloring, graph as families
from src.graphs.cotree import evaluate, parse_cotree
from src.graphs.exact import chromatic_number, find_k_coloring, find_mu_coloring
from src.graphs.graph import CrownLabeling, Graph
from src.graphs.layout import VARIANTS, Layout, check_strong_via_neighborhoods, variant

logger = logging.getLogger(__name__)

VERSION = 'Thinness Lab 1.0.0'

OK, NEGATIVE, USAGE = 0, 1, 2


class ThinnessLab:
    """Main application class."""

    def __init__(self, config_dir: Optional[Path] = None):
        self.config = ConfigManager(config_dir)
        self.engine = ThinnessEngine(self.config)
        self._register_constructors()

    def _register_constructors(self):
        """Register all available witness constructors."""
        # Crowns
        self.engine.register_constructor(CrownConstructor)

        # Grids
        self.engine.register_constructor(GridThinConstructor)
        self.engine.register_constructor(GridFp2Constructor)
        self.engine.register_constructor(GridFpnConstructor)

        # Cographs
        self.engine.register_constructor(CographConstructor)

        # Matchings and complements
        self.engine.register_constructor(MatchingConstructor)
        self.engine.register_constructor(CocktailPartyConstructor)
        self.engine.register_constructor(CrownComplementConstructor)

        logger.debug(f"Registered {len(self.engine.get_registered_constructors())} constructors")


# ---------------------------------------------------------------- I/O helpers

def _read_json(path: str) -> Any:
    if path == '-':
        return json.loads(sys.stdin.read())
    return json.loads(Path(path).read_text())


def _emit(data: Any) -> None:
    print(json.dumps(data))


def _unwrap(data: Any, key: str) -> Any:
    # construct and reduce output carry the graph and layout side by side
    if isinstance(data, dict) and key in data:
        return data[key]
    return data


def _load_graph(path: str) -> Graph:
    return Graph.from_dict(_unwrap(_read_json(path), 'graph'))


def _load_layout(path: str) -> Layout:
    return Layout.from_dict(_unwrap(_read_json(path), 'layout'))


def _load_order(path: str) -> list[int]:
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get('order')
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ThinnessError(f"{path} does not hold a vertex order")
    return data


# ---------------------------------------------------------------- commands

def cmd_gen(app: ThinnessLab, args) -> int:
    family = args.family
    if family == 'crown':
        graph = families.crown(args.n)[0]
    elif family == 'grid':
        graph = families.grid(args.n, args.m)[0]
    elif family == 'complete':
        graph = families.complete(args.n)
    elif family == 'complete-bipartite':
        graph = families.complete_bipartite(args.p, args.q)
    elif family == 'matching':
        graph = families.matching_nk2(args.n)
    elif family == 'path':
        graph = families.path(args.n)
    elif family == 'random':
        graph = families.random_graph(args.n, args.p, seed=_seed(app, args))
    elif family == 'proper-interval':
        graph = families.random_proper_interval_graph(args.n, seed=_seed(app, args))[0]
    else:
        graph = evaluate(parse_cotree(args.expr))
    _emit(graph.to_dict())
    return OK


def cmd_construct(app: ThinnessLab, args) -> int:
    constructor_class = app.engine.get_constructor(args.constructor)
    params = {
        f.name: getattr(args, f.name)
        for f in constructor_class.get_parameter_fields()
        if getattr(args, f.name, None) is not None
    }
    graph, layout, spec = app.engine.construct(args.constructor, params)
    if not args.with_graph:
        _emit(layout.to_dict())
        return OK
    _emit({
        'variant': spec.name,
        'width': layout.width,
        'graph': graph.to_dict(),
        'layout': layout.to_dict(),
    })
    return OK


def cmd_verify(app: ThinnessLab, args) -> int:
    graph = _load_graph(args.graph)
    layout = _load_layout(args.layout)
    spec = variant(args.variant)
    verdict = app.engine.verify(graph, layout, spec)
    report = verdict.to_dict()
    report['variant'] = spec.name
    ok = verdict.ok
    if args.neighborhoods:
        neighborhoods = check_strong_via_neighborhoods(graph, layout)
        report['neighborhoods'] = neighborhoods.to_dict()
        ok = ok and neighborhoods.ok
    if args.crown:
        labels = CrownLabeling(graph.n // 2)
        labels.check(graph)
        tags = classify_little_big(labels, list(layout.order))
        report['crown'] = {
            'little': [labels.name(v) for v in layout.order if tags[v] == 'little'],
            'condition1': check_condition1(graph, labels, layout).to_dict(),
            'condition2': check_condition2(graph, labels, layout).to_dict(),
        }
    _emit(report)
    return OK if ok else NEGATIVE


def cmd_exact(app: ThinnessLab, args) -> int:
    graph = _load_graph(args.graph)
    result = app.engine.run_exact(graph, variant(args.variant), jobs=args.jobs, budget_ms=args.budget_ms)
    _emit(result.to_dict())
    return OK


def cmd_cograph(app: ThinnessLab, args) -> int:
    expr = parse_cotree(args.expr)
    precedence = args.param == 'fp'
    data: dict[str, Any] = {
        'param': args.param,
        'value': fp_cograph(expr) if precedence else thin_cograph(expr),
        'graph': evaluate(expr).to_dict(),
    }
    if args.witness:
        data['layout'] = (witness_fp(expr) if precedence else witness_thin(expr)).to_dict()
    _emit(data)
    return OK


def cmd_color(app: ThinnessLab, args) -> int:
    graph = _load_graph(args.graph)
    if args.action == 'greedy':
        colors = coloring.greedy_color(graph, _load_order(args.order))
        _emit({'colors': colors, 'count': max(colors, default=0)})
        return OK
    if args.action == 'perfect-order':
        order = coloring.build_perfect_order(graph, _load_layout(args.layout))
        verdict = coloring.verify_perfect_order(graph, order)
        colors = coloring.greedy_color(graph, order)
        _emit({'order': order, 'perfect': verdict.ok, 'colors': colors, 'count': max(colors, default=0)})
        return OK if verdict else NEGATIVE
    if args.action == 'chromatic':
        k = chromatic_number(graph)
        found = find_k_coloring(graph, k) if k else []
        _emit({'chromatic_number': k, 'colors': [c + 1 for c in found]})
        return OK
    mu = coloring.MuPayload.model_validate(_read_json(args.mu)).mu
    found = find_mu_coloring(graph, mu)
    _emit({'colorable': found is not None, 'colors': found})
    return OK if found is not None else NEGATIVE


def cmd_reduce(app: ThinnessLab, args) -> int:
    graph = _load_graph(args.graph)
    mu = coloring.MuPayload.model_validate(_read_json(args.mu)).mu
    inst = coloring.MuInstance(graph, _load_order(args.order), mu)
    if args.target == 'gprime':
        reduced, layout = coloring.reduce_gprime(inst)
        spec = variant('fp')
    else:
        reduced, layout = coloring.reduce_gdoubleprime(inst)
        spec = variant('pthin')
    verdict = app.engine.verify(reduced, layout, spec)
    _emit({
        'variant': spec.name,
        'colors': inst.n,
        'graph': reduced.to_dict(),
        'layout': layout.to_dict(),
        'verdict': verdict.to_dict(),
    })
    return OK if verdict else NEGATIVE


def cmd_bounds(app: ThinnessLab, args) -> int:
    if args.family == 'crown':
        _emit({'variant': args.variant, 'value': crown_value(variant(args.variant), args.n)})
        return OK
    m = args.m if args.m is not None else args.n
    lower, upper = thin_bounds(args.n, m) if args.variant == 'thin' else fp_bounds(args.n, m)
    _emit({'variant': args.variant, 'lower': lower, 'upper': upper})
    return OK


COMMANDS = {
    'gen': cmd_gen,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'exact': cmd_exact,
    'cograph': cmd_cograph,
    'color': cmd_color,
    'reduce': cmd_reduce,
    'bounds': cmd_bounds,
}


def _seed(app: ThinnessLab, args) -> Optional[int]:
    return args.seed if args.seed is not None else app.config.settings.seed


# ---------------------------------------------------------------- parser

def _variant_arg(parser: argparse.ArgumentParser, required: bool = True, default: Optional[str] = None):
    parser.add_argument('--variant', choices=list(VARIANTS), required=required, default=default,
                        help='Thinness variant')


def _search_options(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps an omitted sub-command flag from hiding the global one
    parser.add_argument('--jobs', '-j', type=int, default=argparse.SUPPRESS, help='Worker processes for exact search')
    parser.add_argument('--budget-ms', type=int, default=argparse.SUPPRESS, help='Exact search budget in milliseconds')


def _seed_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--seed', type=int, default=argparse.SUPPRESS, help='Seed for random generators')


def build_parser(app: Optional[ThinnessLab] = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='thinness-lab',
        description='Thinness Lab - thinness variants of graphs',
    )
    parser.add_argument('--config-dir', '-c', type=str, default=None, help='Configuration directory')
    parser.add_argument('--jobs', '-j', type=int, default=None, help='Worker processes for exact search')
    parser.add_argument('--budget-ms', type=int, default=None, help='Exact search budget in milliseconds')
    parser.add_argument('--seed', type=int, default=None, help='Seed for random generators')
    parser.add_argument('--log-level', type=str.upper, default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level')
    parser.add_argument('--version', '-v', action='version', version=VERSION)

    commands = parser.add_subparsers(dest='command', required=True)

    # gen
    gen = commands.add_parser('gen', help='Generate a graph')
    families_parser = gen.add_subparsers(dest='family', required=True)
    for name in ('crown', 'complete', 'matching', 'path', 'proper-interval'):
        family = families_parser.add_parser(name)
        family.add_argument('--n', type=int, required=True)
        if name == 'proper-interval':
            _seed_option(family)
    grid_gen = families_parser.add_parser('grid')
    grid_gen.add_argument('--n', type=int, required=True, help='Rows')
    grid_gen.add_argument('--m', type=int, required=True, help='Columns')
    bipartite = families_parser.add_parser('complete-bipartite')
    bipartite.add_argument('--p', type=int, required=True)
    bipartite.add_argument('--q', type=int, required=True)
    random_gen = families_parser.add_parser('random')
    random_gen.add_argument('--n', type=int, required=True)
    random_gen.add_argument('--p', type=float, default=0.5, help='Edge probability')
    _seed_option(random_gen)
    families_parser.add_parser('cograph').add_argument('--expr', required=True)

    # construct: one sub-command per registered constructor
    construct = commands.add_parser('construct', help='Build a witness layout')
    constructors = construct.add_subparsers(dest='constructor', required=True)
    if app is not None:
        for info in app.engine.get_registered_constructors():
            sub = constructors.add_parser(info['id'], help=info['description'])
            for f in app.engine.get_constructor(info['id']).get_parameter_fields():
                kwargs: dict[str, Any] = {'help': f.help_text or f.label, 'default': None}
                if f.field_type is FieldType.INTEGER:
                    kwargs['type'] = int
                elif f.field_type is FieldType.SELECT:
                    kwargs['choices'] = f.options
                kwargs['required'] = f.required and f.default is None
                sub.add_argument(f'--{f.name}', **kwargs)
            sub.add_argument('--with-graph', action='store_true',
                             help='Emit variant, width and graph alongside the layout')

    # verify
    verify = commands.add_parser('verify', help='Verify a layout')
    verify.add_argument('--graph', required=True, help='Graph JSON file')
    verify.add_argument('--layout', default='-', help='Layout JSON file (default: standard input)')
    _variant_arg(verify)
    verify.add_argument('--neighborhoods', action='store_true', help='Also run the neighborhood-based strong check')
    verify.add_argument('--crown', action='store_true', help='Report the crown layout conditions')

    # exact
    exact = commands.add_parser('exact', help='Exact value by exhaustive search')
    exact.add_argument('--graph', required=True, help='Graph JSON file')
    _variant_arg(exact)
    _search_options(exact)

    # cograph
    cograph = commands.add_parser('cograph', help='Thinness of a cograph from its cotree')
    cograph.add_argument('--expr', required=True, help='Cotree expression, e.g. ((1+1)*(1+1))')
    cograph.add_argument('--param', choices=['thin', 'fp'], default='thin')
    cograph.add_argument('--witness', action='store_true', help='Include a witness layout')

    # color
    color = commands.add_parser('color', help='Coloring tools')
    actions = color.add_subparsers(dest='action', required=True)
    greedy = actions.add_parser('greedy')
    greedy.add_argument('--graph', required=True)
    greedy.add_argument('--order', required=True, help='Order JSON file')
    perfect = actions.add_parser('perfect-order')
    perfect.add_argument('--graph', required=True)
    perfect.add_argument('--layout', default='-')
    actions.add_parser('chromatic').add_argument('--graph', required=True)
    mu = actions.add_parser('mu')
    mu.add_argument('--graph', required=True)
    mu.add_argument('--mu', required=True, help='JSON file {"mu": [...]}')

    # reduce
    reduce_parser = commands.add_parser('reduce', help='mu-coloring reductions')
    reduce_parser.add_argument('target', choices=['gprime', 'gpp'])
    reduce_parser.add_argument('--graph', required=True)
    reduce_parser.add_argument('--order', required=True, help='Proper interval order JSON file')
    reduce_parser.add_argument('--mu', required=True, help='JSON file {"mu": [...]}')

    # bounds
    bounds = commands.add_parser('bounds', help='Closed-form values and bounds')
    bound_families = bounds.add_subparsers(dest='family', required=True)
    crown_bounds = bound_families.add_parser('crown')
    _variant_arg(crown_bounds)
    crown_bounds.add_argument('--n', type=int, required=True)
    grid_bounds = bound_families.add_parser('grid')
    grid_bounds.add_argument('--n', type=int, required=True, help='Rows')
    grid_bounds.add_argument('--m', type=int, default=None, help='Columns (default: n)')
    grid_bounds.add_argument('--variant', choices=['thin', 'fp'], default='thin')

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point."""
    # --config-dir is needed before the full parser can be built
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config-dir', '-c', default=None)
    known, _ = pre.parse_known_args(argv)

    try:
        app = ThinnessLab(config_dir=Path(known.config_dir) if known.config_dir else None)
        args = build_parser(app).parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE

    settings = app.config.settings
    setup_logging(
        log_dir=app.config.log_dir,
        level=getattr(logging, args.log_level or settings.log_level.upper(), logging.INFO),
        to_file=settings.log_to_file,
    )

    try:
        return COMMANDS[args.command](app, args)
    except (ThinnessError, ValidationError, json.JSONDecodeError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return USAGE


if __name__ == '__main__':
    sys.exit(main())
