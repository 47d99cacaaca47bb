#!/usr/bin/env python3
"""
Command layer of flagk.

This module provides:
- JobSpec, the validated description of one command invocation
- cmd_roots, cmd_weyl, cmd_paths, cmd_character, cmd_expand, cmd_verify
- A result cache keyed by the SHA-256 of the canonical JobSpec
- run(argv), the argparse front end used by main.py

Every command returns (exit status, output text); output goes to stdout and
log lines go to stderr.
"""
import argparse
import hashlib
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from config import CACHE_DIR, SEED
from src import laurent, lspath, pieri
from src.rootdata import (
    build_root_system, check_dominant_integral, parse_cartan_type, weight_to_json, weyl_dimension,
)
from src.suites import SUITES, run_suite
from src.weyl import format_word, generate_group, parse_word
from utils import logging_utils
from utils.error_utils import ConsistencyError, FlagKError, PreconditionError
from utils.file_utils import file_exists, get_cache_path
from utils.json_utils import canonical_dumps, dumps, fraction_to_str, read_json, write_json
from utils.logging_utils import log_error, log_info, log_success

COMMANDS = ('roots', 'weyl', 'paths', 'character', 'expand', 'verify')
CACHED_COMMANDS = ('roots', 'weyl', 'paths', 'character', 'expand')
WEIGHT_COMMANDS = ('paths', 'character', 'expand')


@dataclass(frozen=True)
class JobSpec:
    """One validated command invocation."""
    command: str
    cartan_type: Optional[str] = None
    rank: Optional[int] = None
    weight: Tuple[int, ...] = ()
    word: Tuple[int, ...] = ()
    format: str = 'text'
    cache_dir: Optional[str] = None
    suite: Optional[str] = None
    seed: Optional[int] = None
    dot: bool = False
    table: bool = False

    def cache_fields(self):
        fields = asdict(self)
        fields.pop('cache_dir')
        fields['weight'] = list(self.weight)
        fields['word'] = list(self.word)
        return fields

    def cache_key(self):
        return hashlib.sha256(canonical_dumps(self.cache_fields()).encode('utf-8')).hexdigest()

    def root_system(self):
        return build_root_system(self.cartan_type, self.rank)


def _parse_ints(text, what):
    if text is None or str(text).strip() == '':
        return ()
    try:
        return tuple(int(part) for part in str(text).replace(' ', '').split(',') if part != '')
    except ValueError:
        raise PreconditionError(f"Malformed {what} {text!r}: expected comma-separated integers") from None


def build_job_spec(args) -> JobSpec:
    """Validate parsed arguments into a JobSpec.

    Raises:
        RootDataError: On an invalid type, rank, weight or word index
        PreconditionError: On malformed or missing arguments
    """
    command = args.command
    if command not in COMMANDS:
        raise PreconditionError(f"Unknown command {command!r}")

    if command == 'verify':
        suite = getattr(args, 'suite', None)
        if suite not in SUITES and suite != 'all':
            raise PreconditionError(f"Unknown suite {suite!r}")
        seed = getattr(args, 'seed', None)
        return JobSpec(
            command=command, format=args.format, suite=suite,
            seed=SEED if seed is None else seed,
        )

    if not getattr(args, 'type', None):
        raise PreconditionError(f"{command} needs --type")
    cartan_type, rank = parse_cartan_type(args.type, getattr(args, 'rank', None))
    rs = build_root_system(cartan_type, rank)

    weight = _parse_ints(getattr(args, 'weight', None), 'weight')
    if command in WEIGHT_COMMANDS:
        if not weight:
            raise PreconditionError(f"{command} needs --lambda")
        weight = tuple(int(a) for a in check_dominant_integral(rs, weight))

    raw_word = getattr(args, 'word', None)
    if raw_word and ',' not in raw_word:
        try:
            word = parse_word(raw_word)
        except ValueError:
            raise PreconditionError(f"Malformed word {raw_word!r}") from None
    else:
        word = _parse_ints(raw_word, 'word')
    for i in word:
        rs.check_index(i)

    cache_dir = CACHE_DIR or getattr(args, 'cache_dir', None)
    return JobSpec(
        command=command,
        cartan_type=rs.cartan_type,
        rank=rs.rank,
        weight=weight,
        word=word,
        format=args.format,
        cache_dir=cache_dir,
        dot=bool(getattr(args, 'dot', False)),
        table=bool(getattr(args, 'table', False)),
    )


def _weights(weights):
    return [weight_to_json(weight) for weight in weights]


def cmd_roots(spec: JobSpec):
    rs = spec.root_system()
    data = {
        'type': rs.cartan_type,
        'rank': rs.rank,
        'cartan_matrix': [list(row) for row in rs.cartan_matrix],
        'simple_roots': _weights(rs.simple_roots),
        'positive_roots': _weights(rs.positive_roots),
        'positive_root_coords': [list(c) for c in rs.root_coords],
        'rho': [int(a) for a in rs.rho],
    }
    if spec.format == 'json':
        return 0, dumps(data) + '\n'
    lines = [f"Root system {rs.name}", "Cartan matrix:"]
    lines += [f"  {list(row)}" for row in rs.cartan_matrix]
    lines.append(f"Positive roots ({rs.num_positive_roots}), fundamental-weight / simple-root coordinates:")
    lines += [f"  {list(beta)}  {list(coords)}" for beta, coords in zip(rs.positive_roots, rs.root_coords)]
    lines.append(f"rho = {list(rs.rho)}")
    return 0, '\n'.join(lines) + '\n'


def cmd_weyl(spec: JobSpec):
    rs = spec.root_system()
    group = generate_group(rs)
    data = {
        'type': rs.cartan_type,
        'rank': rs.rank,
        'order': len(group),
        'longest_word': list(group.longest.word),
    }
    if spec.word:
        w = group.from_word(spec.word)
        data['element'] = {
            'word': list(spec.word),
            'reduced_word': list(w.word),
            'length': w.length,
            'inverse_word': list(group.inverse(w).word),
            'omega_images': _weights(w.key),
            'lower_interval_size': len(group.lower_interval(w)),
        }
    if spec.format == 'json':
        return 0, dumps(data) + '\n'
    lines = [
        f"Weyl group of {rs.name}: order {len(group)}",
        f"w0 = {format_word(group.longest.word)} (length {group.longest.length})",
    ]
    if spec.word:
        element = data['element']
        lines += [
            f"w = {format_word(spec.word)} = {format_word(element['reduced_word'])} (length {element['length']})",
            f"w^-1 = {format_word(element['inverse_word'])}",
            f"|[e, w]| = {element['lower_interval_size']}",
        ]
    return 0, '\n'.join(lines) + '\n'


def cmd_paths(spec: JobSpec):
    rs = spec.root_system()
    if spec.dot:
        return 0, lspath.to_dot(lspath.crystal_graph(rs, spec.weight))
    paths = lspath.generate_paths(rs, spec.weight)
    if spec.format == 'json':
        data = {
            'type': rs.cartan_type,
            'rank': rs.rank,
            'lambda': list(spec.weight),
            'count': len(paths),
            'paths': [lspath.path_to_json(path) for path in paths],
        }
        return 0, dumps(data) + '\n'
    lines = [f"LS paths of shape {list(spec.weight)} in {rs.name}: {len(paths)}"]
    for path in paths:
        endpoint = ', '.join(fraction_to_str(a) for a in path.endpoint())
        lines.append(f"  {path.describe()}  ->  [{endpoint}]")
    return 0, '\n'.join(lines) + '\n'


def cmd_character(spec: JobSpec):
    rs = spec.root_system()
    character = laurent.demazure_character(rs, spec.weight)
    dimension = weyl_dimension(rs, spec.weight)
    if laurent.epsilon(character) != dimension:
        raise ConsistencyError(f"epsilon(char) = {laurent.epsilon(character)} but dim V = {dimension}")
    if spec.format == 'json':
        data = {
            'type': rs.cartan_type,
            'rank': rs.rank,
            'lambda': list(spec.weight),
            'character': character.to_json(),
            'dimension': dimension,
        }
        return 0, dumps(data) + '\n'
    lines = [f"char V_{list(spec.weight)} in {rs.name} (dimension {dimension}):"]
    for weight, coeff in character.items():
        lines.append(f"  {fraction_to_str(coeff)} e^{[fraction_to_str(a) for a in weight]}")
    return 0, '\n'.join(lines) + '\n'


def cmd_expand(spec: JobSpec):
    rs = spec.root_system()
    group = generate_group(rs)
    w = group.from_reduced_word(spec.word)
    expansion = pieri.expand(rs, spec.weight, w)
    rows = pieri.path_table(rs, spec.weight, w) if spec.table else []
    if spec.format == 'json':
        data = expansion.to_json()
        if spec.table:
            data['table'] = [row.to_json() for row in rows]
        return 0, dumps(data) + '\n'
    lines = [
        f"e^{list(spec.weight)} [O_X_{format_word(w.word)}] in K({rs.name}/B): "
        f"{expansion.path_count} paths",
    ]
    for v, c in expansion.items():
        lines.append(f"  {c} [O_X_{format_word(v.word)}]    v^-1 = {format_word(group.inverse(v).word)}")
    if spec.table:
        lines.append("endpoint | maximal lift | initial direction | v^-1")
        for row in rows:
            lines.append(
                f"  {list(row.endpoint)} | {' > '.join(format_word(t.word) for t in row.lift)} | "
                f"{format_word(row.initial.word)} | {format_word(row.final_inverse.word)}"
            )
    return 0, '\n'.join(lines) + '\n'


def cmd_verify(spec: JobSpec):
    result = run_suite(spec.suite, spec.seed)
    status = 0 if result.ok else 1
    if spec.format == 'json':
        data = {'suite': spec.suite, 'seed': spec.seed, 'checks': result.checks,
                'ok': result.ok, 'failures': result.failures}
        return status, dumps(data) + '\n'
    lines = [result.summary()] + [f"  {failure}" for failure in result.failures]
    return status, '\n'.join(lines) + '\n'


COMMAND_HANDLERS = {
    'roots': cmd_roots,
    'weyl': cmd_weyl,
    'paths': cmd_paths,
    'character': cmd_character,
    'expand': cmd_expand,
    'verify': cmd_verify,
}


def run_job(spec: JobSpec):
    """Run one job, consulting the cache for deterministic commands.

    Returns:
        tuple: (exit status, output text)
    """
    cache_path = None
    if spec.cache_dir and spec.command in CACHED_COMMANDS:
        cache_path = get_cache_path(spec.cache_dir, spec.cache_key())
        if file_exists(cache_path):
            log_info('Cache', f"Hit {cache_path}")
            return 0, read_json(cache_path)['output']

    status, output = COMMAND_HANDLERS[spec.command](spec)

    if cache_path and status == 0:
        if write_json(cache_path, {'spec': spec.cache_fields(), 'output': output}):
            log_info('Cache', f"Stored {cache_path}")
    return status, output


def build_parser():
    """Build the argparse parser for all commands."""
    parser = argparse.ArgumentParser(
        prog='flagk',
        description='flagk - exact Pieri-Chevalley computations in K(G/B)',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py roots --type G2
  python main.py weyl --type B --rank 2 --word 1,2,1
  python main.py paths --type G2 --lambda 0,1 --dot
  python main.py character --type A1 --lambda 1 --format json
  python main.py expand --type G2 --rank 2 --lambda 0,1 --word 1,2,1,2 --table
  python main.py verify --suite g2golden
        """
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'json'), default='text', help='Output format (default: text)')
    common.add_argument('--quiet', action='store_true', help='Suppress INFO and SUCCESS log lines')

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument('--type', required=True, help="Cartan type, e.g. G2 or G together with --rank 2")
    typed.add_argument('--rank', type=int, help='Rank (optional when the type carries it)')
    typed.add_argument('--cache-dir', help='Result cache directory (FLAGK_CACHE overrides)')

    subparsers.add_parser('roots', parents=[common, typed], help='Cartan matrix, positive roots and rho')

    weyl = subparsers.add_parser('weyl', parents=[common, typed], help='Weyl group order and element data')
    weyl.add_argument('--word', help='Word in simple reflections, e.g. 1,2,1')

    paths = subparsers.add_parser('paths', parents=[common, typed], help='LS paths of shape lambda')
    paths.add_argument('--lambda', dest='weight', required=True, help='Dominant weight, e.g. 0,1')
    paths.add_argument('--dot', action='store_true', help='Emit the crystal graph in Graphviz DOT')

    character = subparsers.add_parser('character', parents=[common, typed], help='Character of V_lambda')
    character.add_argument('--lambda', dest='weight', required=True, help='Dominant weight, e.g. 1')

    expand = subparsers.add_parser('expand', parents=[common, typed], help='Expand e^lambda [O_X_w]')
    expand.add_argument('--lambda', dest='weight', required=True, help='Dominant weight, e.g. 0,1')
    expand.add_argument('--word', default='', help='Reduced word of w, e.g. 1,2,1,2')
    expand.add_argument('--table', action='store_true', help='Also print the per-path table')

    verify = subparsers.add_parser('verify', parents=[common], help='Run a verification suite')
    verify.add_argument('--suite', required=True, choices=sorted(SUITES) + ['all'], help='Suite name')
    verify.add_argument('--seed', type=int, help='Seed for randomized checks (default: FLAGK_SEED)')

    return parser


def run(argv=None, out=None):
    """Parse argv, run the command and write its output.

    Returns:
        int: 0 on success, 1 on a failed check, 2 on invalid input
    """
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.quiet:
        logging_utils.configure(quiet=True)

    try:
        spec = build_job_spec(args)
        status, output = run_job(spec)
    except ConsistencyError as e:
        log_error('CLI', f"Consistency check failed: {e}", e)
        return 1
    except FlagKError as e:
        log_error('CLI', f"Invalid input: {e}", e)
        return 2

    out.write(output)
    if status == 0:
        log_success('CLI', f"{args.command} completed")
    return status
