import argparse
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

from permball import __version__, config
from permball.analysis import GENERATING_METHODS, generating_set
from permball.basis import basis, basis_via_poset_descent
from permball.common import Model
from permball.errors import BudgetExceededError, PermutationFormatError
from permball.models import get_engine, neighbors
from permball.permutation import (
	Permutation, PermSet, enumerate_plus_irreducible, is_plus_irreducible, plus_irreducible_count, reduce, strips,
)
from permball.verify import DEFAULT_K, DEFAULT_MAX_N, CheckStatus, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class Outcome(NamedTuple):
	model: Optional[str]
	parameters: Dict[str, Any]
	result: Dict[str, Any]
	exit_code: int = EXIT_OK


def _elements(perms: PermSet, count_only: bool = False) -> Dict[str, Any]:
	payload: Dict[str, Any] = {'count': len(perms)}
	if not count_only:
		payload['elements'] = perms.to_strings()
	return payload


def cmd_distance(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	p = Permutation.parse(args.perm)
	limits.check_len(len(p))
	engine = get_engine(model, limits)
	parameters: Dict[str, Any] = {'perm': str(p)}
	if args.to is not None:
		q = Permutation.parse(args.to)
		parameters['to'] = str(q)
		dist = engine.pairwise_distance(p, q)
	else:
		dist = engine.distance(p)
	return Outcome(model.value, parameters, {'model': model.value, 'distance': dist})


def cmd_neighbors(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	p = Permutation.parse(args.perm)
	limits.check_len(len(p))
	return Outcome(model.value, {'perm': str(p)}, {'model': model.value, **_elements(neighbors(p, model), args.count_only)})


def cmd_ball(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	perms = get_engine(model, limits).ball(args.n, args.k)
	parameters = {'n': args.n, 'k': args.k}
	return Outcome(model.value, parameters, {'k': args.k, 'model': model.value, 'n': args.n, **_elements(perms, args.count_only)})


def cmd_genset(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	report = generating_set(args.k, model, args.method, limits)
	parameters = {'k': args.k, 'method': args.method}
	result = {
		'k': report.k,
		'model': model.value,
		'method': report.method,
		'element_length': report.element_length,
		**_elements(report.elements, args.count_only),
	}
	return Outcome(model.value, parameters, result)


def cmd_basis(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	if args.method == 'filter':
		report = basis(args.k, model, args.probe_extra_length, limits)
	else:
		if args.probe_extra_length:
			raise ValueError('--probe-extra-length needs --method filter')
		report = basis_via_poset_descent(args.k, model, limits)
	parameters = {'k': args.k, 'method': args.method, 'probe_extra_length': args.probe_extra_length}
	result: Dict[str, Any] = {
		'k': report.k,
		'model': model.value,
		'method': report.method,
		'length_bound_used': report.length_bound_used,
		**_elements(report.elements, args.count_only),
	}
	if report.probe_result is not None:
		result['probe'] = {'length': report.probe_result.length, **_elements(report.probe_result.elements)}
	return Outcome(model.value, parameters, result)


def cmd_verify(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	report = run_suite(args.model, args.k, args.max_n, args.golden, limits)
	parameters = {'k': args.k, 'max_n': args.max_n, 'golden': args.golden}
	result = {
		'model': [m.value for m in report.models],
		'checks': [{'name': r.name, 'status': r.status.value, 'detail': r.detail} for r in report.results],
		'summary': {status.value: report.count(status) for status in CheckStatus},
		'ok': report.ok,
	}
	return Outcome(args.model, parameters, result, EXIT_OK if report.ok else EXIT_VERIFY_FAILED)


def cmd_count_irreducible(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	if args.n < 1:
		raise ValueError(f'length {args.n} is out of range [1, +inf)')
	result: Dict[str, Any] = {'n': args.n, 'count': plus_irreducible_count(args.n - 1)}
	if args.enumerate:
		result['enumerated'] = len(enumerate_plus_irreducible(args.n, limits))
	return Outcome(None, {'n': args.n, 'enumerate': args.enumerate}, result)


def cmd_diameter(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	model = Model.parse(args.model)
	diameter, boundary = get_engine(model, limits).diameter(args.n)
	result = {'model': model.value, 'n': args.n, 'diameter': diameter, **_elements(boundary, args.count_only)}
	return Outcome(model.value, {'n': args.n}, result)


def cmd_reduce(args: argparse.Namespace, limits: config.Limits) -> Outcome:
	p = Permutation.parse(args.perm)
	result = {
		'perm': str(p),
		'strips': [list(s) for s in strips(p)],
		'reduced': str(reduce(p)),
		'plus_irreducible': is_plus_irreducible(p),
	}
	return Outcome(None, {'perm': str(p)}, result)


def _render_text(command: str, outcome: Outcome) -> List[str]:
	lines: List[str] = []
	for key, value in outcome.result.items():
		if command == 'verify' and key == 'checks':
			for check in value:
				lines.append(f'{check["status"]:<10} {check["name"]}: {check["detail"]}')
		elif isinstance(value, list) and key == 'elements':
			lines.append(f'{key}: {" ".join(value)}')
		elif isinstance(value, (dict, list)):
			lines.append(f'{key}: {json.dumps(value)}')
		else:
			lines.append(f'{key}: {value}')
	return lines


COMMANDS: Dict[str, Callable[[argparse.Namespace, config.Limits], Outcome]] = {
	'distance': cmd_distance,
	'neighbors': cmd_neighbors,
	'ball': cmd_ball,
	'genset': cmd_genset,
	'basis': cmd_basis,
	'verify': cmd_verify,
	'count-irreducible': cmd_count_irreducible,
	'diameter': cmd_diameter,
	'reduce': cmd_reduce,
}


def build_parser() -> argparse.ArgumentParser:
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')
	common.add_argument('--max-len', type=int, default=None, help=f'Longest permutation any enumeration may touch, default {config.Limits.DEFAULT_MAX_LEN} or ${config.MAX_LEN_ENV}')
	common.add_argument('--max-states', type=int, default=None, help=f'Largest search state set, default {config.Limits.DEFAULT_MAX_STATES}')
	common.add_argument('-v', '--verbose', action='store_true', help='Enable debug logging on stderr')

	def model_arg(p: argparse.ArgumentParser, required: bool = True):
		kwargs: Dict[str, Any] = {'required': True} if required else {'default': None}
		p.add_argument('--model', choices=[m.value for m in Model], help='Rearrangement model', **kwargs)

	parser = argparse.ArgumentParser(prog='permball', description='Exact block and prefix transposition distances, balls, generating sets and bases')
	parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
	subparsers = parser.add_subparsers(dest='command', required=True)

	p = subparsers.add_parser('distance', parents=[common], help='Exact distance to the identity, or to --to')
	model_arg(p)
	p.add_argument('perm')
	p.add_argument('--to', default=None, help='Measure to this permutation instead of the identity')

	p = subparsers.add_parser('neighbors', parents=[common], help='Permutations one move away')
	model_arg(p)
	p.add_argument('perm')
	p.add_argument('--count-only', action='store_true')

	p = subparsers.add_parser('ball', parents=[common], help='Permutations of length n at distance at most k')
	model_arg(p)
	p.add_argument('-n', type=int, required=True)
	p.add_argument('-k', type=int, required=True)
	p.add_argument('--count-only', action='store_true')

	p = subparsers.add_parser('genset', parents=[common], help='Generating set of B_k')
	model_arg(p)
	p.add_argument('-k', type=int, required=True)
	p.add_argument('--method', choices=list(GENERATING_METHODS), default='direct')
	p.add_argument('--count-only', action='store_true')

	p = subparsers.add_parser('basis', parents=[common], help='Basis of B_k')
	model_arg(p)
	p.add_argument('-k', type=int, required=True)
	p.add_argument('--method', choices=['filter', 'poset-descent'], default='filter')
	p.add_argument('--probe-extra-length', action='store_true', help='Also search one length above the proven bound')
	p.add_argument('--count-only', action='store_true')

	p = subparsers.add_parser('verify', parents=[common], help='Run the property and exact value checks')
	model_arg(p, required=False)
	p.add_argument('-k', type=int, default=DEFAULT_K)
	p.add_argument('--max-n', type=int, default=DEFAULT_MAX_N, help='Longest length of the exhaustive sweeps')
	p.add_argument('--golden', default=None, help='Alternative golden value file')

	p = subparsers.add_parser('count-irreducible', parents=[common], help='Number of plus irreducible permutations of length n')
	p.add_argument('-n', type=int, required=True)
	p.add_argument('--enumerate', action='store_true', help='Cross-check by enumeration')

	p = subparsers.add_parser('diameter', parents=[common], help='Diameter of S_n and the permutations attaining it')
	model_arg(p)
	p.add_argument('-n', type=int, required=True)
	p.add_argument('--count-only', action='store_true')

	p = subparsers.add_parser('reduce', parents=[common], help='Strips and reduction of a permutation')
	p.add_argument('perm')

	return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
	parser = build_parser()
	args = parser.parse_args(argv)

	logging.basicConfig(
		level=logging.DEBUG if args.verbose else logging.WARNING,
		format='%(asctime)s - %(levelname)s - %(name)s - %(message)s',
		stream=sys.stderr,
	)

	start = time.perf_counter()
	try:
		if args.max_len is not None:
			limits = config.Limits(args.max_len, max_states=args.max_states)
		else:
			limits = config.Limits.from_env(max_states=args.max_states)
		outcome = COMMANDS[args.command](args, limits)
	except BudgetExceededError as e:
		print(f'permball {args.command}: refused: {e}', file=sys.stderr)
		return EXIT_BUDGET
	except PermutationFormatError as e:
		print(f'permball {args.command}: invalid permutation: {e}', file=sys.stderr)
		return EXIT_USAGE
	except (OSError, ValueError) as e:
		print(f'permball {args.command}: {e}', file=sys.stderr)
		return EXIT_USAGE
	elapsed = time.perf_counter() - start
	logger.debug('%s finished in %.3fs', args.command, elapsed)

	if args.format == 'json':
		envelope = {
			'command': args.command,
			'model': outcome.model,
			'parameters': outcome.parameters,
			'result': outcome.result,
			'elapsed': round(elapsed, 6),
		}
		print(json.dumps(envelope, indent=2))
	else:
		for line in _render_text(args.command, outcome):
			print(line)
	return outcome.exit_code
