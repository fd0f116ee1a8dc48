import enum
import json
import logging
import math
import random
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

from permball import config
from permball.analysis import (
	GeneratingSetReport, MiUnion, PtdCase, PtdTag, generating_set, generator_length, mi_plus_one, mi_plus_one_brute_force,
	ptd_case_predicates, ptd_generating_set_size, ptd_inflate, ptd_parent, td_inflate, td_inflations,
)
from permball.basis import BasisReport, avoids_all, basis, basis_via_poset_descent, comparable_pairs, verify_class_closure
from permball.common import Model
from permball.errors import BudgetExceededError
from permball.models import TranspositionIndices, apply_transposition, get_engine, neighbors
from permball.permutation import (
	IndexMultiset, Permutation, PermSet, all_permutations, breakpoint_count, contains_pattern, enumerate_plus_irreducible,
	inflations, is_plus_irreducible, mi_member, monotone_inflate, plus_irreducible_count, plus_irreducible_count_closed_form,
	reduce, strips,
)

logger = logging.getLogger(__name__)

GOLDEN_PATH = Path(__file__).parent / 'data' / 'golden.json'
DEFAULT_K = 2
DEFAULT_MAX_N = 6


class CheckStatus(str, enum.Enum):
	PASS = 'PASS'
	FAIL = 'FAIL'
	SKIPPED = 'SKIPPED'
	DIAGNOSTIC = 'DIAGNOSTIC'  # failed, but the property is not a proven one

	def __str__(self) -> str:
		return self.value


class CheckResult(NamedTuple):
	name: str
	status: CheckStatus
	detail: str


class VerifyReport(NamedTuple):
	models: Tuple[Model, ...]
	k: int
	max_n: int
	results: Tuple[CheckResult, ...]

	@property
	def ok(self) -> bool:
		return all(r.status is not CheckStatus.FAIL for r in self.results)

	def count(self, status: CheckStatus) -> int:
		return sum(1 for r in self.results if r.status is status)


def load_golden(path: Union[str, Path, None] = None) -> Dict[str, Any]:
	path = Path(path) if path is not None else GOLDEN_PATH
	with open(path, 'r', encoding='utf8') as f:
		data = json.load(f)
	if not isinstance(data, dict):
		raise ValueError(f'golden file {path} does not hold a JSON object')
	return data


class _Skip(Exception):
	pass


Outcome = Tuple[bool, str]


def _set_diff(expected: Iterable[Permutation], actual: Iterable[Permutation]) -> str:
	expected, actual = PermSet(expected), PermSet(actual)
	missing = [str(p) for p in expected if p not in actual]
	extra = [str(p) for p in actual if p not in expected]
	return f'missing {missing[:8]} extra {extra[:8]}'


class _Suite:
	def __init__(self, models: Tuple[Model, ...], k: int, max_n: int, golden: Dict[str, Any], limits: config.Limits):
		self.models = models
		self.k = k
		self.max_n = max_n
		self.golden = golden
		self.limits = limits
		self.__gensets: Dict[Tuple[int, Model, str], GeneratingSetReport] = {}
		self.__bases: Dict[Tuple[int, Model, str], BasisReport] = {}
		self.__tables: Dict[Tuple[Model, int], Dict[Permutation, int]] = {}

	# ------------------------------------------------ helpers

	def cap(self, n: int) -> int:
		return min(n, self.max_n)

	def table(self, m: Model, n: int) -> Dict[Permutation, int]:
		key = (m, n)
		if key not in self.__tables:
			self.__tables[key] = get_engine(m, self.limits).distance_table(n)
		return self.__tables[key]

	def genset(self, k: int, m: Model, method: str) -> PermSet:
		if k == 0:
			return PermSet([Permutation.identity(1)])
		key = (k, m, method)
		if key not in self.__gensets:
			self.__gensets[key] = generating_set(k, m, method, self.limits)  # type: ignore
		return self.__gensets[key].elements

	def basis_report(self, k: int, m: Model, method: str) -> BasisReport:
		key = (k, m, method)
		if key not in self.__bases:
			if method == 'filter':
				self.__bases[key] = basis(k, m, probe_extra=True, limits=self.limits)
			else:
				self.__bases[key] = basis_via_poset_descent(k, m, self.limits)
		return self.__bases[key]

	def golden_section(self, name: str) -> Any:
		if name not in self.golden:
			raise KeyError(f'golden file has no {name!r} section')
		return self.golden[name]

	def golden_section_or(self, name: str, default: Any, failures: List[str]) -> Any:
		"""
		Like golden_section, but a missing section becomes a failure while the caller keeps comparing its own methods
		"""
		if name not in self.golden:
			failures.append(f'golden section {name!r} missing')
			return default
		return self.golden[name]

	def basis_ks(self, m: Model) -> range:
		top = min(self.k, 2)
		if m is Model.TD:
			top = min(top, self.limits.max_td_basis_k)
		return range(1, top + 1)

	# ------------------------------------------------ permutation core

	def check_golden_core(self) -> Outcome:
		failures = []
		for entry in self.golden_section('reductions'):
			p = Permutation.parse(entry['perm'])
			if str(reduce(p)) != entry['reduced'] or len(strips(p)) != entry['strips']:
				failures.append(entry['perm'])
		for entry in self.golden_section('monotone_inflations'):
			p = Permutation.parse(entry['perm'])
			result = monotone_inflate(p, entry['vector'])
			if str(result) != entry['result'] or not mi_member(result, p):
				failures.append(entry['perm'])
		return not failures, f'failures {failures}'

	def check_plus_irreducible_counts(self) -> Outcome:
		failures: List[str] = []
		expected = self.golden_section_or('plus_irreducible_counts_by_length', None, failures)
		length = len(expected) if expected is not None else 8
		recurrence = [plus_irreducible_count(n - 1) for n in range(1, length + 1)]
		closed = [plus_irreducible_count_closed_form(n - 1) for n in range(1, length + 1)]
		top = self.cap(length)
		enumerated = [len(enumerate_plus_irreducible(n, self.limits)) for n in range(1, top + 1)]
		if closed != recurrence or enumerated != recurrence[:top]:
			failures.append('recurrence, closed form and enumeration disagree')
		if expected is not None and recurrence != expected:
			failures.append('recurrence differs from golden counts')
		return not failures, f'recurrence {recurrence}, enumerated through length {top} {enumerated}, failures {failures}'

	def check_reduction_properties(self) -> Outcome:
		checked = violations = 0
		for n in range(self.cap(8) + 1):
			for p in all_permutations(n, self.limits):
				red = reduce(p)
				checked += 1
				if reduce(red) != red or not is_plus_irreducible(red) or not contains_pattern(p, red):
					violations += 1
		return violations == 0, f'{checked} permutations, {violations} violations'

	def check_mi_membership(self) -> Outcome:
		alpha_len, p_len = min(5, self.max_n - 2), self.cap(7)
		if alpha_len < 1:
			raise _Skip(f'max_n {self.max_n} is too small')
		checked = violations = 0
		perms = [p for n in range(p_len + 1) for p in all_permutations(n, self.limits)]
		for a in range(1, alpha_len + 1):
			for alpha in enumerate_plus_irreducible(a, self.limits):
				members = inflations(alpha, p_len, self.limits)
				for p in perms:
					checked += 1
					if mi_member(p, alpha) != (p in members):
						violations += 1
		return violations == 0, f'{checked} pairs, alpha up to length {alpha_len}, p up to length {p_len}, {violations} disagreements'

	def check_mi_reduction_invariance(self) -> Outcome:
		p_len, q_len = self.cap(7) - 2, self.cap(7)
		checked = violations = 0
		for n in range(1, p_len + 1):
			for p in all_permutations(n, self.limits):
				checked += 1
				if inflations(p, q_len, self.limits) != inflations(reduce(p), q_len, self.limits):
					violations += 1
		return violations == 0, f'{checked} permutations up to length {p_len}, inflations up to length {q_len}, {violations} violations'

	def check_pattern_order(self) -> Outcome:
		rnd = random.Random(0)
		violations = 0
		small = [p for n in range(self.cap(4) + 1) for p in all_permutations(n, self.limits)]
		for p in small:
			if not contains_pattern(p, p):
				violations += 1
			for q in small:
				if p != q and len(p) == len(q) and contains_pattern(p, q):
					violations += 1

		def random_perm(n: int) -> Permutation:
			return Permutation(rnd.sample(range(1, n + 1), n))

		def random_pattern(p: Permutation, size: int) -> Permutation:
			kept = sorted(rnd.sample(range(len(p)), size))
			return Permutation.standardize(p[i] for i in kept)

		top = self.cap(7)
		triples = 0
		for _ in range(200):
			r = random_perm(top)
			q = random_pattern(r, rnd.randint(0, top))
			p = random_pattern(q, rnd.randint(0, len(q)))
			if not (contains_pattern(r, q) and contains_pattern(q, p) and contains_pattern(r, p)):
				violations += 1
			a, b = random_perm(rnd.randint(1, top)), random_perm(rnd.randint(1, top))
			c = random_perm(rnd.randint(1, top))
			if contains_pattern(c, b) and contains_pattern(b, a):
				triples += 1
				if not contains_pattern(c, a):
					violations += 1
		return violations == 0, f'{len(small)} permutations exhaustively, {200 + triples} sampled chains, {violations} violations'

	# ------------------------------------------------ rearrangement models

	def check_transposition_inverse(self) -> Outcome:
		checked = violations = 0
		for n in range(2, self.cap(6) + 1):
			for p in all_permutations(n, self.limits):
				for t in TranspositionIndices.all_of(n, Model.TD):
					checked += 1
					if apply_transposition(apply_transposition(p, t), t.inverse()) != p:
						violations += 1
		return violations == 0, f'{checked} applications, {violations} violations'

	def check_golden_distances(self, m: Model) -> Outcome:
		failures = []
		engine = get_engine(m, self.limits)
		for entry in self.golden_section('distances'):
			if entry['model'] == m.value and engine.distance(Permutation.parse(entry['perm'])) != entry['distance']:
				failures.append(entry['perm'])
		for n, entry in self.golden_section('diameters').get(m.value, {}).items():
			diameter, boundary = engine.diameter(int(n))
			if diameter != entry['diameter'] or boundary != PermSet.parse(entry['boundary']):
				failures.append(f'diameter of S_{n}')
		if m is Model.TD and len(neighbors(Permutation.identity(4), m)) != 10:
			failures.append('neighbors of 1234')
		if m is Model.PTD:
			if neighbors(Permutation.parse('21'), m) != PermSet.parse(['12']):
				failures.append('neighbors of 21')
			if neighbors(Permutation.identity(3), m) != PermSet.parse(['213', '231', '312']):
				failures.append('neighbors of 123')
		return not failures, f'failures {failures}'

	def check_breakpoint_bound(self) -> Outcome:
		checked = violations = 0
		for n in range(1, self.cap(7) + 1):
			for p, dist in self.table(Model.TD, n).items():
				checked += 1
				if dist < math.ceil(breakpoint_count(p) / 3):
					violations += 1
		return violations == 0, f'{checked} permutations, {violations} violations'

	def check_reduction_invariance(self, m: Model) -> Outcome:
		top = self.cap(7 if m is Model.TD else 6)
		checked = violations = 0
		example = None
		for n in range(1, top + 1):
			for p, dist in self.table(m, n).items():
				red = reduce(p)
				checked += 1
				if self.table(m, len(red))[red] != dist:
					violations += 1
					example = example or f'{p} vs {red}'
		return violations == 0, f'{checked} permutations, {violations} violations' + (f', first {example}' if example else '')

	def check_model_refinement(self) -> Outcome:
		checked = violations = 0
		for n in range(1, self.cap(6) + 1):
			ptd_table = self.table(Model.PTD, n)
			for p, dist in self.table(Model.TD, n).items():
				checked += 1
				if dist > ptd_table[p]:
					violations += 1
		return violations == 0, f'{checked} permutations, {violations} violations'

	def check_ball_nesting(self, m: Model) -> Outcome:
		engine = get_engine(m, self.limits)
		top = self.cap(6)
		violations = 0
		for k in range(0, min(self.k, 2) + 1):
			for n in range(top + 1):
				if not engine.ball_words(n, k) <= engine.ball_words(n, k + 1):
					violations += 1
			if not verify_class_closure(k, m, top, self.limits):
				violations += 1
		return violations == 0, f'lengths up to {top}, radii up to {min(self.k, 2)}, {violations} violations'

	def check_left_invariance(self, m: Model) -> Outcome:
		if self.max_n < 4:
			raise _Skip(f'max_n {self.max_n} is too small')
		engine = get_engine(m, self.limits)
		checked = violations = 0
		s4 = list(all_permutations(4, self.limits))
		for sigma in s4:
			for p in s4:
				for q in s4:
					checked += 1
					if engine.pairwise_distance(sigma.compose(p), sigma.compose(q)) != engine.pairwise_distance(p, q):
						violations += 1
		for n in range(1, self.cap(5) + 1):
			table = self.table(m, n)
			identity = Permutation.identity(n)
			for p, dist in table.items():
				checked += 1
				if engine.pairwise_distance(p, identity) != dist:
					violations += 1
		if self.max_n >= 5:
			rnd = random.Random(5)
			table = self.table(m, 5)
			for _ in range(100):
				sigma, p, q = (Permutation(rnd.sample(range(1, 6), 5)) for _ in range(3))
				checked += 1
				pq = engine.pairwise_distance(p, q)
				if pq != engine.pairwise_distance(sigma.compose(p), sigma.compose(q)) or pq != table[q.inverse().compose(p)]:
					violations += 1
		return violations == 0, f'{checked} comparisons, {violations} violations'

	# ------------------------------------------------ ball analysis

	def check_generating_sets(self, m: Model) -> Outcome:
		failures: List[str] = []
		expected = self.golden_section_or('generating_sets', {}, failures).get(m.value, {})
		top = min(self.k, 3 if m is Model.PTD else 2)
		for k in range(1, top + 1):
			direct, constructive = self.genset(k, m, 'direct'), self.genset(k, m, 'constructive')
			if direct != constructive:
				failures.append(f'k={k} direct vs constructive: {_set_diff(direct, constructive)}')
			if str(k) in expected and PermSet.parse(expected[str(k)]) != direct:
				failures.append(f'k={k} golden: {_set_diff(PermSet.parse(expected[str(k)]), direct)}')
		return not failures, f'k up to {top}, failures {failures}'

	def check_generator_shape(self, m: Model) -> Outcome:
		engine = get_engine(m, self.limits)
		checked = violations = 0
		for k in range(1, min(self.k, 3 if m is Model.PTD else 2) + 1):
			for p in self.genset(k, m, 'constructive'):
				checked += 1
				n = len(p)
				ok = is_plus_irreducible(p) and n == generator_length(k, m) and p[-1] == n
				ok = ok and engine.within(p, k) and not engine.within(p, k - 1)
				if m is Model.TD:
					ok = ok and p[0] == 1
				else:
					ok = ok and p[0] != 1
				if not ok:
					violations += 1
		return violations == 0, f'{checked} generators, {violations} violations'

	def check_ptd_cardinality(self) -> Outcome:
		failures: List[str] = []
		expected = self.golden_section_or('ptd_generating_set_counts', {}, failures)
		counts = []
		for k in range(1, min(self.k, 3) + 1):
			size = len(self.genset(k, Model.PTD, 'constructive'))
			counts.append(size)
			if not (size == ptd_generating_set_size(k) == math.factorial(2 * k) // 2 ** k):
				failures.append(f'k={k} closed form')
			if str(k) in expected and size != expected[str(k)]:
				failures.append(f'k={k} golden')
		return not failures, f'counts {counts}, failures {failures}'

	def check_td_inflation(self) -> Outcome:
		failures = []
		for entry in self.golden_section('td_inflations'):
			p_i, p_tilde = td_inflate(Permutation.parse(entry['perm']), IndexMultiset.of(*entry['multiset']))
			if str(p_i) != entry['p_i'] or str(p_tilde) != entry['p_tilde']:
				failures.append(entry['perm'])
		checked = 0
		for k in range(0, min(self.k, 2)):
			for p in self.genset(k, Model.TD, 'constructive'):
				for q in td_inflations(p):
					checked += 1
					n = len(q)
					if not (is_plus_irreducible(q) and n == len(p) + 3 and q[0] == 1 and q[-1] == n):
						failures.append(f'{p} -> {q}')
		return not failures, f'{checked} inflations, failures {failures[:8]}'

	def check_ptd_parent(self) -> Outcome:
		failures = []
		for entry in self.golden_section('ptd_inflations'):
			parent = Permutation.parse(entry['perm'])
			case = PtdCase(PtdTag(entry['case']), entry['pos_a'], entry['pos_b'])
			result = ptd_inflate(parent, case)
			if str(result) != entry['result'] or ptd_parent(result) != (parent, case):
				failures.append(entry['result'])
		checked = 0
		for k in range(1, min(self.k, 3) + 1):
			previous = self.genset(k - 1, Model.PTD, 'constructive')
			recovered = set()
			for s in self.genset(k, Model.PTD, 'constructive'):
				checked += 1
				try:
					parent, case = ptd_parent(s)
				except ValueError as e:
					failures.append(f'{s}: {e}')
					continue
				recovered.add((parent, case))
				if parent not in previous or ptd_inflate(parent, case) != s or ptd_case_predicates(s) != {case.tag}:
					failures.append(str(s))
			if len(recovered) != ptd_generating_set_size(k):
				failures.append(f'k={k} recovered {len(recovered)} decompositions')
		return not failures, f'{checked} generators, failures {failures[:8]}'

	def check_mi_union_ball(self, m: Model) -> Outcome:
		engine = get_engine(m, self.limits)
		top = self.cap(7 if m is Model.TD else 6)
		failures = []
		for k in range(1, min(self.k, 2) + 1):
			members = MiUnion(self.genset(k, m, 'direct'))
			for n in range(top + 1):
				by_generators = PermSet(p for p in all_permutations(n, self.limits) if p in members)
				if by_generators != engine.ball(n, k):
					failures.append(f'k={k} n={n}: {_set_diff(engine.ball(n, k), by_generators)}')
		return not failures, f'lengths up to {top}, failures {failures}'

	def check_mi_plus_one(self) -> Outcome:
		failures = []
		top = self.cap(6)
		alpha = Permutation.parse('1324')
		computed = mi_plus_one(alpha, top, self.limits)
		brute = mi_plus_one_brute_force(alpha, top, self.limits)
		if computed != brute:
			failures.append(f'1324: {_set_diff(brute, computed)}')
		engine = get_engine(Model.TD, self.limits)
		for p in computed:
			if engine.distance(p) > 2:
				failures.append(f'{p} is too far')
				break
		small = self.cap(4)
		ball_one = PermSet(p for n in range(small + 1) for p in engine.ball(n, 1))
		if mi_plus_one(Permutation.identity(1), small, self.limits) != ball_one:
			failures.append('1')
		return not failures, f'lengths up to {top}, {len(computed)} permutations, failures {failures}'

	# ------------------------------------------------ basis

	def check_bases(self, m: Model) -> Outcome:
		failures: List[str] = []
		expected = self.golden_section_or('bases', {}, failures).get(m.value, {})
		for k in self.basis_ks(m):
			by_filter = self.basis_report(k, m, 'filter').elements
			by_descent = self.basis_report(k, m, 'poset-descent').elements
			if by_filter != by_descent:
				failures.append(f'k={k} filter vs descent: {_set_diff(by_filter, by_descent)}')
			if str(k) in expected and PermSet.parse(expected[str(k)]) != by_filter:
				failures.append(f'k={k} golden: {_set_diff(PermSet.parse(expected[str(k)]), by_filter)}')
		return not failures, f'k up to {max(self.basis_ks(m), default=0)}, failures {failures}'

	def check_basis_shape(self, m: Model) -> Outcome:
		failures = []
		for k in self.basis_ks(m):
			report = self.basis_report(k, m, 'filter')
			for p in report.elements:
				starts_with_one = m is Model.TD and p[0] == 1
				if not is_plus_irreducible(p) or starts_with_one or p[-1] == len(p) or len(p) > report.length_bound_used:
					failures.append(str(p))
			if comparable_pairs(report.elements):
				failures.append(f'k={k} not an antichain')
			if report.probe_result is None or not report.probe_result.empty:
				failures.append(f'k={k} elements at length {report.length_bound_used + 1}')
		return not failures, f'failures {failures}'

	def check_basis_avoidance(self, m: Model) -> Outcome:
		engine = get_engine(m, self.limits)
		top = self.cap(6)
		checked = violations = 0
		for k in self.basis_ks(m):
			elements = self.basis_report(k, m, 'filter').elements
			for n in range(top + 1):
				inside = engine.ball(n, k)
				for p in all_permutations(n, self.limits):
					checked += 1
					if (p in inside) != avoids_all(p, elements):
						violations += 1
		return violations == 0, f'{checked} permutations, {violations} violations'


class _Check(NamedTuple):
	name: str
	run: Callable[[], Outcome]
	diagnostic: bool = False


def _build_checks(suite: _Suite) -> List[_Check]:
	checks = [
		_Check('golden-core-examples', suite.check_golden_core),
		_Check('plus-irreducible-counts', suite.check_plus_irreducible_counts),
		_Check('reduction-properties', suite.check_reduction_properties),
		_Check('mi-membership', suite.check_mi_membership),
		_Check('mi-reduction-invariance', suite.check_mi_reduction_invariance),
		_Check('pattern-order', suite.check_pattern_order),
		_Check('transposition-inverse', suite.check_transposition_inverse),
	]
	if len(suite.models) == len(Model):
		checks.append(_Check('model-refinement', suite.check_model_refinement))
	for m in suite.models:
		checks.extend([
			_Check(f'golden-distances[{m}]', lambda m=m: suite.check_golden_distances(m)),
			_Check(f'reduction-invariance[{m}]', lambda m=m: suite.check_reduction_invariance(m), diagnostic=m is Model.PTD),
			_Check(f'ball-nesting-closure[{m}]', lambda m=m: suite.check_ball_nesting(m)),
			_Check(f'left-invariance[{m}]', lambda m=m: suite.check_left_invariance(m)),
			_Check(f'generating-sets[{m}]', lambda m=m: suite.check_generating_sets(m)),
			_Check(f'generator-shape[{m}]', lambda m=m: suite.check_generator_shape(m)),
			_Check(f'mi-union-ball[{m}]', lambda m=m: suite.check_mi_union_ball(m)),
			_Check(f'bases[{m}]', lambda m=m: suite.check_bases(m)),
			_Check(f'basis-shape[{m}]', lambda m=m: suite.check_basis_shape(m)),
			_Check(f'basis-avoidance[{m}]', lambda m=m: suite.check_basis_avoidance(m)),
		])
		if m is Model.TD:
			checks.extend([
				_Check('breakpoint-bound', suite.check_breakpoint_bound),
				_Check('td-inflation', suite.check_td_inflation),
				_Check('mi-plus-one', suite.check_mi_plus_one),
			])
		else:
			checks.extend([
				_Check('ptd-cardinality', suite.check_ptd_cardinality),
				_Check('ptd-parent', suite.check_ptd_parent),
			])
	return checks


def run_suite(
		model: Union[Model, str, None] = None,
		k: int = DEFAULT_K,
		max_n: int = DEFAULT_MAX_N,
		golden_path: Union[str, Path, None] = None,
		limits: Optional[config.Limits] = None,
) -> VerifyReport:
	"""
	Run every property check for the given model (both when None), radii up to k,
	exhaustive sweeps up to length max_n
	"""
	if k < 1:
		raise ValueError(f'k {k} is out of range [1, +inf)')
	if max_n < 1:
		raise ValueError(f'max_n {max_n} is out of range [1, +inf)')
	limits = config.resolve(limits)
	limits.check_len(max_n, 'max_n')
	models = tuple(Model) if model is None else (Model.parse(model),)
	suite = _Suite(models, k, max_n, load_golden(golden_path), limits)

	results: List[CheckResult] = []
	for check in _build_checks(suite):
		try:
			ok, detail = check.run()
		except (BudgetExceededError, _Skip) as e:
			status, detail = CheckStatus.SKIPPED, str(e)
		except (AttributeError, KeyError, TypeError, ValueError) as e:
			# a missing or malformed golden section or a broken invariant inside the library
			status, detail = CheckStatus.FAIL, f'{type(e).__name__}: {e}'
		else:
			if ok:
				status = CheckStatus.PASS
			else:
				status = CheckStatus.DIAGNOSTIC if check.diagnostic else CheckStatus.FAIL
		logger.info('%s %s: %s', status, check.name, detail)
		results.append(CheckResult(check.name, status, detail))
	return VerifyReport(models, k, max_n, tuple(results))
