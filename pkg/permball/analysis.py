import enum
import logging
import math
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from typing_extensions import Literal

from permball import config, kernel
from permball.common import Model
from permball.models import ModelLike, TranspositionIndices, apply_transposition, get_engine, neighbors
from permball.permutation import (
	IndexMultiset, Permutation, PermSet, contains_pattern, enumerate_plus_irreducible, inflations,
	is_plus_irreducible, mi_member, monotone_inflate, reduce,
)

logger = logging.getLogger(__name__)

GeneratingMethod = Literal['direct', 'constructive']
GENERATING_METHODS: Tuple[GeneratingMethod, ...] = ('direct', 'constructive')


class PtdTag(str, enum.Enum):
	CASE1 = 'case1'  # a before b, a < b
	CASE2 = 'case2'  # a before b, a > b
	CASE3 = 'case3'  # single a


class PtdCase(NamedTuple):
	"""
	A decomposition of a parent permutation for one prefix transposition inflation.
	Positions are 1-based positions in the parent, pos_b is None for CASE3
	"""
	tag: PtdTag
	pos_a: int
	pos_b: Optional[int] = None

	def validate(self, p: Permutation):
		n = len(p)
		if self.tag is PtdTag.CASE3:
			if self.pos_b is not None:
				raise ValueError(f'{self.tag} takes a single position, got {self.pos_b} as second one')
			if not (1 <= self.pos_a <= n):
				raise ValueError(f'position {self.pos_a} is out of range [1, {n}]')
			return
		if self.pos_b is None or not (1 <= self.pos_a < self.pos_b <= n):
			raise ValueError(f'positions ({self.pos_a}, {self.pos_b}) are invalid for {self.tag} on length {n}')
		a, b = p[self.pos_a - 1], p[self.pos_b - 1]
		if self.tag is PtdTag.CASE1 and not a < b:
			raise ValueError(f'{self.tag} needs a < b, got a={a} b={b}')
		if self.tag is PtdTag.CASE2 and not a > b:
			raise ValueError(f'{self.tag} needs a > b, got a={a} b={b}')

	def values_in(self, p: Permutation) -> Tuple[int, Optional[int]]:
		return p[self.pos_a - 1], (p[self.pos_b - 1] if self.pos_b is not None else None)


class GeneratingSetReport(NamedTuple):
	k: int
	model: Model
	method: GeneratingMethod
	elements: PermSet
	element_length: int

	@property
	def count(self) -> int:
		return len(self.elements)


def generator_length(k: int, m: ModelLike) -> int:
	return 2 * k + 1 if Model.parse(m).prefix_only else 3 * k + 1


def _check_k(k: int):
	if k < 1:
		raise ValueError(f'k {k} is out of range [1, +inf)')


def _require_plus_irreducible(p: Permutation):
	if not is_plus_irreducible(p):
		raise ValueError(f'{p} is not plus irreducible')


# ================================ block transposition ================================


def td_inflate(p: Permutation, index_multiset: IndexMultiset) -> Tuple[Permutation, Permutation]:
	"""
	Inflate the positions of ``index_multiset`` into strips of length multiplicity + 1,
	then exchange the blocks starting at i + 1, j + 2 and ending before k + 3.

	:return: (p_I, p_tilde), p_tilde is plus irreducible of length len(p) + 3
	"""
	_require_plus_irreducible(p)
	index_multiset = IndexMultiset.of(*index_multiset)
	index_multiset.validate(len(p))

	v = [1] * len(p)
	for index, multiplicity in index_multiset.multiplicities().items():
		v[index - 1] = multiplicity + 1
	p_i = monotone_inflate(p, v)
	i, j, k = index_multiset
	p_tilde = apply_transposition(p_i, TranspositionIndices(i + 1, j + 2, k + 3))
	return p_i, p_tilde


def td_inflations(p: Permutation) -> List[Permutation]:
	"""
	p_tilde for every index multiset of p, in index order, duplicates kept
	"""
	return [td_inflate(p, index_multiset)[1] for index_multiset in IndexMultiset.all_of(len(p))]


# ================================ prefix transposition ================================


def ptd_decompositions(p: Permutation) -> Iterator[PtdCase]:
	n = len(p)
	for pos_a in range(1, n + 1):
		for pos_b in range(pos_a + 1, n + 1):
			tag = PtdTag.CASE1 if p[pos_a - 1] < p[pos_b - 1] else PtdTag.CASE2
			yield PtdCase(tag, pos_a, pos_b)
	for pos_a in range(1, n + 1):
		yield PtdCase(PtdTag.CASE3, pos_a)


def ptd_inflate(p: Permutation, case: PtdCase) -> Permutation:
	_require_plus_irreducible(p)
	case.validate(p)
	values = p.values
	a, b = case.values_in(p)

	if case.tag is PtdTag.CASE3:
		pi, rho = values[:case.pos_a - 1], values[case.pos_a:]
		pi_hat = [x + 2 if x > a else x for x in pi]
		rho_hat = [x + 2 if x > a else x for x in rho]
		return Permutation._trusted((a + 1, *pi_hat, a, a + 2, *rho_hat))

	pi = values[:case.pos_a - 1]
	rho = values[case.pos_a:case.pos_b - 1]
	gamma = values[case.pos_b:]
	lo, hi = min(a, b), max(a, b)

	def hat(x: int) -> int:
		if x > hi:
			return x + 2
		if x > lo:
			return x + 1
		return x

	if case.tag is PtdTag.CASE1:
		seq = [a + 1, *map(hat, rho), b + 1, *map(hat, pi), a, b + 2, *map(hat, gamma)]
	else:
		seq = [a + 2, *map(hat, rho), b, *map(hat, pi), a + 1, b + 1, *map(hat, gamma)]
	return Permutation._trusted(tuple(seq))


def _right_of_predecessor(s: Permutation) -> Optional[Tuple[int, int, int]]:
	"""
	(sigma_1, position of sigma_1 - 1, its right neighbour), all 0-based positions, or None if undefined
	"""
	values = s.values
	if len(values) == 0 or values[0] == 1:
		return None
	first = values[0]
	q = values.index(first - 1)
	if q + 1 >= len(values):
		return None
	return first, q, values[q + 1]


def ptd_case_predicates(s: Permutation) -> FrozenSet[PtdTag]:
	found = _right_of_predecessor(s)
	if found is None:
		return frozenset()
	first, _, right = found
	tags = set()
	if right >= first + 2:
		tags.add(PtdTag.CASE1)
	if right <= first - 2:
		tags.add(PtdTag.CASE2)
	if right == first + 1:
		tags.add(PtdTag.CASE3)
	return frozenset(tags)


def ptd_parent(s: Permutation) -> Tuple[Permutation, PtdCase]:
	"""
	Recover the unique (parent, case) with ptd_inflate(parent, case) == s,
	driven by the right neighbour of the value s[0] - 1
	"""
	if len(s) == 0 or s[0] == 1:
		raise ValueError(f'{s} starts with 1 and has no parent')
	_require_plus_irreducible(s)
	found = _right_of_predecessor(s)
	if found is None:
		raise ValueError(f'{s} ends with {s[0] - 1} and has no parent')
	first, q, right = found
	values = s.values

	if right == first + 1:
		parent = Permutation.standardize(values[1:q] + (first - 1,) + values[q + 2:])
		case = PtdCase(PtdTag.CASE3, q)
	else:
		if right >= first + 2:
			tag, b_value = PtdTag.CASE1, right - 1
		elif right <= first - 2:
			tag, b_value = PtdTag.CASE2, right - 1
		else:
			raise ValueError(f'no case matches {s}')
		pos_b = values.index(b_value)
		if not 0 < pos_b < q:
			raise ValueError(f'no case matches {s}')
		pi, rho, gamma = values[pos_b + 1:q], values[1:pos_b], values[q + 2:]
		parent = Permutation.standardize(pi + (first - 1,) + rho + (b_value,) + gamma)
		case = PtdCase(tag, len(pi) + 1, len(pi) + len(rho) + 2)

	if ptd_inflate(parent, case) != s:
		raise ValueError(f'no case matches {s}')
	return parent, case


def ptd_generating_set_size(k: int) -> int:
	"""
	(2k)! / 2^k, each round multiplies by the number of decompositions C(2i, 2) of a length 2i - 1 parent
	"""
	if k < 0:
		raise ValueError(f'k {k} is out of range [0, +inf)')
	return math.prod(math.comb(2 * i, 2) for i in range(1, k + 1))


# ================================ generating sets ================================


def generating_set_constructive(k: int, m: ModelLike, limits: Optional[config.Limits] = None) -> GeneratingSetReport:
	_check_k(k)
	model = Model.parse(m)
	length = generator_length(k, model)
	config.resolve(limits).check_len(length, 'generator length')

	current = PermSet([Permutation.identity(1)])
	for round_no in range(1, k + 1):
		produced = 0
		fresh: List[Permutation] = []
		for p in current:
			if model is Model.TD:
				outputs = td_inflations(p)
			else:
				outputs = [ptd_inflate(p, case) for case in ptd_decompositions(p)]
			produced += len(outputs)
			fresh.extend(outputs)
		current = PermSet(fresh)
		logger.debug('%s constructive round %d: %d inflations, %d distinct', model, round_no, produced, len(current))
	return GeneratingSetReport(k, model, 'constructive', current, length)


def generating_set_direct(k: int, m: ModelLike, limits: Optional[config.Limits] = None) -> GeneratingSetReport:
	_check_k(k)
	model = Model.parse(m)
	limits = config.resolve(limits)
	length = generator_length(k, model)
	limits.check_len(length, 'generator length')

	engine = get_engine(model, limits)
	inside = engine.ball_words(length, k)
	closer = engine.ball_words(length, k - 1)
	elements = []
	for p in enumerate_plus_irreducible(length, limits):
		word = kernel.pack(p.values)
		if word in inside and word not in closer:
			elements.append(p)
	logger.debug('%s direct generating set k=%d: %d of %d ball members', model, k, len(elements), len(inside))
	return GeneratingSetReport(k, model, 'direct', PermSet(elements), length)


def generating_set(k: int, m: ModelLike, method: GeneratingMethod = 'direct', limits: Optional[config.Limits] = None) -> GeneratingSetReport:
	if method == 'direct':
		return generating_set_direct(k, m, limits)
	if method == 'constructive':
		return generating_set_constructive(k, m, limits)
	raise ValueError(f'unknown method {method!r}, expected one of {list(GENERATING_METHODS)}')


# ================================ monotone inflation classes ================================


Generators = Union[GeneratingSetReport, Iterable[Permutation]]


def _generators_of(g: Generators) -> Iterable[Permutation]:
	return g.elements if isinstance(g, GeneratingSetReport) else g


def mi_union_member(p: Permutation, g: Generators) -> bool:
	return any(mi_member(p, alpha) for alpha in _generators_of(g))


class MiUnion:
	"""
	Membership in the union of MI(alpha) over a set of generators, memoized on red(p)
	"""

	def __init__(self, generators: Generators):
		self.generators = PermSet(_generators_of(generators))
		for alpha in self.generators:
			_require_plus_irreducible(alpha)
		self.__cache: Dict[Permutation, bool] = {}

	def __contains__(self, p: Permutation) -> bool:
		red = reduce(p)
		hit = self.__cache.get(red)
		if hit is None:
			hit = any(contains_pattern(alpha, red) for alpha in self.generators)
			self.__cache[red] = hit
		return hit


def one_transposition_image(perms: Iterable[Permutation], m: ModelLike = Model.TD) -> PermSet:
	"""
	The permutations reachable from ``perms`` with at most one move
	"""
	result = set()
	for p in perms:
		result.add(p)
		result.update(neighbors(p, m))
	return PermSet(result)


def mi_plus_one(alpha: Permutation, n_max: int, limits: Optional[config.Limits] = None) -> PermSet:
	"""
	Members of length at most n_max of the union of MI(alpha_tilde_I) over every index multiset I of alpha,
	which are the permutations at most one block transposition away from MI(alpha)
	"""
	_require_plus_irreducible(alpha)
	if len(alpha) == 0:
		raise ValueError('alpha must not be empty')
	config.resolve(limits).check_len(n_max)
	result = set()
	for alpha_tilde in set(td_inflations(alpha)):
		result.update(inflations(alpha_tilde, n_max, limits))
	return PermSet(result)


def mi_plus_one_brute_force(alpha: Permutation, n_max: int, limits: Optional[config.Limits] = None) -> PermSet:
	_require_plus_irreducible(alpha)
	return one_transposition_image(inflations(alpha, n_max, limits), Model.TD)
