import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Set

from typing_extensions import Literal

from permball import config, kernel
from permball.analysis import MiUnion, generating_set_constructive, generator_length
from permball.common import Model
from permball.errors import BudgetExceededError
from permball.models import ModelLike, get_engine
from permball.permutation import (
	Permutation, PermSet, all_permutations, contains_pattern, enumerate_plus_irreducible, one_point_deletions,
)

logger = logging.getLogger(__name__)

BasisMethod = Literal['filter', 'poset-descent']


class ProbeResult(NamedTuple):
	length: int
	elements: PermSet

	@property
	def empty(self) -> bool:
		return len(self.elements) == 0


class BasisReport(NamedTuple):
	k: int
	model: Model
	method: BasisMethod
	elements: PermSet
	length_bound_used: int
	probe_result: Optional[ProbeResult] = None

	@property
	def count(self) -> int:
		return len(self.elements)


def basis_length_bound(k: int, m: ModelLike) -> int:
	return generator_length(k, m)


def _prepare(k: int, m: ModelLike, limits: config.Limits, extra: int) -> Model:
	if k < 1:
		raise ValueError(f'k {k} is out of range [1, +inf)')
	model = Model.parse(m)
	if model is Model.TD and k > limits.max_td_basis_k:
		raise BudgetExceededError(f'td basis for k {k} is out of range [1, {limits.max_td_basis_k}], exhaustive search up to length {3 * k + 1} is refused')
	limits.check_len(basis_length_bound(k, model) + extra, 'basis search length')
	return model


def _minimal_excluded(n: int, k: int, model: Model, limits: config.Limits) -> List[Permutation]:
	engine = get_engine(model, limits)
	inside = engine.ball_words(n, k)
	below = engine.ball_words(n - 1, k)
	found = []
	for p in all_permutations(n, limits):
		if kernel.pack(p.values) in inside:
			continue
		if all(kernel.pack(q.values) in below for q in one_point_deletions(p)):
			found.append(p)
	logger.debug('%s basis k=%d: %d elements of length %d', model, k, len(found), n)
	return found


def basis(k: int, m: ModelLike, probe_extra: bool = False, limits: Optional[config.Limits] = None) -> BasisReport:
	"""
	Minimal permutations outside B_k, by filtering every S_n up to the length bound.

	Minimality only looks at one-point deletions, which is enough since B_k is closed under deletion
	"""
	limits = config.resolve(limits)
	model = _prepare(k, m, limits, 1 if probe_extra else 0)
	bound = basis_length_bound(k, model)

	elements: List[Permutation] = []
	for n in range(2, bound + 1):
		elements.extend(_minimal_excluded(n, k, model, limits))

	probe = None
	if probe_extra:
		probe = ProbeResult(bound + 1, PermSet(_minimal_excluded(bound + 1, k, model, limits)))
		if not probe.empty:
			logger.warning('%s basis k=%d has %d elements of length %d, above the proven bound', model, k, len(probe.elements), bound + 1)
	return BasisReport(k, model, 'filter', PermSet(elements), bound, probe)


def basis_via_poset_descent(k: int, m: ModelLike, limits: Optional[config.Limits] = None) -> BasisReport:
	"""
	Start from the plus irreducible permutations of the generator length that are not generating,
	and descend through one-point deletions that stay outside B_k.
	A visited permutation belongs to the basis when all of its deletions are inside.

	Membership comes from the constructive generating set, independent of the distance engine
	"""
	limits = config.resolve(limits)
	model = _prepare(k, m, limits, 0)
	bound = basis_length_bound(k, model)
	members = MiUnion(generating_set_constructive(k, model, limits))

	pending = [p for p in enumerate_plus_irreducible(bound, limits) if p not in members]
	visited: Set[Permutation] = set(pending)
	elements: List[Permutation] = []
	while pending:
		p = pending.pop()
		outside = [q for q in one_point_deletions(p) if q not in members]
		if not outside:
			elements.append(p)
		for q in outside:
			if q not in visited:
				visited.add(q)
				pending.append(q)
	logger.debug('%s poset descent k=%d visited %d permutations', model, k, len(visited))
	return BasisReport(k, model, 'poset-descent', PermSet(elements), bound)


def avoids_all(p: Permutation, patterns: Iterable[Permutation]) -> bool:
	return p.to_perm().avoids(*(patt.to_perm() for patt in patterns))


def verify_class_closure(k: int, m: ModelLike, n_max: int, limits: Optional[config.Limits] = None) -> bool:
	"""
	Whether every one-point deletion of every member of B_k of length at most n_max stays in B_k
	"""
	if k < 0:
		raise ValueError(f'k {k} is out of range [0, +inf)')
	limits = config.resolve(limits)
	limits.check_len(n_max)
	engine = get_engine(m, limits)
	for n in range(2, n_max + 1):
		inside = engine.ball_words(n, k)
		below = engine.ball_words(n - 1, k)
		for word in inside:
			p = Permutation._trusted(kernel.unpack(word, n))
			for q in one_point_deletions(p):
				if kernel.pack(q.values) not in below:
					logger.debug('%s closure broken for k=%d: %s -> %s', engine.model, k, p, q)
					return False
	return True


def comparable_pairs(elements: PermSet) -> Dict[Permutation, Permutation]:
	"""
	Pairs (longer, shorter) of elements where one contains the other, empty for an antichain
	"""
	found: Dict[Permutation, Permutation] = {}
	for p in elements:
		for q in elements:
			if p != q and len(q) <= len(p) and contains_pattern(p, q):
				found[p] = q
	return found
