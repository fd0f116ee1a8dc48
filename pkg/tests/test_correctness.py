import itertools
import math
import random
from types import ModuleType
from typing import Dict, Set

import pytest

from permball import config
from permball.analysis import (
	MiUnion, generating_set_constructive, generating_set_direct, mi_plus_one, mi_plus_one_brute_force, ptd_case_predicates,
	ptd_inflate, ptd_parent,
)
from permball.basis import basis, basis_via_poset_descent
from permball.common import Model
from permball.models import DistanceEngine, TranspositionIndices, apply_transposition
from permball.permutation import (
	Permutation, all_permutations, breakpoint_count, enumerate_plus_irreducible, plus_irreducible_count, reduce,
)
from tests.utils import PTD_BASIS_K2, PTD_GENERATORS_K2, TD_GENERATORS_K2, perms


class TestKernel:
	@pytest.mark.parametrize('n', list(range(0, 17)))
	def test_pack_unpack(self, kernel_impl: ModuleType, n: int):
		rnd = random.Random(n)
		values = tuple(rnd.sample(range(1, n + 1), n))
		word = kernel_impl.pack(values)
		assert kernel_impl.unpack(word, n) == values
		assert kernel_impl.identity_word(n) == kernel_impl.pack(tuple(range(1, n + 1)))

	def test_pack_too_long(self, kernel_impl: ModuleType):
		with pytest.raises(ValueError, match='out of range'):
			kernel_impl.pack(tuple(range(1, 18)))

	@pytest.mark.parametrize('n', [2, 3, 5, 8, 16])
	def test_swap_blocks(self, kernel_impl: ModuleType, n: int):
		rnd = random.Random(n)
		p = Permutation(rnd.sample(range(1, n + 1), n))
		word = kernel_impl.pack(p.values)
		for i, j, k in itertools.combinations(range(n + 1), 3):
			expected = apply_transposition(p, TranspositionIndices(i + 1, j + 1, k + 1))
			assert kernel_impl.unpack(kernel_impl.swap_blocks(word, i, j, k), n) == expected.values

	@pytest.mark.parametrize('model', list(Model))
	@pytest.mark.parametrize('n', [0, 1, 2, 4, 6])
	def test_neighbor_words_order(self, kernel_impl: ModuleType, model: Model, n: int):
		p = Permutation(random.Random(n).sample(range(1, n + 1), n))
		words = kernel_impl.neighbor_words(kernel_impl.pack(p.values), n, model.prefix_only)
		expected = [apply_transposition(p, t).values for t in TranspositionIndices.all_of(n, model)]
		assert [kernel_impl.unpack(w, n) for w in words] == expected

	@pytest.mark.parametrize('model', list(Model))
	def test_expand_frontier(self, kernel_impl: ModuleType, model: Model):
		n = 5
		start = kernel_impl.identity_word(n)
		seen: Set[int] = {start}
		fresh = kernel_impl.expand_frontier({start}, n, model.prefix_only, seen)
		assert fresh == set(kernel_impl.neighbor_words(start, n, model.prefix_only)) - {start}
		assert seen == fresh | {start}
		assert kernel_impl.expand_frontier(fresh, n, model.prefix_only, set(seen)).isdisjoint(seen)


class TestPyCyConsistency:
	@pytest.mark.parametrize('model', list(Model))
	@pytest.mark.parametrize('n', [3, 6, 9])
	def test_levels(self, model: Model, n: int):
		cy = pytest.importorskip('permball.cy.kernel', reason='cython kernel is not built')
		from permball.py import kernel as py

		fronts = {'cy': {cy.identity_word(n)}, 'py': {py.identity_word(n)}}
		seens = {name: set(front) for name, front in fronts.items()}
		for _ in range(3):
			fronts['cy'] = cy.expand_frontier(fronts['cy'], n, model.prefix_only, seens['cy'])
			fronts['py'] = py.expand_frontier(fronts['py'], n, model.prefix_only, seens['py'])
			assert fronts['cy'] == fronts['py']
		assert seens['cy'] == seens['py']


class TestPublishedValues:
	"""
	Exact sets and counts from the published results on balls of the two models
	"""

	@pytest.fixture(scope='class')
	def limits(self) -> config.Limits:
		return config.Limits(10)

	def test_td_generating_sets(self, limits: config.Limits):
		for method in [generating_set_direct, generating_set_constructive]:
			assert method(1, Model.TD, limits).elements == perms(['1324'])
			report = method(2, Model.TD, limits)
			assert report.elements == perms(TD_GENERATORS_K2)
			assert report.element_length == 7

	def test_ptd_generating_sets(self, limits: config.Limits):
		for method in [generating_set_direct, generating_set_constructive]:
			assert method(1, Model.PTD, limits).elements == perms(['213'])
			assert method(2, Model.PTD, limits).elements == perms(PTD_GENERATORS_K2)

	@pytest.mark.parametrize('k, count', [(1, 1), (2, 6), (3, 90)])
	def test_ptd_cardinality(self, limits: config.Limits, k: int, count: int):
		constructive = generating_set_constructive(k, Model.PTD, limits)
		assert constructive.count == count == math.factorial(2 * k) // 2 ** k
		assert generating_set_direct(k, Model.PTD, limits).elements == constructive.elements

	def test_td_basis(self, limits: config.Limits):
		expected = perms(['321', '2143', '2413', '3142'])
		report = basis(1, Model.TD, probe_extra=True, limits=limits)
		assert report.elements == expected
		assert report.length_bound_used == 4
		assert report.probe_result is not None and report.probe_result.length == 5 and report.probe_result.empty
		assert basis_via_poset_descent(1, Model.TD, limits).elements == expected

	def test_ptd_bases(self, limits: config.Limits):
		for method in [lambda k: basis(k, Model.PTD, limits=limits), lambda k: basis_via_poset_descent(k, Model.PTD, limits)]:
			assert method(1).elements == perms(['132', '321'])
			assert method(2).elements == perms(PTD_BASIS_K2)

	@pytest.mark.parametrize('k', [1, 2])
	def test_ptd_basis_extra_length(self, limits: config.Limits, k: int):
		report = basis(k, Model.PTD, probe_extra=True, limits=limits)
		assert report.probe_result is not None
		assert report.probe_result.length == 2 * k + 2
		assert report.probe_result.empty

	def test_td_basis_k2_methods_agree(self, limits: config.Limits):
		by_filter = basis(2, Model.TD, limits=limits)
		assert by_filter.elements == basis_via_poset_descent(2, Model.TD, limits).elements
		assert len(by_filter.elements) > 0
		assert all(len(p) <= 7 for p in by_filter.elements)

	def test_plus_irreducible_counts(self, limits: config.Limits):
		expected = [1, 1, 3, 11, 53, 309, 2119, 16687]
		assert [plus_irreducible_count(n - 1) for n in range(1, 9)] == expected
		assert [len(enumerate_plus_irreducible(n, limits)) for n in range(1, 8)] == expected[:7]


class TestExhaustiveSweeps:
	@pytest.fixture(scope='class')
	def td_tables(self) -> Dict[int, Dict[Permutation, int]]:
		engine = DistanceEngine(Model.TD, config.Limits(10))
		return {n: engine.distance_table(n) for n in range(0, 8)}

	def test_breakpoint_bound(self, td_tables: Dict[int, Dict[Permutation, int]]):
		for n in range(1, 8):
			for p, dist in td_tables[n].items():
				assert dist >= math.ceil(breakpoint_count(p) / 3), p

	def test_reduction_invariance(self, td_tables: Dict[int, Dict[Permutation, int]]):
		for n in range(1, 8):
			for p, dist in td_tables[n].items():
				red = reduce(p)
				assert td_tables[len(red)][red] == dist, p

	@pytest.mark.parametrize('k', [1, 2])
	def test_td_ball_characterization(self, k: int):
		limits = config.Limits(10)
		engine = DistanceEngine(Model.TD, limits)
		members = MiUnion(generating_set_direct(k, Model.TD, limits))
		for n in range(0, 8):
			assert {p for p in all_permutations(n, limits) if p in members} == set(engine.ball(n, k))

	@pytest.mark.parametrize('k', [1, 2])
	def test_ptd_ball_characterization(self, k: int):
		limits = config.Limits(10)
		engine = DistanceEngine(Model.PTD, limits)
		members = MiUnion(generating_set_constructive(k, Model.PTD, limits))
		for n in range(0, 7):
			assert {p for p in all_permutations(n, limits) if p in members} == set(engine.ball(n, k))

	def test_mi_plus_one(self):
		limits = config.Limits(10)
		alpha = Permutation.parse('1324')
		assert mi_plus_one(alpha, 6, limits) == mi_plus_one_brute_force(alpha, 6, limits)

	@pytest.mark.parametrize('k', [2, 3])
	def test_ptd_parent_uniqueness(self, k: int):
		limits = config.Limits(10)
		parents = generating_set_constructive(k - 1, Model.PTD, limits).elements
		generators = generating_set_constructive(k, Model.PTD, limits).elements
		recovered = set()
		for s in generators:
			parent, case = ptd_parent(s)
			assert parent in parents
			assert ptd_inflate(parent, case) == s
			assert ptd_case_predicates(s) == {case.tag}
			recovered.add((parent, case))
		assert len(recovered) == len(generators)
