import pytest

from permball import config
from permball.analysis import (
	GeneratingSetReport, MiUnion, PtdCase, PtdTag, generating_set, generating_set_constructive, mi_plus_one, mi_plus_one_brute_force,
	mi_union_member, one_transposition_image, ptd_case_predicates, ptd_decompositions, ptd_generating_set_size, ptd_inflate, ptd_parent,
	td_inflate, td_inflations,
)
from permball.common import Model
from permball.models import DistanceEngine
from permball.permutation import IndexMultiset, Permutation, PermSet, all_permutations, is_plus_irreducible
from tests.utils import TD_GENERATORS_K2, perms


@pytest.fixture(scope='module')
def limits() -> config.Limits:
	return config.Limits(10)


class TestTdInflate:
	@pytest.mark.parametrize('p, multiset, p_i, p_tilde', [
		('1324', (2, 2, 4), '1345267', '1352647'),
		('1', (1, 1, 1), '1234', '1324'),
	])
	def test_examples(self, p: str, multiset, p_i: str, p_tilde: str):
		assert td_inflate(Permutation.parse(p), IndexMultiset.of(*multiset)) == (Permutation.parse(p_i), Permutation.parse(p_tilde))

	def test_shape(self):
		for q in td_inflations(Permutation.parse('1324')):
			assert is_plus_irreducible(q)
			assert len(q) == 7
			assert q[0] == 1 and q[-1] == 7

	def test_duplicates_kept(self):
		produced = td_inflations(Permutation.parse('1324'))
		assert len(produced) == 20
		assert PermSet(produced) == perms(TD_GENERATORS_K2)


class TestPtdInflate:
	@pytest.mark.parametrize('case, expected', [
		(PtdCase(PtdTag.CASE3, 1), '32415'),
		(PtdCase(PtdTag.CASE1, 1, 3), '31425'),
		(PtdCase(PtdTag.CASE2, 1, 2), '41325'),
	])
	def test_examples(self, case: PtdCase, expected: str):
		assert ptd_inflate(Permutation.parse('213'), case) == Permutation.parse(expected)

	def test_base(self):
		assert ptd_inflate(Permutation.parse('1'), PtdCase(PtdTag.CASE3, 1)) == Permutation.parse('213')

	def test_decompositions(self):
		cases = list(ptd_decompositions(Permutation.parse('213')))
		assert len(cases) == 6
		assert sum(1 for c in cases if c.tag is PtdTag.CASE3) == 3
		assert PtdCase(PtdTag.CASE2, 1, 2) in cases

	@pytest.mark.parametrize('text, parent, case', [
		('32415', '213', PtdCase(PtdTag.CASE3, 1)),
		('31425', '213', PtdCase(PtdTag.CASE1, 1, 3)),
		('41325', '213', PtdCase(PtdTag.CASE2, 1, 2)),
		('213', '1', PtdCase(PtdTag.CASE3, 1)),
	])
	def test_parent(self, text: str, parent: str, case: PtdCase):
		assert ptd_parent(Permutation.parse(text)) == (Permutation.parse(parent), case)

	def test_parent_of_non_generator(self):
		with pytest.raises(ValueError):
			ptd_parent(Permutation.parse('21'))

	def test_case_predicates(self):
		assert ptd_case_predicates(Permutation.parse('32415')) == {PtdTag.CASE3}
		assert ptd_case_predicates(Permutation.parse('31425')) == {PtdTag.CASE1}
		assert ptd_case_predicates(Permutation.parse('41325')) == {PtdTag.CASE2}
		assert ptd_case_predicates(Permutation.parse('1324')) == frozenset()

	@pytest.mark.parametrize('k, expected', [(0, 1), (1, 1), (2, 6), (3, 90), (4, 2520)])
	def test_generating_set_size(self, k: int, expected: int):
		assert ptd_generating_set_size(k) == expected


class TestGeneratingSets:
	def test_report(self, limits: config.Limits):
		report = generating_set(1, 'td', 'constructive', limits)
		assert isinstance(report, GeneratingSetReport)
		assert report.model is Model.TD
		assert report.method == 'constructive'
		assert report.element_length == 4
		assert report.count == 1

	@pytest.mark.parametrize('model, k', [(Model.TD, 1), (Model.TD, 2), (Model.PTD, 1), (Model.PTD, 2), (Model.PTD, 3)])
	def test_generator_shape(self, limits: config.Limits, model: Model, k: int):
		engine = DistanceEngine(model, limits)
		for p in generating_set_constructive(k, model, limits).elements:
			assert is_plus_irreducible(p)
			assert p[-1] == len(p)
			assert engine.distance(p) == k
			if model is Model.TD:
				assert p[0] == 1
			else:
				assert p[0] != 1

	def test_td_k3_constructive(self, limits: config.Limits):
		report = generating_set_constructive(3, Model.TD, limits)
		assert report.element_length == 10
		assert all(len(p) == 10 and is_plus_irreducible(p) for p in report.elements)


class TestMiUnion:
	def test_members(self, limits: config.Limits):
		g1 = generating_set(1, Model.TD, 'direct', limits)
		engine = DistanceEngine(Model.TD, limits)
		for p in engine.ball(6, 1):
			assert mi_union_member(p, g1)
		assert mi_union_member(Permutation.identity(5), g1)
		assert not mi_union_member(Permutation.parse('321'), g1)

	def test_cached_union_agrees(self, limits: config.Limits):
		g2 = generating_set(2, Model.PTD, 'constructive', limits)
		members = MiUnion(g2)
		for n in range(0, 6):
			for p in all_permutations(n):
				assert (p in members) == mi_union_member(p, g2)

	def test_rejects_reducible_generators(self):
		with pytest.raises(ValueError, match='plus irreducible'):
			MiUnion([Permutation.parse('12')])


class TestMiPlusOne:
	def test_1324(self, limits: config.Limits):
		alpha = Permutation.parse('1324')
		computed = mi_plus_one(alpha, 6, limits)
		assert computed == mi_plus_one_brute_force(alpha, 6, limits)
		engine = DistanceEngine(Model.TD, limits)
		assert all(engine.distance(p) <= 2 for p in computed)

	def test_identity(self, limits: config.Limits):
		engine = DistanceEngine(Model.TD, limits)
		expected = {p for n in range(0, 5) for p in all_permutations(n) if engine.distance(p) <= 1}
		assert mi_plus_one(Permutation.identity(1), 4, limits) == expected

	def test_image(self):
		assert one_transposition_image([Permutation.parse('21')], Model.PTD) == perms(['12', '21'])
