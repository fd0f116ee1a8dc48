import pytest

from permball import config
from permball.analysis import PtdCase, PtdTag, generating_set, ptd_inflate, ptd_parent, td_inflate
from permball.basis import basis, basis_via_poset_descent, verify_class_closure
from permball.common import Model
from permball.errors import BudgetExceededError, PermutationFormatError
from permball.models import DistanceEngine, TranspositionIndices, apply_transposition
from permball.permutation import (
	IndexMultiset, Permutation, breakpoint_count, enumerate_plus_irreducible, mi_member, monotone_inflate, one_point_deletions,
)


class TestLimits:
	def test_defaults(self, monkeypatch):
		monkeypatch.delenv(config.MAX_LEN_ENV, raising=False)
		limits = config.Limits.from_env()
		assert limits.max_len == 10
		assert limits.max_states == 5_000_000
		assert limits.max_td_basis_k == 2

	def test_valid_max_len(self):
		assert config.Limits(1).max_len == 1
		assert config.Limits(16).max_len == 16

	def test_invalid_max_len(self):
		with pytest.raises(ValueError, match='out of range'):
			config.Limits(0)
		with pytest.raises(ValueError, match='out of range'):
			config.Limits(17)

	def test_invalid_max_states(self):
		with pytest.raises(ValueError, match='out of range'):
			config.Limits(max_states=0)

	def test_env_override(self, monkeypatch):
		monkeypatch.setenv(config.MAX_LEN_ENV, '7')
		assert config.Limits.from_env().max_len == 7
		monkeypatch.setenv(config.MAX_LEN_ENV, 'seven')
		with pytest.raises(ValueError, match='not an integer'):
			config.Limits.from_env()

	def test_budget_errors_are_value_errors(self):
		limits = config.Limits(5, max_states=10)
		with pytest.raises(BudgetExceededError, match='out of range'):
			limits.check_len(6)
		with pytest.raises(BudgetExceededError, match='--max-states'):
			limits.check_states(11)
		assert issubclass(BudgetExceededError, ValueError)


class TestPermutationFormat:
	@pytest.mark.parametrize('text', ['112', '1a3', '0,1', '1,,2', '24', '1 2'])
	def test_invalid_text(self, text: str):
		with pytest.raises(PermutationFormatError):
			Permutation.parse(text)

	def test_invalid_values(self):
		with pytest.raises(PermutationFormatError, match='not a permutation'):
			Permutation([1, 3])
		with pytest.raises(PermutationFormatError, match='repeated'):
			Permutation.standardize([5, 5])

	def test_valid_text(self):
		assert Permutation.parse('') == Permutation.identity(0)
		assert Permutation.parse('2,1') == Permutation([2, 1])
		assert Permutation.parse(' 312 ').values == (3, 1, 2)

	def test_model(self):
		assert Model.parse('TD') is Model.TD
		assert Model.parse(Model.PTD) is Model.PTD
		with pytest.raises(ValueError, match='unknown model'):
			Model.parse('reversal')


class TestIndexValidation:
	@pytest.mark.parametrize('t', [(0, 1, 2), (1, 1, 2), (2, 1, 3), (1, 2, 5)])
	def test_invalid_transposition(self, t):
		with pytest.raises(ValueError, match='out of range'):
			apply_transposition(Permutation.identity(3), TranspositionIndices(*t))

	def test_prefix_transposition(self):
		TranspositionIndices(1, 2, 3).validate(3, Model.PTD)
		with pytest.raises(ValueError, match='must start at 1'):
			TranspositionIndices(2, 3, 4).validate(3, Model.PTD)

	def test_index_multiset(self):
		assert IndexMultiset.of(4, 2, 2) == IndexMultiset(2, 2, 4)
		with pytest.raises(ValueError, match='out of range'):
			IndexMultiset(1, 2, 5).validate(4)
		with pytest.raises(ValueError, match='out of range'):
			td_inflate(Permutation.parse('1324'), IndexMultiset(1, 2, 5))

	def test_ptd_case(self):
		p = Permutation.parse('213')
		with pytest.raises(ValueError, match='a < b'):
			ptd_inflate(p, PtdCase(PtdTag.CASE1, 1, 2))
		with pytest.raises(ValueError, match='a > b'):
			ptd_inflate(p, PtdCase(PtdTag.CASE2, 1, 3))
		with pytest.raises(ValueError, match='invalid'):
			ptd_inflate(p, PtdCase(PtdTag.CASE1, 3, 1))
		with pytest.raises(ValueError, match='single position'):
			ptd_inflate(p, PtdCase(PtdTag.CASE3, 1, 2))


class TestPreconditions:
	def test_not_plus_irreducible(self):
		with pytest.raises(ValueError, match='plus irreducible'):
			mi_member(Permutation.parse('12'), Permutation.parse('12'))
		with pytest.raises(ValueError, match='plus irreducible'):
			td_inflate(Permutation.parse('123'), IndexMultiset(1, 1, 1))
		with pytest.raises(ValueError, match='plus irreducible'):
			ptd_parent(Permutation.parse('2314'))

	def test_ptd_parent_starts_with_one(self):
		with pytest.raises(ValueError, match='starts with 1'):
			ptd_parent(Permutation.parse('1324'))

	def test_empty_permutation(self):
		with pytest.raises(ValueError):
			one_point_deletions(Permutation.identity(0))
		with pytest.raises(ValueError):
			breakpoint_count(Permutation.identity(0))

	def test_inflation_vector(self):
		with pytest.raises(ValueError, match='does not match'):
			monotone_inflate(Permutation.parse('21'), [1])
		with pytest.raises(ValueError, match='negative'):
			monotone_inflate(Permutation.parse('21'), [1, -1])

	def test_k(self):
		with pytest.raises(ValueError, match='out of range'):
			generating_set(0, Model.TD)
		with pytest.raises(ValueError, match='out of range'):
			basis(0, Model.PTD)
		with pytest.raises(ValueError, match='out of range'):
			verify_class_closure(-1, Model.TD, 3)
		with pytest.raises(ValueError, match='unknown method'):
			generating_set(1, Model.TD, 'guess')  # type: ignore

	def test_radius(self):
		with pytest.raises(ValueError, match='out of range'):
			DistanceEngine(Model.TD, config.Limits(5)).ball(3, -1)

	def test_pairwise_length_mismatch(self):
		engine = DistanceEngine(Model.TD, config.Limits(5))
		with pytest.raises(ValueError, match='lengths'):
			engine.pairwise_distance(Permutation.parse('12'), Permutation.parse('123'))


class TestBudget:
	def test_enumeration_cap(self):
		with pytest.raises(BudgetExceededError):
			enumerate_plus_irreducible(6, config.Limits(5))

	def test_ball_cap(self):
		with pytest.raises(BudgetExceededError):
			DistanceEngine(Model.PTD, config.Limits(5)).ball(6, 1)

	def test_state_cap(self):
		engine = DistanceEngine(Model.TD, config.Limits(8, max_states=100))
		with pytest.raises(BudgetExceededError, match='states'):
			engine.distance(Permutation.parse('87654321'))

	def test_td_basis_refused(self):
		limits = config.Limits(10)
		with pytest.raises(BudgetExceededError, match='refused'):
			basis(3, Model.TD, limits=limits)
		with pytest.raises(BudgetExceededError, match='refused'):
			basis_via_poset_descent(3, Model.TD, limits=limits)

	def test_genset_cap(self):
		with pytest.raises(BudgetExceededError):
			generating_set(2, Model.TD, 'constructive', config.Limits(6))
