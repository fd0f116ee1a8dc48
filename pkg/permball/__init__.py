__version__ = '0.1.0'

__all__ = [
	'BudgetExceededError',
	'IndexMultiset',
	'Limits',
	'Model',
	'PermSet',
	'Permutation',
	'PermutationFormatError',
	'TranspositionIndices',
	'ball',
	'basis',
	'basis_via_poset_descent',
	'distance',
	'generating_set_constructive',
	'generating_set_direct',
	'pairwise_distance',
	'run_suite',
]

from permball.analysis import generating_set_constructive, generating_set_direct
from permball.basis import basis, basis_via_poset_descent
from permball.common import Model
from permball.config import Limits
from permball.errors import BudgetExceededError, PermutationFormatError
from permball.models import TranspositionIndices, ball, distance, pairwise_distance
from permball.permutation import IndexMultiset, PermSet, Permutation
from permball.verify import run_suite
