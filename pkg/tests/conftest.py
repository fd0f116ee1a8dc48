import importlib
from types import ModuleType

import pytest

from permball import config
from permball.permutation import Permutation


@pytest.fixture(params=['cy', 'py'])
def kernel_impl(request) -> ModuleType:
	if request.param == 'cy':
		return pytest.importorskip('permball.cy.kernel', reason='cython kernel is not built')
	return importlib.import_module('permball.py.kernel')


@pytest.fixture
def py_kernel() -> ModuleType:
	return importlib.import_module('permball.py.kernel')


@pytest.fixture
def limits() -> config.Limits:
	return config.Limits(10)


@pytest.fixture
def perm():
	return Permutation.parse
