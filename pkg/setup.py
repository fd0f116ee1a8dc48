import ast
import contextlib
import functools
import os
import sys
from pathlib import Path
from typing import List

from setuptools import __version__ as setuptools_version
from setuptools import setup, find_packages
from setuptools.command.build_ext import build_ext

HERE = Path(__file__).absolute().parent
REQUIRE_CYTHON_ENV = 'PERMBALL_REQUIRE_CYTHON'


def parse_major(s: str) -> int:
	try:
		return int(s.split('.', 1)[0])
	except (IndexError, ValueError):
		print('Failed to parse version:', s, file=sys.stderr)
		return 0


def read_file(file_name: str) -> str:
	with open(HERE / file_name, 'r', encoding='utf8') as f:
		return f.read()


def read_requirements(file_name: str) -> List[str]:
	return [
		line
		for line in map(str.strip, read_file(file_name).splitlines())
		if line and not line.startswith('#')
	]


@functools.lru_cache(None)
def get_version() -> str:
	tree = ast.parse(read_file('permball/__init__.py'))
	for stmt in tree.body:
		if isinstance(stmt, ast.Assign) and isinstance(stmt.targets[0], ast.Name) and stmt.targets[0].id == '__version__':
			if not isinstance(stmt.value, ast.Constant) or not isinstance(stmt.value.value, str):
				raise TypeError(f'Unexpected type of __version__: {type(stmt.value)}')
			print(f'permball.__version__ = {stmt.value.value}')
			return stmt.value.value
	raise RuntimeError('Cannot find __version__')


class BuildExt(build_ext):
	@classmethod
	@contextlib.contextmanager
	def __wrap_ext_err(cls):
		require_cython = os.environ.get(REQUIRE_CYTHON_ENV, '').lower() in ['true', '1']
		try:
			yield
		except Exception as e:
			print('#' * 100, file=sys.stderr)
			if require_cython:
				print(f'Failed to compile the permball kernel extension, fail hard since {REQUIRE_CYTHON_ENV} is set', file=sys.stderr)
				print(type(e), e, file=sys.stderr)
				print('#' * 100, file=sys.stderr)
				raise e
			print('Failed to compile the permball kernel extension, the pure python kernel will be used, which is a lot slower', file=sys.stderr)
			print(type(e), e, file=sys.stderr)
			print('#' * 100, file=sys.stderr)

	def run(self):
		with self.__wrap_ext_err():
			super().run()

	def build_extensions(self):
		with self.__wrap_ext_err():
			super().build_extensions()


if 'clean' in sys.argv or 'sdist' in sys.argv:  # sdist ships the .pyx only
	ext_modules = []
else:
	from Cython.Build import cythonize
	ext_modules = cythonize(
		'permball/cy/*.pyx',
		compiler_directives={'language_level': '3'},
	)

use_license_expression = parse_major(setuptools_version) >= 77

setup(
	name='permball',
	version=get_version(),
	description='Exact block transposition and prefix transposition distances, balls, generating sets and bases',
	long_description=read_file('README.md'),
	long_description_content_type='text/markdown',
	python_requires='>=3.8',

	packages=find_packages(exclude=['tests', '*.tests', '*.tests.*', 'tests.*']),
	package_data={'permball': ['data/*.json']},
	include_package_data=True,

	install_requires=read_requirements('requirements.txt'),
	extras_require={
		'dev': read_requirements('requirements.dev.txt'),
	},
	entry_points={
		'console_scripts': ['permball = permball.cli:main'],
	},
	**({'license': 'MIT'} if use_license_expression else {}),
	classifiers=[
		*(['License :: OSI Approved :: MIT License'] if not use_license_expression else []),
		'Programming Language :: Python',
		'Programming Language :: Python :: 3.8',
		'Programming Language :: Python :: 3.9',
		'Programming Language :: Python :: 3.10',
		'Programming Language :: Python :: 3.11',
		'Programming Language :: Python :: 3.12',
		'Programming Language :: Python :: 3.13',
		'Topic :: Scientific/Engineering :: Mathematics',
	],
	ext_modules=ext_modules,
	cmdclass={'build_ext': BuildExt},
)
