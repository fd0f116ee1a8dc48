import functools
import itertools
import math
from typing import AbstractSet, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from permuta import Perm

from permball import config
from permball.errors import PermutationFormatError

Values = Tuple[int, ...]
# one non-negative length per position of the base permutation, zeros allowed
InflationVector = Tuple[int, ...]


@functools.lru_cache(maxsize=1 << 16)
def _perm_of(values: Values) -> Perm:
	return Perm(v - 1 for v in values)


def _values_of(perm: Perm) -> Values:
	return tuple(v + 1 for v in perm)


def _standardize(seq: Sequence[int]) -> Values:
	return _values_of(Perm.to_standard(seq))


@functools.total_ordering
class Permutation:
	"""
	A permutation of 1..n in one-line notation, immutable

	Indexing with ``p[i]`` is 0-based like any Python sequence, while every
	position handed to the rearrangement operations is 1-based
	"""
	__slots__ = ('_values',)

	def __init__(self, values: Iterable[int]):
		values = tuple(values)
		if sorted(values) != list(range(1, len(values) + 1)):
			raise PermutationFormatError(f'{values} is not a permutation of 1..{len(values)}')
		self._values: Values = values

	@classmethod
	def _trusted(cls, values: Values) -> 'Permutation':
		perm = cls.__new__(cls)
		perm._values = values
		return perm

	@classmethod
	def identity(cls, n: int) -> 'Permutation':
		if n < 0:
			raise ValueError(f'length {n} is out of range [0, +inf)')
		return cls._trusted(tuple(range(1, n + 1)))

	@classmethod
	def standardize(cls, seq: Iterable[int]) -> 'Permutation':
		seq = list(seq)
		if len(set(seq)) != len(seq):
			raise PermutationFormatError(f'{seq} contains repeated entries')
		return cls._trusted(_standardize(seq))

	@classmethod
	def parse(cls, text: str) -> 'Permutation':
		"""
		Accepts the compact digit form ``1352647`` (n <= 9) and the comma separated form ``10,2,...``
		"""
		text = text.strip()
		if not text:
			return cls.identity(0)
		try:
			if ',' in text:
				values = [int(part) for part in text.split(',')]
			elif text.isdigit():
				values = [int(ch) for ch in text]
			else:
				raise ValueError(text)
		except ValueError:
			raise PermutationFormatError(f'cannot parse {text!r} as a permutation') from None
		return cls(values)

	@property
	def values(self) -> Values:
		return self._values

	def is_identity(self) -> bool:
		return all(v == i for i, v in enumerate(self._values, start=1))

	def inverse(self) -> 'Permutation':
		inv = [0] * len(self._values)
		for i, v in enumerate(self._values, start=1):
			inv[v - 1] = i
		return Permutation._trusted(tuple(inv))

	def compose(self, other: 'Permutation') -> 'Permutation':
		"""
		(self o other)(i) = self(other(i))
		"""
		if len(self) != len(other):
			raise ValueError(f'cannot compose permutations of lengths {len(self)} and {len(other)}')
		return Permutation._trusted(tuple(self._values[v - 1] for v in other._values))

	def __len__(self) -> int:
		return len(self._values)

	def __iter__(self) -> Iterator[int]:
		return iter(self._values)

	def __getitem__(self, index: int) -> int:
		return self._values[index]

	def __eq__(self, other) -> bool:
		if not isinstance(other, Permutation):
			return NotImplemented
		return self._values == other._values

	def __lt__(self, other: 'Permutation') -> bool:
		if not isinstance(other, Permutation):
			return NotImplemented
		return self._values < other._values

	def __hash__(self) -> int:
		return hash(self._values)

	def __str__(self) -> str:
		if len(self._values) <= 9:
			return ''.join(map(str, self._values))
		return ','.join(map(str, self._values))

	def __repr__(self) -> str:
		return f'{self.__class__.__name__}({str(self)!r})'

	def to_perm(self) -> Perm:
		"""
		The 0-based :class:`permuta.Perm` with the same one-line notation
		"""
		return _perm_of(self._values)

	@classmethod
	def from_perm(cls, perm: Perm) -> 'Permutation':
		return cls._trusted(_values_of(perm))


class PermSet(AbstractSet[Permutation]):
	"""
	A deduplicated set of permutations, iterated in lexicographic order of the one-line notation
	"""
	__slots__ = ('_elements', '_ordered')

	def __init__(self, elements: Iterable[Permutation] = ()):
		self._elements = frozenset(elements)
		self._ordered: Tuple[Permutation, ...] = tuple(sorted(self._elements))

	@classmethod
	def parse(cls, texts: Iterable[str]) -> 'PermSet':
		return cls(Permutation.parse(text) for text in texts)

	def __contains__(self, item) -> bool:
		return item in self._elements

	def __iter__(self) -> Iterator[Permutation]:
		return iter(self._ordered)

	def __len__(self) -> int:
		return len(self._elements)

	def __hash__(self) -> int:
		return self._hash()

	def __repr__(self) -> str:
		return f'{self.__class__.__name__}({self.to_strings()})'

	def of_length(self, n: int) -> 'PermSet':
		return PermSet(p for p in self._ordered if len(p) == n)

	def to_strings(self) -> List[str]:
		return [str(p) for p in self._ordered]


class IndexMultiset(NamedTuple):
	"""
	Three positions i <= j <= k, 1-based, possibly repeated
	"""
	i: int
	j: int
	k: int

	@classmethod
	def of(cls, a: int, b: int, c: int) -> 'IndexMultiset':
		i, j, k = sorted((a, b, c))
		return cls(i, j, k)

	@classmethod
	def all_of(cls, n: int) -> Iterator['IndexMultiset']:
		for i, j, k in itertools.combinations_with_replacement(range(1, n + 1), 3):
			yield cls(i, j, k)

	def validate(self, n: int):
		if not (1 <= self.i <= self.j <= self.k <= n):
			raise ValueError(f'index multiset {tuple(self)} is out of range for length {n}')

	def multiplicities(self) -> Dict[int, int]:
		counts: Dict[int, int] = {}
		for index in self:
			counts[index] = counts.get(index, 0) + 1
		return counts


def strips(p: Permutation) -> List[Tuple[int, int]]:
	"""
	Maximal runs of positions whose values increase by exactly one, as (1-based start, length)
	"""
	result: List[Tuple[int, int]] = []
	values = p.values
	start = 0
	for i in range(1, len(values) + 1):
		if i == len(values) or values[i] != values[i - 1] + 1:
			result.append((start + 1, i - start))
			start = i
	return result


def is_plus_irreducible(p: Permutation) -> bool:
	values = p.values
	return all(values[i + 1] != values[i] + 1 for i in range(len(values) - 1))


def reduce(p: Permutation) -> Permutation:
	# the first entry of a strip is its minimum
	heads = [p.values[start - 1] for start, _ in strips(p)]
	return Permutation._trusted(_standardize(heads))


def contains_pattern(text: Permutation, patt: Permutation) -> bool:
	if len(patt) == 0:
		return True
	if len(patt) > len(text):
		return False
	return text.to_perm().contains(patt.to_perm())


def one_point_deletions(p: Permutation) -> PermSet:
	if len(p) == 0:
		raise ValueError('cannot delete a point from the empty permutation')
	perm = p.to_perm()
	return PermSet(Permutation.from_perm(perm.remove(i)) for i in range(len(p)))


def monotone_inflate(p: Permutation, v: Sequence[int]) -> Permutation:
	"""
	Replace the i-th entry of p by an increasing run of v[i] entries, keeping the relative order of the runs.
	Zero-length runs delete the entry
	"""
	v = tuple(v)
	if len(v) != len(p):
		raise ValueError(f'inflation vector length {len(v)} does not match permutation length {len(p)}')
	if any(x < 0 for x in v):
		raise ValueError(f'inflation vector {v} has negative entries')

	position_of = p.inverse().values
	offset = [0] * (len(p) + 1)
	acc = 0
	for value in range(1, len(p) + 1):
		offset[value] = acc
		acc += v[position_of[value - 1] - 1]

	result: List[int] = []
	for value, size in zip(p.values, v):
		base = offset[value]
		result.extend(range(base + 1, base + size + 1))
	return Permutation._trusted(tuple(result))


def mi_member(p: Permutation, alpha: Permutation) -> bool:
	"""
	Whether p is a monotone inflation of the plus irreducible permutation alpha.

	p = alpha[v] for some v with zeros allowed iff red(p) equals the reduction of a restriction of alpha.
	Keeping one entry per strip of that restriction shows it is enough to look for red(p) as a pattern of alpha
	"""
	if not is_plus_irreducible(alpha):
		raise ValueError(f'{alpha} is not plus irreducible, reduce it first')
	return contains_pattern(alpha, reduce(p))


def breakpoint_count(p: Permutation) -> int:
	values = p.values
	n = len(values)
	if n == 0:
		raise ValueError('breakpoints are undefined for the empty permutation')
	count = sum(1 for i in range(n - 1) if values[i + 1] != values[i] + 1)
	if values[0] != 1:
		count += 1
	if values[-1] != n:
		count += 1
	return count


def plus_irreducible_count(n: int) -> int:
	"""
	f_n, the number of plus irreducible permutations of length n + 1 (OEIS A000255)
	"""
	if n < 0:
		raise ValueError(f'n {n} is out of range [0, +inf)')
	prev, cur = 1, 1  # f_0, f_1
	if n == 0:
		return prev
	for m in range(2, n + 1):
		prev, cur = cur, m * cur + (m - 1) * prev
	return cur


def plus_irreducible_count_closed_form(n: int) -> int:
	if n < 0:
		raise ValueError(f'n {n} is out of range [0, +inf)')
	fact_n = math.factorial(n)
	return sum((-1) ** k * (n + 1 - k) * (fact_n // math.factorial(k)) for k in range(n + 1))


def all_permutations(n: int, limits: Optional[config.Limits] = None) -> Iterator[Permutation]:
	config.resolve(limits).check_len(n)
	for values in itertools.permutations(range(1, n + 1)):
		yield Permutation._trusted(values)


def enumerate_plus_irreducible(n: int, limits: Optional[config.Limits] = None) -> PermSet:
	if n < 0:
		raise ValueError(f'length {n} is out of range [0, +inf)')
	config.resolve(limits).check_len(n)

	result: List[Permutation] = []
	prefix: List[int] = []
	unused = [True] * (n + 2)

	def grow():
		if len(prefix) == n:
			result.append(Permutation._trusted(tuple(prefix)))
			return
		last = prefix[-1] if prefix else -1
		for value in range(1, n + 1):
			if unused[value] and value != last + 1:
				unused[value] = False
				prefix.append(value)
				grow()
				prefix.pop()
				unused[value] = True

	grow()
	return PermSet(result)


def inflation_vectors(size: int, max_total: int) -> Iterator[InflationVector]:
	"""
	Every vector of `size` non-negative entries with sum at most max_total
	"""
	if size == 0:
		yield ()
		return
	for first in range(max_total + 1):
		for rest in inflation_vectors(size - 1, max_total - first):
			yield (first,) + rest


def inflations(alpha: Permutation, max_len: int, limits: Optional[config.Limits] = None) -> PermSet:
	"""
	All monotone inflations of alpha of length at most max_len, by direct enumeration of the vectors
	"""
	config.resolve(limits).check_len(max_len)
	return PermSet(monotone_inflate(alpha, v) for v in inflation_vectors(len(alpha), max_len))
