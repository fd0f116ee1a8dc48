import functools
import logging
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Set, Tuple, Union

from permball import config, kernel
from permball.common import Model
from permball.permutation import Permutation, PermSet, reduce

logger = logging.getLogger(__name__)

ModelLike = Union[Model, str]


class TranspositionIndices(NamedTuple):
	"""
	1 <= i < j < k <= n + 1, exchanging the blocks [i, j - 1] and [j, k - 1]
	"""
	i: int
	j: int
	k: int

	def validate(self, n: int, model: Optional[ModelLike] = None):
		if not (1 <= self.i < self.j < self.k <= n + 1):
			raise ValueError(f'transposition indices {tuple(self)} are out of range for length {n}')
		if model is not None and Model.parse(model).prefix_only and self.i != 1:
			raise ValueError(f'prefix transposition indices must start at 1, got {tuple(self)}')

	def inverse(self) -> 'TranspositionIndices':
		return TranspositionIndices(self.i, self.i + self.k - self.j, self.k)

	@classmethod
	def all_of(cls, n: int, model: ModelLike) -> Iterator['TranspositionIndices']:
		i_stop = min(1, n) if Model.parse(model).prefix_only else n
		for i in range(1, i_stop + 1):
			for j in range(i + 1, n + 1):
				for k in range(j + 1, n + 2):
					yield cls(i, j, k)


def apply_transposition(p: Permutation, t: TranspositionIndices) -> Permutation:
	t.validate(len(p))
	v = p.values
	i, j, k = t.i - 1, t.j - 1, t.k - 1
	return Permutation._trusted(v[:i] + v[j:k] + v[i:j] + v[k:])


def inverse_transposition(t: TranspositionIndices) -> TranspositionIndices:
	return t.inverse()


def neighbors(p: Permutation, m: ModelLike) -> PermSet:
	return PermSet(apply_transposition(p, t) for t in TranspositionIndices.all_of(len(p), m))


class _Levels:
	"""
	Breadth-first levels around the identity of one length, grown lazily
	"""
	__slots__ = ('levels', 'seen', 'complete')

	def __init__(self, n: int):
		start = kernel.identity_word(n)
		self.levels: List[Set[int]] = [{start}]
		self.seen: Set[int] = {start}
		self.complete = False


class DistanceEngine:
	"""
	Exact distances of one model.

	Balls and whole-length tables come from a level-synchronous breadth-first search from the identity;
	single queries run a bidirectional search. td queries are answered on red(p)
	"""

	def __init__(self, model: ModelLike, limits: Optional[config.Limits] = None):
		self.model = Model.parse(model)
		self.limits = config.resolve(limits)
		self.__levels: Dict[int, _Levels] = {}
		self.__balls: Dict[Tuple[int, int], FrozenSet[int]] = {}
		self.__memo: Dict[Tuple[int, int], int] = {}
		self.__pair_memo: Dict[Tuple[int, int, int], int] = {}

	@property
	def prefix_only(self) -> bool:
		return self.model.prefix_only

	def __grow(self, n: int, k: Optional[int]) -> _Levels:
		"""
		Expand the levels of length n up to distance k, or to exhaustion when k is None
		"""
		if n < 0:
			raise ValueError(f'length {n} is out of range [0, +inf)')
		self.limits.check_len(n)
		state = self.__levels.get(n)
		if state is None:
			state = self.__levels[n] = _Levels(n)
		while not state.complete and (k is None or len(state.levels) <= k):
			fresh = kernel.expand_frontier(state.levels[-1], n, self.prefix_only, state.seen)
			self.limits.check_states(len(state.seen), f'{self.model} breadth-first search of length {n}')
			if not fresh:
				state.complete = True
				logger.debug('%s levels of length %d complete, diameter %d, %d states', self.model, n, len(state.levels) - 1, len(state.seen))
				break
			state.levels.append(fresh)
			logger.debug('%s level %d of length %d: %d new states', self.model, len(state.levels) - 1, n, len(fresh))
		return state

	def ball_words(self, n: int, k: int) -> FrozenSet[int]:
		if k < 0:
			raise ValueError(f'radius {k} is out of range [0, +inf)')
		key = (n, k)
		words = self.__balls.get(key)
		if words is None:
			state = self.__grow(n, k)
			words = frozenset().union(*state.levels[:k + 1])
			self.__balls[key] = words
		return words

	def ball(self, n: int, k: int) -> PermSet:
		return PermSet(Permutation._trusted(kernel.unpack(w, n)) for w in self.ball_words(n, k))

	def within(self, p: Permutation, k: int) -> bool:
		"""
		Whether p is at distance at most k, answered from the ball of its length
		"""
		if k < 0:
			return False
		if len(p) <= 1:
			return True
		return kernel.pack(p.values) in self.ball_words(len(p), k)

	def distance_table(self, n: int) -> Dict[Permutation, int]:
		state = self.__grow(n, None)
		table: Dict[Permutation, int] = {}
		for depth, level in enumerate(state.levels):
			for word in level:
				table[Permutation._trusted(kernel.unpack(word, n))] = depth
		return table

	def diameter(self, n: int) -> Tuple[int, PermSet]:
		state = self.__grow(n, None)
		depth = len(state.levels) - 1
		return depth, PermSet(Permutation._trusted(kernel.unpack(w, n)) for w in state.levels[-1])

	def ball_sizes(self, n_max: int, k: int) -> List[int]:
		return [len(self.ball_words(n, k)) for n in range(n_max + 1)]

	def distance(self, p: Permutation) -> int:
		if self.model is Model.TD:
			p = reduce(p)
		n = len(p)
		if n <= 1 or p.is_identity():
			return 0
		word = kernel.pack(p.values)

		state = self.__levels.get(n)
		if state is not None:
			for depth, level in enumerate(state.levels):
				if word in level:
					return depth

		key = (n, word)
		dist = self.__memo.get(key)
		if dist is None:
			dist = self.__search(word, kernel.identity_word(n), n)
			self.__memo[key] = dist
		return dist

	def pairwise_distance(self, p: Permutation, q: Permutation) -> int:
		if len(p) != len(q):
			raise ValueError(f'cannot measure between lengths {len(p)} and {len(q)}')
		self.limits.check_len(len(p))
		if p == q:
			return 0
		source, target = sorted((kernel.pack(p.values), kernel.pack(q.values)))
		# the inverse of a move is a move of the same model, so the metric is symmetric
		key = (len(p), source, target)
		dist = self.__pair_memo.get(key)
		if dist is None:
			dist = self.__search(source, target, len(p))
			self.__pair_memo[key] = dist
		return dist

	def __search(self, source: int, target: int, n: int) -> int:
		self.limits.check_len(n)
		if source == target:
			return 0
		front_a, seen_a = {source}, {source}
		front_b, seen_b = {target}, {target}
		depth_a = depth_b = 0
		# neither side's frontier runs dry on a connected Cayley graph
		while front_a and front_b:
			if len(front_a) <= len(front_b):
				front_a = kernel.expand_frontier(front_a, n, self.prefix_only, seen_a)
				depth_a += 1
				met = not front_a.isdisjoint(seen_b)
			else:
				front_b = kernel.expand_frontier(front_b, n, self.prefix_only, seen_b)
				depth_b += 1
				met = not front_b.isdisjoint(seen_a)
			if met:
				return depth_a + depth_b
			self.limits.check_states(len(seen_a) + len(seen_b), f'{self.model} bidirectional search of length {n}')
		raise AssertionError(f'{self.model} search of length {n} exhausted without meeting')


# each engine keeps its distance tables
@functools.lru_cache(maxsize=8)
def _engine_for(model: Model, max_len: int, max_states: int, max_td_basis_k: int) -> DistanceEngine:
	return DistanceEngine(model, config.Limits(max_len, max_states=max_states, max_td_basis_k=max_td_basis_k))


def get_engine(model: ModelLike, limits: Optional[config.Limits] = None) -> DistanceEngine:
	limits = config.resolve(limits)
	return _engine_for(Model.parse(model), limits.max_len, limits.max_states, limits.max_td_basis_k)


def clear_engines():
	"""
	Drop every cached engine together with its distance tables
	"""
	_engine_for.cache_clear()


def distance(p: Permutation, m: ModelLike, limits: Optional[config.Limits] = None) -> int:
	return get_engine(m, limits).distance(p)


def pairwise_distance(p: Permutation, q: Permutation, m: ModelLike, limits: Optional[config.Limits] = None) -> int:
	return get_engine(m, limits).pairwise_distance(p, q)


def ball(n: int, k: int, m: ModelLike, limits: Optional[config.Limits] = None) -> PermSet:
	return get_engine(m, limits).ball(n, k)


def distance_table(n: int, m: ModelLike, limits: Optional[config.Limits] = None) -> Dict[Permutation, int]:
	return get_engine(m, limits).distance_table(n)


def diameter(n: int, m: ModelLike, limits: Optional[config.Limits] = None) -> Tuple[int, PermSet]:
	return get_engine(m, limits).diameter(n)


def ball_sizes(n_max: int, k: int, m: ModelLike, limits: Optional[config.Limits] = None) -> List[int]:
	return get_engine(m, limits).ball_sizes(n_max, k)
