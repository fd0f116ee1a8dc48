import os
from typing import ClassVar, Optional

from permball.errors import BudgetExceededError

MAX_LEN_ENV = 'PERMBALL_MAX_LEN'


class Limits:
	"""
	Budget shared by every enumerating operation. Exceeding it is an error, never a truncation
	"""
	__slots__ = ('max_len', 'max_states', 'max_td_basis_k')

	MAX_LEN_LOWER_BOUND: ClassVar[int] = 1
	MAX_LEN_UPPER_BOUND: ClassVar[int] = 16  # 4 bits per entry in a 64-bit word
	MAX_STATES_LOWER_BOUND: ClassVar[int] = 1
	DEFAULT_MAX_LEN: ClassVar[int] = 10
	DEFAULT_MAX_STATES: ClassVar[int] = 5_000_000
	DEFAULT_MAX_TD_BASIS_K: ClassVar[int] = 2

	def __init__(
			self,
			max_len: Optional[int] = None,
			*,
			max_states: Optional[int] = None,
			max_td_basis_k: Optional[int] = None,
	):
		if max_len is None:
			max_len = self.DEFAULT_MAX_LEN
		if max_states is None:
			max_states = self.DEFAULT_MAX_STATES
		if max_td_basis_k is None:
			max_td_basis_k = self.DEFAULT_MAX_TD_BASIS_K
		if not (self.MAX_LEN_LOWER_BOUND <= max_len <= self.MAX_LEN_UPPER_BOUND):
			raise ValueError(f'max_len {max_len} is out of range [{self.MAX_LEN_LOWER_BOUND}, {self.MAX_LEN_UPPER_BOUND}]')
		if max_states < self.MAX_STATES_LOWER_BOUND:
			raise ValueError(f'max_states {max_states} is out of range [{self.MAX_STATES_LOWER_BOUND}, +inf)')
		if max_td_basis_k < 0:
			raise ValueError(f'max_td_basis_k {max_td_basis_k} is out of range [0, +inf)')

		self.max_len = max_len
		self.max_states = max_states
		self.max_td_basis_k = max_td_basis_k

	@classmethod
	def from_env(cls, *, max_states: Optional[int] = None) -> 'Limits':
		raw = os.environ.get(MAX_LEN_ENV, '').strip()
		max_len: Optional[int] = None
		if raw:
			try:
				max_len = int(raw)
			except ValueError:
				raise ValueError(f'{MAX_LEN_ENV}={raw!r} is not an integer') from None
		return cls(max_len, max_states=max_states)

	def check_len(self, n: int, what: str = 'length'):
		if n > self.max_len:
			raise BudgetExceededError(f'{what} {n} is out of range [0, {self.max_len}], raise --max-len to allow it')

	def check_states(self, count: int, what: str = 'search'):
		if count > self.max_states:
			raise BudgetExceededError(f'{what} reached {count} states, out of range [0, {self.max_states}], raise --max-states to allow it')

	def __repr__(self) -> str:
		return f'<{self.__class__.__name__} max_len={self.max_len} max_states={self.max_states} max_td_basis_k={self.max_td_basis_k}>'


def resolve(limits: Optional[Limits]) -> Limits:
	return limits if limits is not None else Limits.from_env()
