import enum
from typing import Union


class Model(str, enum.Enum):
	"""
	The rearrangement model a distance is measured in
	"""
	TD = 'td'
	PTD = 'ptd'

	@property
	def prefix_only(self) -> bool:
		return self is Model.PTD

	@classmethod
	def parse(cls, value: Union[str, 'Model']) -> 'Model':
		if isinstance(value, Model):
			return value
		try:
			return cls(str(value).lower())
		except ValueError:
			raise ValueError(f'unknown model {value!r}, expected one of {[m.value for m in cls]}') from None

	def __str__(self) -> str:
		return self.value

