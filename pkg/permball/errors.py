class PermutationFormatError(ValueError):
	"""
	The text or sequence does not describe a permutation of 1..n
	"""
	pass


class BudgetExceededError(ValueError):
	"""
	The requested computation would exceed one of the configured limits
	"""
	pass
