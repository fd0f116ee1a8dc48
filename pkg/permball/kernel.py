"""
Packed-word kernel of the distance engine

A permutation of length n <= 16 is packed into one integer, 4 bits per entry,
position 0 in the lowest bits, each entry stored as value - 1.
Block positions given to the kernel are 0-based, blocks are half-open: [i, j) and [j, k)

- pack(values) -> int
- unpack(word, n) -> tuple of values
- identity_word(n) -> packed identity of length n
- swap_blocks(word, i, j, k) -> word with the blocks [i, j) and [j, k) exchanged
- neighbor_words(word, n, prefix_only) -> every one-move result, lexicographic in (i, j, k), i == 0 when prefix_only
- expand_frontier(frontier, n, prefix_only, seen) -> the words one move away from the frontier that are not in `seen`.
  `seen` is updated in place
"""

__all__ = [
	'IMPL_NAME',
	'expand_frontier',
	'identity_word',
	'neighbor_words',
	'pack',
	'swap_blocks',
	'unpack',
]

try:
	from permball.cy import expand_frontier, identity_word, neighbor_words, pack, swap_blocks, unpack
	IMPL_NAME = 'cy'
except ImportError:
	from permball.py import expand_frontier, identity_word, neighbor_words, pack, swap_blocks, unpack
	IMPL_NAME = 'py'
	import warnings
	warnings.warn('Failed to import permball cython extension, fallback to pure python implementation which is a lot slower.')
