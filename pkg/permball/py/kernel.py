from typing import Iterable, List, Sequence, Set, Tuple

from typing_extensions import Final

# docstrings are in permball/kernel.py
BITS: Final[int] = 4
MAX_WORD_LEN: Final[int] = 64 // BITS
_NIBBLE: Final[int] = (1 << BITS) - 1


def _span_mask(lo: int, hi: int) -> int:
	return ((1 << (BITS * (hi - lo))) - 1) << (BITS * lo)


def pack(values: Sequence[int]) -> int:
	if len(values) > MAX_WORD_LEN:
		raise ValueError(f'length {len(values)} is out of range [0, {MAX_WORD_LEN}]')
	word = 0
	for pos, value in enumerate(values):
		word |= (value - 1) << (BITS * pos)
	return word


def unpack(word: int, n: int) -> Tuple[int, ...]:
	return tuple(((word >> (BITS * pos)) & _NIBBLE) + 1 for pos in range(n))


def identity_word(n: int) -> int:
	return pack(range(1, n + 1))


def swap_blocks(word: int, i: int, j: int, k: int) -> int:
	left = (word & _span_mask(i, j)) << (BITS * (k - j))
	right = (word & _span_mask(j, k)) >> (BITS * (j - i))
	return (word & ~_span_mask(i, k)) | left | right


def neighbor_words(word: int, n: int, prefix_only: bool) -> List[int]:
	result: List[int] = []
	i_stop = min(1, n) if prefix_only else n
	for i in range(i_stop):
		for j in range(i + 1, n):
			for k in range(j + 1, n + 1):
				result.append(swap_blocks(word, i, j, k))
	return result


def expand_frontier(frontier: Iterable[int], n: int, prefix_only: bool, seen: Set[int]) -> Set[int]:
	fresh: Set[int] = set()
	# speed up variable lookup
	span_mask = _span_mask
	bits = BITS
	i_stop = min(1, n) if prefix_only else n
	triples = [
		(i, j, k, span_mask(i, j), span_mask(j, k), ~span_mask(i, k), bits * (k - j), bits * (j - i))
		for i in range(i_stop)
		for j in range(i + 1, n)
		for k in range(j + 1, n + 1)
	]
	for word in frontier:
		for _, _, _, mask_left, mask_right, mask_keep, shift_left, shift_right in triples:
			new_word = (word & mask_keep) | ((word & mask_left) << shift_left) | ((word & mask_right) >> shift_right)
			if new_word not in seen:
				seen.add(new_word)
				fresh.add(new_word)
	return fresh
