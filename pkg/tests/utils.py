import itertools
from typing import Iterable, List

from permball.permutation import Permutation, PermSet

# the 11 generators of B_2 under block transpositions
TD_GENERATORS_K2 = ['1324657', '1352647', '1354627', '1364257', '1426357', '1436527', '1462537', '1524637', '1536247', '1624357', '1632547']
PTD_GENERATORS_K2 = ['32415', '41325', '31425', '24135', '24315', '42135']
PTD_BASIS_K2 = [
	'1432', '2143', '4321',
	'13524', '14253', '24351', '25314', '25413', '35142', '35214', '35241', '41352', '42513', '42531', '43152', '51324', '52413', '53142',
]


def perms(texts: Iterable[str]) -> PermSet:
	return PermSet.parse(texts)


def strs(items: Iterable[Permutation]) -> List[str]:
	return [str(p) for p in items]


def rank(seq: Iterable[int]) -> Permutation:
	seq = list(seq)
	order = sorted(range(len(seq)), key=seq.__getitem__)
	values = [0] * len(seq)
	for r, i in enumerate(order, start=1):
		values[i] = r
	return Permutation(values)


def brute_force_contains(text: Permutation, patt: Permutation) -> bool:
	for positions in itertools.combinations(range(len(text)), len(patt)):
		if rank(text[i] for i in positions) == patt:
			return True
	return False
