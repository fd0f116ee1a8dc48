from permball.cy.kernel import expand_frontier, identity_word, neighbor_words, pack, swap_blocks, unpack

__all__ = [
	'expand_frontier',
	'identity_word',
	'neighbor_words',
	'pack',
	'swap_blocks',
	'unpack',
]
