from __future__ import annotations
"""
The Artin representation of braid groups by automorphisms of free groups.
A letter s_i acts by x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i, and a word
acts letter by letter from left to right
"""

from functools import lru_cache

from src.braids.braid_word import BraidWord, PureBraidWord, pure_generator
from src.braids.free_word import FreeAutomorphism, FreeWord
from src.errors import DomainError


@lru_cache(maxsize=None)
def letter_automorphism(index: int, exp: int, rank: int) -> FreeAutomorphism:
    """Return the automorphism of the free group of the given [rank] induced
    by s_[index]^[exp]"""
    x = [FreeWord.generator(k, rank) for k in range(1, rank + 1)]
    images = list(x)
    left, right = x[index - 1], x[index]
    if exp > 0:
        images[index - 1] = left * right * left.inverse()
        images[index] = left
    else:
        images[index - 1] = right
        images[index] = right.inverse() * left * right
    return FreeAutomorphism(rank, tuple(images))


def artin_automorphism(braid: BraidWord | PureBraidWord) -> FreeAutomorphism:
    """Return the automorphism of F_n induced by the given [braid]"""
    if isinstance(braid, PureBraidWord):
        result = FreeAutomorphism.identity(braid.strands)
        for (i, j), exp in braid.factors:
            step = generator_automorphism(i, j, braid.strands)
            if exp < 0:
                step = inverse_generator_automorphism(i, j, braid.strands)
            for _ in range(abs(exp)):
                result = result.then(step)
        return result

    result = FreeAutomorphism.identity(braid.strands)
    for index, exp in braid.letters:
        result = result.then(letter_automorphism(index, exp, braid.strands))
    return result


@lru_cache(maxsize=None)
def generator_automorphism(i: int, j: int, strands: int) -> FreeAutomorphism:
    return artin_automorphism(pure_generator(i, j, strands))


@lru_cache(maxsize=None)
def inverse_generator_automorphism(i: int, j: int, strands: int) -> FreeAutomorphism:
    return artin_automorphism(pure_generator(i, j, strands).inverse())


def artin_act(braid: BraidWord | PureBraidWord, word: FreeWord) -> FreeWord:
    """Return the image of [word] under the Artin action of [braid]"""
    if braid.strands != word.rank:
        raise DomainError(f'Cannot act with a braid on {braid.strands} strands on a word of rank {word.rank}')
    return artin_automorphism(braid).apply(word)
