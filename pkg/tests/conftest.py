import random

import pytest

from qisv.algebra import Element


def random_element(pres, rng: random.Random, max_len: int = 4, max_terms: int = 4, coeff: int = 3) -> Element:
    """Random combination of words in the declared generators of ``pres``."""
    gens = pres.generators
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        word = tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))) if gens else ()
        terms[word] = terms.get(word, 0) + rng.randint(-coeff, coeff)
    return Element(terms, pres.tag)


@pytest.fixture
def rng():
    return random.Random(20240611)
