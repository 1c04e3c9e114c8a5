"""Oráculos por força bruta, independentes do BSGS, para conferir o motor em grupos pequenos."""

from nucleo.permutation import Permutation, commutator
from utils.errors import CapacityError


def closure(generators, degree, bound):
    """Fecho por busca em largura multiplicando pelos geradores."""
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = [identity]
    for x in queue:
        for s in generators:
            y = x * s
            if y not in seen:
                if len(seen) >= bound:
                    raise CapacityError(len(seen) + 1, bound, 'enumeração do oráculo')
                seen.add(y)
                queue.append(y)
    return seen


def brute_elements(G, bound):
    return closure(G.generators, G.degree, bound)


def brute_order(G, bound):
    return len(brute_elements(G, bound))


def brute_centralizer(elements, x):
    return {g for g in elements if g * x == x * g}


def brute_classes(elements):
    remaining = set(elements)
    classes = []
    for x in sorted(elements):
        if x not in remaining:
            continue
        cls = {~g * x * g for g in elements}
        remaining -= cls
        classes.append(cls)
    return classes


def brute_derived(elements, degree, bound):
    comms = {commutator(x, y) for x in elements for y in elements}
    return closure(sorted(comms), degree, bound)


def is_p_group_set(elements, p):
    n = len(elements)
    while n % p == 0:
        n //= p
    return n == 1
