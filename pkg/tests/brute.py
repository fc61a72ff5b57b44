"""Naive reference implementations, independent of the package's checker and search."""

from itertools import combinations, product


def lex_pairs(n):
    return list(combinations(range(n), 2))


def star_arrives(n, colors, missing, m):
    pairs = lex_pairs(n)
    for center in range(n):
        others = [v for v in range(n) if v != center]
        for leaves in combinations(others, m):
            if all(colors[pairs.index(tuple(sorted((center, v))))] != missing for v in leaves):
                return True
    return False


def matching_number(n, colors, allowed):
    edges = [e for e, c in zip(lex_pairs(n), colors) if c in allowed]
    best = 0
    for k in range(1, len(edges) + 1):
        if 2 * k > n:
            break
        if any(len({x for e in sub for x in e}) == 2 * k for sub in combinations(edges, k)):
            best = k
        else:
            break
    return best


def arrives(n, t, colors, stars, s=None):
    for i, m in enumerate(stars, start=1):
        if star_arrives(n, colors, i, m):
            return True
    if s is not None:
        return matching_number(n, colors, set(range(1, t))) >= s
    return False


def ramsey(t, stars, s=None, n_max=6):
    for n in range(1, n_max + 1):
        if all(arrives(n, t, cols, stars, s)
               for cols in product(range(1, t + 1), repeat=n * (n - 1) // 2)):
            return n
    return None


def ramsey_raw(spec, t, n_max=6):
    """Least n for an arbitrary list of (pattern, missing color) targets."""
    def hit(n, cols):
        for pattern, miss in spec:
            if hasattr(pattern, "m"):
                if star_arrives(n, cols, miss, pattern.m):
                    return True
            elif matching_number(n, cols, set(range(1, t + 1)) - {miss}) >= pattern.s:
                return True
        return False

    for n in range(1, n_max + 1):
        if all(hit(n, cols) for cols in product(range(1, t + 1), repeat=n * (n - 1) // 2)):
            return n
    return None
