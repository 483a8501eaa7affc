"""Subset DP kernel for Hamilton path counts from a fixed start vertex."""

import math

import numpy as np
from numba import njit

# primes below 2**62, so a sum of two residues stays under 2**63
PRIMES = (2**61 - 1, 2**60 - 93, 2**59 - 55, 2**58 - 27, 2**57 - 13, 2**56 - 5)

INT64_MAX = 2**63 - 1


@njit(cache=True)
def _path_counts_kernel(nbr, start_nbr, k, modulus):
    # Vertices other than the start are relabeled 0..k-1. dp[mask, v] counts
    # paths that leave the start, visit exactly `mask`, and end at v.
    size = 1 << k
    dp = np.zeros((size, k), dtype=np.int64)
    for v in range(k):
        if (start_nbr >> v) & 1:
            dp[1 << v, v] = 1
    for mask in range(1, size):
        for v in range(k):
            c = dp[mask, v]
            if c == 0:
                continue
            free = nbr[v] & ~mask
            w = 0
            while free:
                if free & 1:
                    nxt = mask | (1 << w)
                    if modulus:
                        dp[nxt, w] = (dp[nxt, w] + c) % modulus
                    else:
                        dp[nxt, w] += c
                free >>= 1
                w += 1
    return dp[size - 1].copy()


def _relabel(rows, start):
    n = len(rows)
    others = [v for v in range(n) if v != start]
    pos = {v: i for i, v in enumerate(others)}

    def squash(row):
        out = 0
        for v in others:
            if (row >> v) & 1:
                out |= 1 << pos[v]
        return out

    nbr = np.array([squash(rows[v]) for v in others], dtype=np.int64)
    return nbr, squash(rows[start]), others


def hamilton_path_counts(rows, start, *, force_modular=False):
    """Exact number of Hamilton paths from ``start`` to every other vertex.

    Returns a dict ``{end: count}``. Values fit int64 while ``(n-1)!`` does;
    past that the DP runs modulo several primes and is recombined by CRT.
    """
    n = len(rows)
    if n < 2:
        return {}
    nbr, start_nbr, others = _relabel(rows, start)
    k = n - 1
    bound = math.factorial(k)
    if bound <= INT64_MAX and not force_modular:
        final = _path_counts_kernel(nbr, start_nbr, k, 0)
        return {v: int(final[i]) for i, v in enumerate(others)}

    moduli = []
    product = 1
    for p in PRIMES:
        moduli.append(p)
        product *= p
        if product > bound:
            break
    else:
        raise OverflowError(f"not enough CRT primes for order {n}")
    residues = [_path_counts_kernel(nbr, start_nbr, k, p) for p in moduli]
    out = {}
    for i, v in enumerate(others):
        out[v] = _crt([int(r[i]) for r in residues], moduli)
    return out


def _crt(residues, moduli):
    x, mod = 0, 1
    for r, p in zip(residues, moduli):
        # x + mod * t == r (mod p)
        t = ((r - x) * pow(mod, -1, p)) % p
        x += mod * t
        mod *= p
    return x
