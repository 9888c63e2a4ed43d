#!/usr/bin/env python3
"""Wahl chains and how long they can get for a given index.

Walks from a fraction to its chain and back, then grows T-chains from the
two seeds and watches the index n against Fibonacci numbers: for a fixed
r - d the largest n is F_{r-d}, and for d = 1 it is hit by [3,...,3,5,3,...,3,2].
"""
from tsing.hj import hj_eval, hj_expand, inverse_weight, reverse
from tsing.tchain import classify, enumerate_tchains, expand_left, expand_right, fibonacci, initial_chain


def main():
    print("1/25(1,9) resolves to", hj_expand((25, 9)))
    c = hj_expand((25, 14))
    print("1/25(1,14) resolves to", c, "which is the reverse:", reverse(c) == hj_expand((25, 9)))
    print("weights of reversed chains are inverse mod m:", inverse_weight(hj_eval(c)))
    print()

    # one step of each expansion from [4]
    seed = initial_chain(1)
    for grow in (expand_left, expand_right):
        g = grow(seed)
        print(f"{grow.__name__}({seed}) = {g}:", classify(g))
    print("d = 3 starts from", initial_chain(3))
    print()

    print(" k  chains  max n  F_k  a longest-index chain")
    for k in range(9):
        chains = enumerate_tchains(1, k)
        best = max(chains, key=lambda ch: (classify(ch).params.n, tuple(ch)))
        n = classify(best).params.n
        print(f"{k:>2}  {len(chains):>6}  {n:>5}  {fibonacci(k):>3}  {best}")

    # the same ceiling for larger d
    for d in (2, 3):
        n = max(classify(ch).params.n for ch in enumerate_tchains(d, 6))
        print(f"d={d}, k=6: max n = {n}, F_6 = {fibonacci(6)}")


if __name__ == "__main__":
    main()
