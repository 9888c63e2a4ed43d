#!/usr/bin/env python3
"""Discrepancies of a contracted chain and the K_W-degree of curves meeting it.

A (-1)-curve meeting both ends of a T-chain always lands on K_W with degree
0, which is why such curves obstruct ampleness.  Curves meeting the chain
elsewhere usually do not.
"""
from tsing.discrepancy import IncidenceProfile, contracted_degree, discrepancies, end_discrepancies
from tsing.tchain import classify


def show(chain, meets, kx=-1):
    deg = contracted_degree(chain, IncidenceProfile(meets, kx))
    where = ", ".join(f"C{i}×{k}" for i, k in sorted(meets.items()))
    print(f"  {str(chain):<18} F·K_X={kx:>2} meets {where:<14} -> φ(F)·K_W = {deg}")


def main():
    for chain in ([4], [2, 5], [3, 5, 2], [2, 2, 6, 2, 4]):
        mu = discrepancies(chain)
        p = classify(chain).params
        print(f"{str(chain):<14} μ = {', '.join(map(str, mu))}")
        print(f"{'':<14} ends from (n, a) = ({p.n}, {p.a}): {', '.join(map(str, end_discrepancies(p.n, p.a)))}")
    print()

    print("curves meeting both ends:")
    show([4], {1: 2})
    show([2, 5], {1: 1, 2: 1})
    show([2, 2, 6, 2, 4], {1: 1, 5: 1})
    print("other incidences:")
    show([3, 5, 2], {2: 1, 3: 1})
    show([2, 5, 3], {2: 1})
    show([2, 7, 2, 2, 3], {2: 1, 5: 1})
    # fibres need not be (-1)-curves
    show([2, 5, 3], {1: 1}, kx=0)


if __name__ == "__main__":
    main()
