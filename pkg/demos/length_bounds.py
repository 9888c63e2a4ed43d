#!/usr/bin/env python3
"""How long can the T-chain of a stable surface W be?

Runs the bound ledger on the extremal surfaces for each Kodaira dimension
of the minimal model, then on a rational example where the answer depends
on the degree of the plane curve that becomes the chain.
"""
from tsing.bounds import (
    Kappa,
    ScenarioRecord,
    TypeI,
    TypeII,
    bound_not_nef,
    check_scenario,
    classification_fixtures,
    verify_fixture,
)
from tsing.hj import Chain


def main():
    seen = set()
    for f in classification_fixtures(max_param=3):
        family = f.name.split(" ")[0]
        if family in seen or f.record is None:
            continue
        seen.add(family)
        print(verify_fixture(f).line)
    print()

    # one scenario in full
    rep = check_scenario(ScenarioRecord(
        kappa=Kappa.TWO, ks_nef=True, ks2=1, kw2=3, lam=1,
        diagram=TypeII(1, -7),
        chain=Chain([2, 7, 2, 2, 3]), m=3,
    ))
    for item in rep.ledger:
        print(f"  {'ok ' if item.holds else 'BAD'} {item.name}: {item.lhs} {item.relation} {item.rhs}")
    print()

    # rational S = P^2: lambda is -3 times the degree of the plane curve
    chain = Chain([2] * 8 + [12])
    ks2, m = 9, 16
    kw2 = ks2 - m + len(chain) - 1 + 1
    print(f"septic example {chain}: K_W² = {kw2}, r - d = {len(chain) - 1}")
    for degree in (5, 6, 7, 8):
        lam = -3 * degree
        print(f"  plane degree {degree}: type I bound r - d ≤ {bound_not_nef(kw2 - ks2, lam, TypeI())}")


if __name__ == "__main__":
    main()
