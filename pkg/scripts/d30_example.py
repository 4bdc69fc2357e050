"""Walk through the dihedral group of order 30: a Schmidt subgroup that is
modular without being subnormal, and the decomposition that explains it."""
from schmidtcheck.catalog import build_named
from schmidtcheck.classify import is_modular_characterized, is_permutable, is_subnormal
from schmidtcheck.lattice import enumerate_subgroups, normal_core
from schmidtcheck.verify import verify_theorem1


def main():
    G = build_named("dihedral:30")
    L = enumerate_subgroups(G)
    rep = verify_theorem1(G, L)
    print(f"{G.label}: {len(L)} subgroups, |F(G)| = {rep.fitting_order}, "
          f"G/F(G) of order {rep.quotient_order}, cyclic: {rep.quotient_cyclic}")

    c = next(c for c in rep.schmidt_subgroups if c.subgroup.order == 6)
    M = c.subgroup
    print(f"M = subgroup #{c.index}, order {M.order}, members {list(M.members)}")
    print(f"  subnormal: {is_subnormal(G, L, M).subnormal}, permutable: {is_permutable(G, L, M)}")
    v = is_modular_characterized(G, L, M, strict=True)
    print(f"  modular by the lattice identities: {v.direct}, by the decomposition: {v.characterized}")
    print(f"  core M_G of order {normal_core(G, L, M).order}, |G| / |M| = {G.order // M.order}")
    d = v.decomposition
    for S, Q, w in zip(d.S_list, d.Q_list, d.p_groups):
        print(f"  factor S of order {S.order}: S/M_G is a {w.kind} P-group with p={w.p}, n={w.n}, q={w.q}; "
              f"M meets S in order {Q.order}, a Sylow {w.q}-subgroup modulo M_G")
    print(f"  T of order {d.T.order}")
    for name, r in rep.lemma_results.items():
        print(f"  {name:<13} {r.status} ({r.checked} checked)")


if __name__ == "__main__":
    main()
