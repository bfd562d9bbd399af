"""The cut algorithm on a few hand-picked pairs, next to the closed form."""

from chopped import build_chopped, parse_vector, run_algorithm, s1960, split_set
from chopped.corpus import NAMED
from chopped.algorithm import explore_all_sequences, m2_closed_form


def show(M, u_text, v_text):
    u, v = parse_vector(M, u_text), parse_vector(M, v_text)
    run = run_algorithm(M, u, v)
    print(f"u  = {u}\nv  = {v}")
    print(f"m  = {run.m}")
    print(f"m2 = {m2_closed_form(M, u, v)}")
    for k, f in enumerate(run.trace, 1):
        print(f"  cut {k}: {f}")
    split = split_set(M, u, v)
    print(f"s     = {run.s}")
    print(f"s1960 = {s1960(M, u, v)}  (split atoms: {sorted(a.name for a in split.atoms) or '-'})")
    ex = explore_all_sequences(M, u, v)
    print(f"valid cut sequences: {ex.sequences}, distinct results: {len(ex.results)}\n")


# V-order: p and q both cover r. The r-atoms sit under the shared sum r,
# so an r-atom facing an upper atom must be cut (a V-cut)
V = build_chopped(NAMED["V"])
show(V, "p>r=r2,q>r=r2", "p>r=r,q>r=q(r)")

# 3-chain, case A: q2 in u and p1 fresh, so q>r loses its atom
C = build_chopped(NAMED["3-chain"])
show(C, "p>q=q2,q>r=0", "p>q=p(q),q>r=q1")

# 3-chain, case B: the q>r coordinate is cut from q(r) down to r
show(C, "p>q=q2,q>r=0", "p>q=p(q),q>r=q(r)")

# diamond: two independent C-failures, cut in either order, same result
D = build_chopped(NAMED["diamond"])
show(D, "t>l=l2,t>r=r2,l>b=0,r>b=0", "t>l=t(l),t>r=t(r),l>b=l1,r>b=r1")
