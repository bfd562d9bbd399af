"""Build the chopped lattice of a small order and look inside it."""

from chopped import build_chopped
from chopped.corpus import NAMED
from chopped.construction import BLOCK, Role, role_name
from chopped.dot import chopped_to_dot
from chopped.oracle import IdealLattice

# a three-element chain p > q > r
P = NAMED["3-chain"]
print("order:", P.elements, [str(c) for c in P.covers])

# each cover x > y gives a six-element block; the local names for q > r
for role in Role:
    print(f"  {role.name:5s} -> {role_name(role, ('q', 'r'))}")
print("block is a lattice with", len(BLOCK), "elements and height", BLOCK.height.max())

M = build_chopped(P)
print("M has", len(M), "elements,", len(M.atoms()), "atoms")
print("maximal elements:", [e.name for e in M.maximal_elements()])

# the two blocks share q1 (upper atom of p > q, left lower atom of q > r)
a, b = M.maximal_elements()
print("meet of the two tops:", M.meet(a, b).name)

# overlap census by kind
for kind in "VCH":
    print(kind, [str(s) for s in M.suborders(kind)])

# ideals of M, as compatible vectors
IdM = IdealLattice(M)
print("|Id M| =", len(IdM))
for c in IdM.ideals[:6]:
    print("  ", c)

with open("chain3.dot", "w") as fh:
    fh.write(chopped_to_dot(M, name="3-chain"))
print("wrote chain3.dot")
