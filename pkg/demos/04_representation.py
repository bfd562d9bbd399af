"""Congruences of Id M against downsets of the order."""

from chopped import build_chopped, congruence_lattice, downset_lattice
from chopped.corpus import NAMED
from chopped.dot import lattice_to_dot
from chopped.oracle import IdealLattice, verify_representation

for name in ["2-chain", "V", "3-chain", "hat", "fence"]:
    rep = verify_representation(NAMED[name])
    print(f"{name:8s} |Id M| = {rep.ideal_lattice_size:3d}  |Con| = {rep.congruence_lattice_size:2d}"
          f"  |downsets| = {rep.downset_lattice_size:2d}  iso: {rep.ok}")

# the explicit bijection for V: each congruence, as a partition of Id M,
# goes to one downset of {p, q, r}
P = NAMED["V"]
M = build_chopped(P)
IdM = IdealLattice(M)
con = congruence_lattice(IdM.lattice)
rep = verify_representation(P)
for theta, down in rep.bijection.items():
    print(f"  {theta.n_blocks} blocks -> {{{', '.join(sorted(down))}}}")

with open("downsets_V.dot", "w") as fh:
    fh.write(lattice_to_dot(downset_lattice(P), label=lambda d: "{" + ",".join(sorted(d)) + "}"))
print("wrote downsets_V.dot")
